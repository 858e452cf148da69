#include <set>

#include "helpers.hpp"

using namespace tutte;

TEST_CASE("closure adds exactly the dependent hyperplanes", "[flats]") {
    auto a = GainArrangement::make(2, 1, 2);  // coord0 coord1 edge010 edge011
    REQUIRE(closure(a, {}).empty());
    REQUIRE(closure(a, {2}) == std::vector<int>{2});
    REQUIRE(closure(a, {2, 3}) == std::vector<int>{0, 1, 2, 3});
    REQUIRE(closure(a, {0, 1}) == std::vector<int>{0, 1, 2, 3});

    auto braid = GainArrangement::make(1, 1, 4);
    // edges 01 and 12 force 02
    REQUIRE(closure(braid, {0, 3}) == std::vector<int>{0, 1, 3});
}

TEST_CASE("flat enumeration matches known lattice sizes", "[flats]") {
    REQUIRE(enumerate_flats(GainArrangement::make(2, 1, 2)).size() == 6);
    REQUIRE(enumerate_flats(GainArrangement::make(1, 1, 3)).size() == 5);
    REQUIRE(enumerate_flats(GainArrangement::make(1, 1, 4)).size() == 15);  // set partitions
    REQUIRE(enumerate_flats(GainArrangement::make(1, 1, 5)).size() == 52);
}

TEST_CASE("flats are closed, distinct and rank-labelled", "[flats]") {
    auto a = GainArrangement::make(2, 1, 3);
    auto flats = enumerate_flats(a);
    std::set<std::uint64_t> seen;
    bool has_empty = false, has_full = false;
    for (const auto& f : flats) {
        REQUIRE(seen.insert(f.mask).second);
        std::vector<int> elems;
        for (int i = 0; i < a.size(); ++i)
            if (f.mask >> i & 1) elems.push_back(i);
        REQUIRE(a.rank(elems) == f.rank);
        auto cl = closure(a, elems);
        REQUIRE(static_cast<int>(cl.size()) == static_cast<int>(elems.size()));
        if (f.mask == 0) has_empty = true;
        if (static_cast<int>(elems.size()) == a.size()) has_full = true;
    }
    REQUIRE(has_empty);
    REQUIRE(has_full);
}

TEST_CASE("lattice identity engine agrees with basis enumeration", "[flats]") {
    for (auto [m, p, n] : {std::array<int, 3>{1, 1, 4}, {2, 1, 3}, {2, 2, 3}, {3, 3, 3}}) {
        auto a = GainArrangement::make(m, p, n);
        REQUIRE(tutte_via_flats(a) == tutte_crapo(a));
    }
}

TEST_CASE("power sum identity over the lattice holds", "[flats]") {
    for (auto [m, p, n] : {std::array<int, 3>{1, 1, 4}, {1, 1, 5}, {2, 1, 3}, {3, 3, 3},
                           {2, 2, 4}}) {
        REQUIRE(check_flat_identity(GainArrangement::make(m, p, n)));
    }
}

TEST_CASE("flat enumeration refuses oversized input", "[flats]") {
    REQUIRE_THROWS_AS(enumerate_flats(GainArrangement::make(1, 1, 9)), std::invalid_argument);
}
