#include "helpers.hpp"

using namespace tutte;
using tutte_test::catalog;

TEST_CASE("closed form for generic rank-2 line arrangements", "[rank2]") {
    REQUIRE(tutte_rank2(2) == Poly::x().pow(2));
    REQUIRE(tutte_rank2(3) == Poly::x().pow(2) + Poly::x() + Poly::y());
    REQUIRE_THROWS_AS(tutte_rank2(1), std::invalid_argument);
}

TEST_CASE("closed form agrees with basis enumeration for many sizes", "[rank2]") {
    for (int c = 2; c <= 20; ++c)
        REQUIRE(tutte_rank2(c) == tutte_crapo(GainArrangement::synthetic_rank2(c)));
}

TEST_CASE("rank-2 degree and counting specializations", "[rank2]") {
    for (int c : {2, 5, 9, 34, 62}) {
        Poly t = tutte_rank2(c);
        REQUIRE(t.deg_x() == 2);
        REQUIRE(t.deg_y() == std::max(0, c - 2));
        REQUIRE(t.eval(1, 1) == Rat(binomial(c, 2)));  // bases = pairs of lines
        REQUIRE(t.eval(2, 2) == Rat(Int(1) << c));
    }
}

TEST_CASE("hyperplane count table drives the rank-2 groups", "[rank2]") {
    const std::map<int, int> expected = {
        {4, 4},   {5, 8},   {6, 10},  {7, 14},  {8, 18},  {9, 30},  {10, 34},
        {11, 46}, {12, 12}, {13, 18}, {14, 20}, {15, 26}, {16, 12}, {17, 42},
        {18, 32}, {19, 62}, {20, 20}, {21, 50}, {22, 30}};
    REQUIRE(catalog().rank2_entries() == expected);
    for (auto [idx, c] : expected) {
        Poly t = catalog().tutte(tutte_test::st_atom(idx));
        REQUIRE(t == tutte_rank2(c));
    }
}
