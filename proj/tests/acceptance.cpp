// Acceptance gate: one line per criterion, PASS/FAIL with wall time, nonzero
// exit if anything fails. Each criterion carries its own runtime budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <tutte/tutte.hpp>

#ifndef TUTTE_TEST_DATA
#define TUTTE_TEST_DATA "."
#endif

using namespace tutte;

namespace {

constexpr int kPrimitives[] = {23, 24, 25, 26, 27, 29, 30, 31, 32, 33, 34};
const std::map<int, int> kHyperplaneCounts = {
    {23, 15}, {24, 21}, {25, 12}, {26, 21}, {27, 45}, {29, 40},
    {30, 60}, {31, 60}, {32, 40}, {33, 45}, {34, 126}};

std::string data_path(const std::string& rel) {
    return std::string(TUTTE_TEST_DATA) + "/" + rel;
}

Poly load_golden(int idx) {
    std::ifstream in(data_path("golden/G" + std::to_string(idx) + ".json"));
    if (!in.good()) throw std::runtime_error("cannot open golden file");
    nlohmann::json j;
    in >> j;
    return poly_from_json(j);
}

Atom st_atom(int idx) {
    Atom a{Atom::Kind::shephard_todd};
    a.st = idx;
    return a;
}

bool check(bool cond, const char* what) {
    if (!cond) std::cout << "    failed: " << what << "\n";
    return cond;
}

// ---- criteria ----

bool golden_reproduction() {
    Catalog cat(data_path("tables"));
    bool ok = true;
    for (int idx : kPrimitives) {
        Poly t = cat.tutte(st_atom(idx));
        ok &= check(t == load_golden(idx), "recurrence vs golden");
    }
    Poly k6 = cat.tutte(st_atom(34));
    ok &= check(k6.coeff(2, 0) == Int("1353024"), "K6 x^2 coefficient");
    ok &= check(k6.coeff(1, 1) == Int("13716864"), "K6 xy coefficient");
    ok &= check(k6.coeff(0, 2) == Int("17962560"), "K6 y^2 coefficient");
    Poly h4 = cat.tutte(st_atom(30));
    ok &= check(h4.coeff(1, 0) == 5040 && h4.coeff(0, 1) == 5040, "H4 linear terms");
    return ok;
}

bool rank2_suite() {
    Catalog cat(data_path("tables"));
    const auto& entries = cat.rank2_entries();
    bool ok = check(entries.size() == 19, "19 rank-2 groups");
    for (auto [idx, c] : entries) {
        Poly t = tutte_rank2(c);
        ok &= check(t.eval(1, 1) == Rat(binomial(c, 2)), "T(1,1) = C(#A,2)");
        ok &= check(t.eval(2, 2) == Rat(Int(1) << c), "T(2,2) = 2^#A");
        ok &= check(t == tutte_crapo(GainArrangement::synthetic_rank2(c)),
                    "closed form vs basis enumeration");
    }
    return ok;
}

bool egf_matrix() {
    bool ok = true;
    auto run = [&](int m, int p, int nmax) {
        for (int n = 0; n <= nmax; ++n) {
            if (p == m && n == 1) continue;  // trivial group, no arrangement extraction
            auto a = GainArrangement::make(m, p, n);
            ok &= check(tutte_egf(m, p, n) == tutte_crapo(a),
                        "series extraction vs basis enumeration");
        }
    };
    run(2, 1, 4);
    run(2, 2, 4);
    run(3, 1, 3);
    run(3, 3, 4);
    run(4, 2, 3);
    run(4, 4, 3);
    run(6, 3, 3);
    return ok;
}

bool flat_identities() {
    bool ok = true;
    std::vector<GainArrangement> matrix;
    for (int n = 2; n <= 5; ++n) matrix.push_back(GainArrangement::make(1, 1, n));
    matrix.push_back(GainArrangement::make(2, 1, 3));
    matrix.push_back(GainArrangement::make(2, 2, 4));
    matrix.push_back(GainArrangement::make(3, 3, 3));
    for (const auto& a : matrix) {
        ok &= check(a.size() <= 20, "matrix stays within 20 hyperplanes");
        ok &= check(check_flat_identity(a), "power sum identity over the lattice");
        ok &= check(tutte_via_flats(a) == tutte_crapo(a), "lattice engine vs enumeration");
    }
    return ok;
}

bool oracle_soundness() {
    std::mt19937_64 rng(0xACCE55);
    bool ok = true;
    int checked = 0;
    while (checked < 1000) {
        int m = 1 + static_cast<int>(rng() % 6);
        std::vector<int> divs;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) divs.push_back(d);
        int p = divs[rng() % divs.size()];
        int n = 1 + static_cast<int>(rng() % 5);
        auto a = GainArrangement::make(m, p, n);
        auto primes = oracle_primes(m);
        for (int rep = 0; rep < 25 && checked < 1050; ++rep, ++checked) {
            std::vector<int> s, t;
            for (int i = 0; i < a.size(); ++i) {
                if (rng() & 1) s.push_back(i);
                if (rng() & 1) t.push_back(i);
            }
            int r0 = finite_field_rank(a, s, primes[0]);
            int r1 = finite_field_rank(a, s, primes[1]);
            int r2 = finite_field_rank(a, s, primes[2]);
            int maj = (r0 == r1 || r0 == r2) ? r0 : r1;
            int rs = a.rank(s);
            ok &= check(rs == maj, "combinatorial vs finite field rank");
            // matroid axioms on the same corpus
            int rt = a.rank(t);
            std::vector<int> uni = s, inter;
            for (int e : t)
                if (std::find(s.begin(), s.end(), e) == s.end())
                    uni.push_back(e);
                else
                    inter.push_back(e);
            ok &= check(rs <= static_cast<int>(s.size()), "rank bounded by size");
            ok &= check(a.rank(uni) >= std::max(rs, rt), "monotonicity");
            ok &= check(a.rank(uni) + a.rank(inter) <= rs + rt, "submodularity");
            if (!ok) return false;
        }
    }
    return ok;
}

bool order_invariance() {
    std::mt19937_64 rng(20260822);
    bool ok = true;
    for (auto [m, p, n] : {std::array<int, 3>{1, 1, 4}, {2, 1, 3}, {3, 3, 3}}) {
        auto a = GainArrangement::make(m, p, n);
        Poly ref = tutte_crapo(a);
        std::vector<int> order(a.size());
        std::iota(order.begin(), order.end(), 0);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            ok &= check(tutte_crapo_ordered(a, order) == ref, "order invariance");
        }
    }
    return ok;
}

bool golden_specializations() {
    bool ok = true;
    for (int idx : kPrimitives) {
        Poly t = load_golden(idx);
        int rk = shephard_todd_rank(idx);
        int hyp = kHyperplaneCounts.at(idx);
        ok &= check(t.eval(2, 2) == Rat(Int(1) << hyp), "T(2,2) = 2^#A");
        ok &= check(t.deg_y() == hyp - rk, "y-degree = #A - rank");
        ok &= check(t.deg_x() == rk, "x-degree = rank");
    }
    return ok;
}

bool charpoly_spot_check() {
    Poly t = load_golden(23);
    // chi(q) = (-1)^rk T(1-q, 0), rank 3
    std::map<int, Int> chi;
    Poly ty0 = t.at_y0();
    for (auto& [e, c] : ty0.terms())
        for (int s = 0; s <= e.first; ++s)
            chi[s] += c * binomial(e.first, s) * Int((s % 2) ? 1 : -1);
    // expansion oracle for (q-1)(q-5)(q-9)
    std::map<int, Int> expect = {{0, Int(1)}};
    for (int root : {1, 5, 9}) {
        std::map<int, Int> next;
        for (auto& [e, c] : expect) {
            next[e + 1] += c;
            next[e] -= c * root;
        }
        expect = std::move(next);
    }
    for (auto it = chi.begin(); it != chi.end();)
        it = it->second == 0 ? chi.erase(it) : std::next(it);
    return check(chi == expect, "H3 characteristic polynomial expansion");
}

bool performance_envelope() {
    using clock = std::chrono::steady_clock;
    bool ok = true;
    auto timed = [&](const char* what, double budget_s, auto&& fn) {
        auto t0 = clock::now();
        fn();
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        std::printf("    %s: %.3fs (budget %.1fs)\n", what, dt, budget_s);
        ok &= check(dt < budget_s, what);
    };
    timed("basis enumeration Sym(6)", 1.0,
          [] { tutte_crapo(GainArrangement::make(1, 1, 6)); });
    timed("basis enumeration G(2,2,5)", 1.0,
          [] { tutte_crapo(GainArrangement::make(2, 2, 5)); });
    timed("recurrence for the 126-hyperplane group", 1.0, [] {
        Catalog cat(data_path("tables"));
        cat.tutte(st_atom(34));
    });
    return ok;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<bool()> fn;
    };
    const Criterion criteria[] = {
        {"golden reproduction (11 groups)", 5.0, golden_reproduction},
        {"rank-2 closed form suite", 1.0, rank2_suite},
        {"series extraction vs enumeration matrix", 10.0, egf_matrix},
        {"intersection lattice identities", 30.0, flat_identities},
        {"rank oracle soundness (1000+ subsets)", 10.0, oracle_soundness},
        {"basis enumeration order invariance", 5.0, order_invariance},
        {"golden specializations and degree laws", 5.0, golden_specializations},
        {"characteristic polynomial spot check", 1.0, charpoly_spot_check},
        {"performance envelope", 5.0, performance_envelope},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto t0 = clock::now();
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& ex) {
            std::cout << "    exception: " << ex.what() << "\n";
        }
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        if (dt >= c.budget_s) {
            std::cout << "    over time budget: " << dt << "s >= " << c.budget_s << "s\n";
            ok = false;
        }
        std::printf("criterion %d %s: %s (%.2fs)\n", index, c.name, ok ? "PASS" : "FAIL", dt);
        if (!ok) ++failed;
    }
    if (failed == 0) {
        std::printf("acceptance: all %d criteria PASS\n",
                    static_cast<int>(std::size(criteria)));
        return 0;
    }
    std::printf("acceptance: %d criteria FAIL\n", failed);
    return 1;
}
