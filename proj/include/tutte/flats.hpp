#pragma once

// Flat enumeration and the two intersection-lattice identities used as both a
// third engine and cross-checks:
//   (1)  T(x,y)   = sum over flats B of (x-1)^{rk A - rk B} T_B(1,y)
//   (2)  y^{#A}   = sum over flats B of (y-1)^{rk B} T_B(1,y)
// (2) determines every T_B(1,y) bottom-up by rank, with an exact division by
// (y-1)^{rk B} whose zero remainder is asserted.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "crapo.hpp"
#include "poly.hpp"

namespace tutte {

struct Flat {
    std::uint64_t mask = 0;  // closed hyperplane set
    int rank = 0;
};

template <class O>
std::uint64_t closure_mask(const O& arr, std::uint64_t mask) {
    int count = arr.size();
    std::vector<int> base;
    for (int i = 0; i < count; ++i)
        if (mask >> i & 1) base.push_back(i);
    int r = arr.rank(base);
    std::uint64_t out = mask;
    for (int h = 0; h < count; ++h) {
        if (out >> h & 1) continue;
        base.push_back(h);
        if (arr.rank(base) == r) out |= 1ull << h;
        base.pop_back();
    }
    return out;
}

template <class O>
std::vector<int> closure(const O& arr, const std::vector<int>& subset) {
    std::uint64_t mask = 0;
    for (int i : subset) mask |= 1ull << i;
    std::uint64_t cl = closure_mask(arr, mask);
    std::vector<int> out;
    for (int i = 0; i < arr.size(); ++i)
        if (cl >> i & 1) out.push_back(i);
    return out;
}

// all flats, sorted by (rank, mask); includes the closure of the empty set
// and the full arrangement
template <class O>
std::vector<Flat> enumerate_flats(const O& arr) {
    int count = arr.size();
    if (count > 30) throw std::invalid_argument("flat enumeration limited to 30 hyperplanes");
    auto rank_of = [&](std::uint64_t mask) {
        std::vector<int> s;
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1) s.push_back(i);
        return arr.rank(s);
    };
    std::map<std::uint64_t, int> seen;
    std::vector<std::uint64_t> queue;
    std::uint64_t bottom = closure_mask(arr, 0);
    seen[bottom] = rank_of(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        std::uint64_t f = queue.back();
        queue.pop_back();
        for (int h = 0; h < count; ++h) {
            if (f >> h & 1) continue;
            std::uint64_t cl = closure_mask(arr, f | (1ull << h));
            if (!seen.count(cl)) {
                seen[cl] = rank_of(cl);
                queue.push_back(cl);
            }
        }
    }
    std::vector<Flat> flats;
    flats.reserve(seen.size());
    for (auto& [mask, r] : seen) flats.push_back({mask, r});
    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.mask < b.mask;
    });
    return flats;
}

namespace detail {

inline int popcount64(std::uint64_t v) {
    int c = 0;
    while (v) {
        v &= v - 1;
        ++c;
    }
    return c;
}

// Solve identity (2) within the sub-lattice of each flat, in rank order:
// T_B(1,y) = [ y^{#B} - sum over proper subflats C of (y-1)^{rk C} T_C(1,y) ]
//            / (y-1)^{rk B}
inline std::map<std::uint64_t, Poly> solve_t1y(const std::vector<Flat>& flats) {
    std::map<std::uint64_t, Poly> t1y;
    for (const Flat& f : flats) {
        Poly acc = Poly::term(0, popcount64(f.mask), Int(1));
        for (const Flat& sub : flats) {
            if (sub.mask == f.mask || (sub.mask & ~f.mask)) continue;
            acc -= pow_ym1(sub.rank) * t1y.at(sub.mask);
        }
        t1y[f.mask] = div_ym1(acc, f.rank);  // throws unless division is exact
    }
    return t1y;
}

}  // namespace detail

template <class O>
Poly tutte_via_flats(const O& arr) {
    auto flats = enumerate_flats(arr);
    auto t1y = detail::solve_t1y(flats);
    int full = flats.back().rank;
    Poly total;
    for (const Flat& f : flats) total += pow_xm1(full - f.rank) * t1y.at(f.mask);
    return total;
}

// Verifies identity (2) with T_B(1,y) computed by the independent basis-
// activity engine on the restriction to each flat.
template <class O>
bool check_flat_identity(const O& arr) {
    std::vector<Flat> flats;
    try {
        flats = enumerate_flats(arr);
    } catch (const std::exception&) {
        return false;
    }
    Poly rhs;
    for (const Flat& f : flats) {
        std::vector<int> picks;
        for (int i = 0; i < arr.size(); ++i)
            if (f.mask >> i & 1) picks.push_back(i);
        SubsetOracle<O> sub(arr, picks);
        Poly tb = tutte_crapo(sub).at_x1();
        rhs += pow_ym1(f.rank) * tb;
    }
    return rhs == Poly::term(0, arr.size(), Int(1));
}

}  // namespace tutte
