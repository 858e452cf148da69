#pragma once

// Generating-function engine for the G(m,p,n) families. The exponential
// generating function of the Tutte polynomials is A(t) * B(t)^alpha with
//   A(t) = sum y^{m C(n,2) + n} / ((y-1)^n n!) t^n   (p != m)
//   A(t) = sum y^{m C(n,2)}     / ((y-1)^n n!) t^n   (p == m)
//   B(t) = sum m^n y^{C(n,2)}   / ((y-1)^n n!) t^n
//   alpha = ((x-1)(y-1) - 1) / m,
// where alpha is a genuine element of the coefficient ring and B^alpha is the
// formal power of a series with constant term 1. The t^n coefficient times n!
// is asserted to lie in Z[x,y].
//
// Conventions at the degenerate ends:
//   p == m, n == 1: the series is built with the k != 1 term excluded, so the
//     extraction yields x - 1, which is NOT the Tutte polynomial of any
//     arrangement (that group is trivial, T = 1). Callers beware.
//   m == 1: the product degenerates to F^{(x-1)(y-1)}, every coefficient
//     carrying an (x-1) factor; the engine divides it out and returns the
//     genuine Tutte polynomial of the symmetric group, including n == 1 -> 1.

#include <map>
#include <stdexcept>
#include <vector>

#include "poly.hpp"
#include "series.hpp"

namespace tutte {

enum class SeriesKind { exponent_weighted, plain };

inline Series base_series(SeriesKind kind, int m, int n_max) {
    if (m < 1 || n_max < 0) throw std::invalid_argument("bad series parameters");
    Series s(n_max);
    Int mpow = 1;
    for (int n = 0; n <= n_max; ++n) {
        int choose2 = n * (n - 1) / 2;
        QPoly num;
        if (kind == SeriesKind::exponent_weighted) {
            num.add_term(0, m * choose2 + n, Rat(1, factorial_int(n)));
        } else {
            num.add_term(0, choose2, Rat(mpow, factorial_int(n)));
        }
        s[n] = Localized(std::move(num), n);
        mpow *= m;
    }
    return s;
}

namespace detail {

inline Series first_factor(int m, bool equal_family, int n_max) {
    if (!equal_family) return base_series(SeriesKind::exponent_weighted, m, n_max);
    Series s(n_max);
    for (int n = 0; n <= n_max; ++n) {
        int choose2 = n * (n - 1) / 2;
        QPoly num;
        num.add_term(0, m * choose2, Rat(1, factorial_int(n)));
        s[n] = Localized(std::move(num), n);
    }
    return s;
}

}  // namespace detail

inline Poly tutte_egf(int m, int p, int n) {
    if (m < 1 || p < 1 || m % p != 0 || n < 0)
        throw std::invalid_argument("bad G(m,p,n) parameters");
    bool equal = (p == m);
    Series a = detail::first_factor(m, equal, n);
    Series b = base_series(SeriesKind::plain, m, n);
    QPoly alpha_num;  // (x-1)(y-1) - 1 = xy - x - y
    alpha_num.add_term(1, 1, Rat(1, m));
    alpha_num.add_term(1, 0, Rat(-1, m));
    alpha_num.add_term(0, 1, Rat(-1, m));
    Localized alpha(std::move(alpha_num));
    Series prod = series_mul(a, series_pow_formal(b, alpha, n), n);
    Localized c = prod[n].scaled(Rat(factorial_int(n)));
    Poly out = c.to_poly();  // throws unless the coefficient is in Z[x,y]
    if (m == 1 && n >= 1) out = div_xm1(out);
    return out;
}

// Parabolic subgroup census of G(m,p,n): each conjugacy class of parabolics
// has the shape G(m,p,k) x prod_i Sym(i)^{h_i} with k + sum i h_i = n, and
//   count = m^{n - k - sum h_i} n! / (k! prod i!^{h_i} h_i!).
// k = 1 is excluded when p == m (that factor would be trivial yet eat a
// coordinate). For m == 1 only k = 0 signatures exist (set partitions).
struct CensusEntry {
    int k = 0;
    std::map<int, int> parts;  // i -> h_i
    Int count;
};

inline std::vector<CensusEntry> parabolic_census(int m, int p, int n) {
    if (m < 1 || p < 1 || m % p != 0 || n < 0)
        throw std::invalid_argument("bad G(m,p,n) parameters");
    bool equal = (p == m);
    std::vector<CensusEntry> out;
    auto emit = [&](int k, const std::map<int, int>& parts) {
        int sum_h = 0;
        Int denom = factorial_int(k);
        for (auto& [i, h] : parts) {
            sum_h += h;
            Int fi = factorial_int(i);
            for (int t = 0; t < h; ++t) denom *= fi;
            denom *= factorial_int(h);
        }
        Int count = factorial_int(n);
        count /= denom;
        if (m > 1) {
            int e = n - k - sum_h;
            for (int t = 0; t < e; ++t) count *= m;
        }
        out.push_back({k, parts, count});
    };
    // partitions of r as i -> multiplicity, descending largest part
    auto partitions = [&](int r, auto&& visit) {
        std::map<int, int> cur;
        auto rec = [&](auto&& self, int left, int maxpart) -> void {
            if (left == 0) {
                visit(cur);
                return;
            }
            for (int i = std::min(left, maxpart); i >= 1; --i) {
                ++cur[i];
                self(self, left - i, i);
                if (--cur[i] == 0) cur.erase(i);
            }
        };
        rec(rec, r, r);
    };
    if (m == 1) {
        partitions(n, [&](const std::map<int, int>& parts) { emit(0, parts); });
        return out;
    }
    for (int k = 0; k <= n; ++k) {
        if (k == 1 && equal) continue;
        partitions(n - k, [&](const std::map<int, int>& parts) { emit(k, parts); });
    }
    return out;
}

}  // namespace tutte
