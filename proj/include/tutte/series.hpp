#pragma once

// Truncated power series in t with Localized coefficients. All operations are
// exact through the truncation order and drop higher terms.

#include <stdexcept>
#include <vector>

#include "localized.hpp"

namespace tutte {

struct Series {
    // coeff[k] is the coefficient of t^k; order = coeff.size() - 1
    std::vector<Localized> coeff;

    explicit Series(int order = 0) : coeff(order + 1) {}
    int order() const { return static_cast<int>(coeff.size()) - 1; }
    Localized& operator[](int k) { return coeff[k]; }
    const Localized& operator[](int k) const { return coeff[k]; }
};

inline Series series_mul(const Series& a, const Series& b, int order) {
    Series r(order);
    for (int n = 0; n <= order; ++n) {
        Localized acc;
        for (int k = 0; k <= n; ++k) {
            if (k > a.order() || n - k > b.order()) continue;
            acc += a[k] * b[n - k];
        }
        r[n] = acc;
    }
    return r;
}

// f^alpha for f with constant term 1 and alpha in the coefficient ring,
// by the logarithmic-derivative recurrence
//   n g[n] = sum_{k=1..n} (alpha k - (n-k)) f[k] g[n-k],  g[0] = 1.
inline Series series_pow_formal(const Series& f, const Localized& alpha, int order) {
    if (f.order() < 0 || !f[0].is_one())
        throw std::invalid_argument("series_pow_formal needs constant term 1");
    Series g(order);
    g[0] = Localized::one();
    for (int n = 1; n <= order; ++n) {
        Localized acc;
        for (int k = 1; k <= n; ++k) {
            if (k > f.order()) break;
            Localized w = alpha.scaled(k) - Localized::constant(n - k);
            acc += w * f[k] * g[n - k];
        }
        g[n] = acc.scaled(Rat(1, n));
    }
    return g;
}

// exp of a series with constant term 0:  n g[n] = sum_{k=1..n} k f[k] g[n-k]
inline Series series_exp(const Series& f, int order) {
    if (f.order() >= 0 && !f[0].is_zero())
        throw std::invalid_argument("series_exp needs constant term 0");
    Series g(order);
    g[0] = Localized::one();
    for (int n = 1; n <= order; ++n) {
        Localized acc;
        for (int k = 1; k <= n; ++k) {
            if (k > f.order()) break;
            acc += f[k].scaled(k) * g[n - k];
        }
        g[n] = acc.scaled(Rat(1, n));
    }
    return g;
}

// log of a series with constant term 1:
//   g[n] = f[n] - (1/n) sum_{k=1..n-1} k g[k] f[n-k]
inline Series series_log(const Series& f, int order) {
    if (f.order() < 0 || !f[0].is_one())
        throw std::invalid_argument("series_log needs constant term 1");
    Series g(order);
    for (int n = 1; n <= order; ++n) {
        Localized acc;
        for (int k = 1; k < n; ++k) {
            if (n - k > f.order()) continue;
            acc += g[k].scaled(k) * f[n - k];
        }
        Localized fn = n <= f.order() ? f[n] : Localized::zero();
        g[n] = fn - acc.scaled(Rat(1, n));
    }
    return g;
}

}  // namespace tutte
