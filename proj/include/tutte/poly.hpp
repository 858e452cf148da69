#pragma once

// Exact bivariate polynomial arithmetic. Coefficients are arbitrary-precision
// integers (Poly) or rationals (QPoly); the zero coefficient is never stored.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace tutte {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// exponent pair: .first = x-degree, .second = y-degree
using Exp = std::pair<int, int>;

template <class C>
class BasicPoly {
public:
    using coeff_type = C;
    using map_type = std::map<Exp, C>;

    BasicPoly() = default;
    explicit BasicPoly(C c) {
        if (c != 0) terms_[{0, 0}] = std::move(c);
    }

    static BasicPoly term(int i, int j, C c) {
        BasicPoly p;
        p.add_term(i, j, std::move(c));
        return p;
    }
    static BasicPoly x() { return term(1, 0, C(1)); }
    static BasicPoly y() { return term(0, 1, C(1)); }
    static BasicPoly one() { return BasicPoly(C(1)); }

    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(int i, int j, const C& c) {
        if (c == 0) return;
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            terms_.emplace(Exp{i, j}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    C coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? C(0) : it->second;
    }

    // -1 on the zero polynomial
    int deg_x() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, C(-c));
        return *this;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    BasicPoly scaled(const C& s) const {
        BasicPoly r;
        if (s == 0) return r;
        for (auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) {
        return !(a == b);
    }

    Rat eval(const Rat& x0, const Rat& y0) const {
        Rat acc = 0;
        for (auto& [e, c] : terms_) {
            Rat t = Rat(c);
            for (int k = 0; k < e.first; ++k) t *= x0;
            for (int k = 0; k < e.second; ++k) t *= y0;
            acc += t;
        }
        return acc;
    }

    // substitute x = 1, collapsing onto the y-axis
    BasicPoly at_x1() const {
        BasicPoly r;
        for (auto& [e, c] : terms_) r.add_term(0, e.second, c);
        return r;
    }
    // substitute y = 0
    BasicPoly at_y0() const {
        BasicPoly r;
        for (auto& [e, c] : terms_)
            if (e.second == 0) r.add_term(e.first, 0, c);
        return r;
    }

    BasicPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        BasicPoly r = one(), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

private:
    map_type terms_;
};

using Poly = BasicPoly<Int>;
using QPoly = BasicPoly<Rat>;

// (x-1)^k and (y-1)^k with integer binomial coefficients
inline Poly pow_xm1(int k) {
    return (Poly::x() - Poly::one()).pow(k);
}
inline Poly pow_ym1(int k) {
    return (Poly::y() - Poly::one()).pow(k);
}

inline QPoly to_qpoly(const Poly& p) {
    QPoly q;
    for (auto& [e, c] : p.terms()) q.add_term(e.first, e.second, Rat(c));
    return q;
}

// succeeds only when every coefficient is an integer
inline Poly to_int_poly(const QPoly& q) {
    Poly p;
    for (auto& [e, c] : q.terms()) {
        if (denominator(c) != 1)
            throw std::domain_error("non-integer coefficient");
        p.add_term(e.first, e.second, numerator(c));
    }
    return p;
}

// Exact division by (y-1)^k; throws if not divisible. Works per x-slice by
// synthetic division (Horner carries).
template <class C>
BasicPoly<C> div_ym1(const BasicPoly<C>& p, int power = 1) {
    BasicPoly<C> cur = p;
    for (int rep = 0; rep < power; ++rep) {
        // slice: x-degree -> dense coefficients in y
        std::map<int, std::map<int, C>> byx;
        for (auto& [e, c] : cur.terms()) byx[e.first][e.second] = c;
        BasicPoly<C> out;
        for (auto& [i, slice] : byx) {
            int d = slice.rbegin()->first;
            C carry = 0;
            for (int j = d; j >= 1; --j) {
                auto it = slice.find(j);
                if (it != slice.end()) carry += it->second;
                out.add_term(i, j - 1, carry);
            }
            auto it0 = slice.find(0);
            C rem = carry + (it0 == slice.end() ? C(0) : it0->second);
            if (rem != 0) throw std::domain_error("not divisible by (y-1)");
        }
        cur = std::move(out);
    }
    return cur;
}

// Exact division by (x-1)^k; throws if not divisible.
template <class C>
BasicPoly<C> div_xm1(const BasicPoly<C>& p, int power = 1) {
    BasicPoly<C> cur = p;
    for (int rep = 0; rep < power; ++rep) {
        std::map<int, std::map<int, C>> byy;
        for (auto& [e, c] : cur.terms()) byy[e.second][e.first] = c;
        BasicPoly<C> out;
        for (auto& [j, slice] : byy) {
            int d = slice.rbegin()->first;
            C carry = 0;
            for (int i = d; i >= 1; --i) {
                auto it = slice.find(i);
                if (it != slice.end()) carry += it->second;
                out.add_term(i - 1, j, carry);
            }
            auto it0 = slice.find(0);
            C rem = carry + (it0 == slice.end() ? C(0) : it0->second);
            if (rem != 0) throw std::domain_error("not divisible by (x-1)");
        }
        cur = std::move(out);
    }
    return cur;
}

template <class C>
bool divisible_ym1(const BasicPoly<C>& p) {
    // (y-1) | p  iff  every x-slice vanishes at y = 1
    std::map<int, C> sums;
    for (auto& [e, c] : p.terms()) sums[e.first] += c;
    for (auto& [i, s] : sums)
        if (s != 0) return false;
    return true;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

inline Int factorial_int(int n) {
    Int r = 1;
    for (int t = 2; t <= n; ++t) r *= t;
    return r;
}

}  // namespace tutte
