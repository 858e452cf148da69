#pragma once

// Q[x,y] localized at (y-1): a rational-coefficient numerator over a power of
// (y-1). Canonical form keeps the numerator not divisible by (y-1) unless the
// denominator exponent is zero; equality is structural on canonical forms.

#include <stdexcept>

#include "poly.hpp"

namespace tutte {

class Localized {
public:
    Localized() = default;
    explicit Localized(QPoly num, int denom_pow = 0)
        : num_(std::move(num)), dpow_(denom_pow) {
        if (denom_pow < 0) throw std::invalid_argument("negative denominator power");
        canonicalize();
    }
    static Localized one() { return Localized(QPoly(Rat(1))); }
    static Localized zero() { return Localized(); }
    static Localized constant(const Rat& c) { return Localized(QPoly(c)); }

    const QPoly& numerator() const { return num_; }
    int denom_pow() const { return dpow_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return dpow_ == 0 && num_ == QPoly(Rat(1)); }

    friend Localized operator+(const Localized& a, const Localized& b) {
        int d = std::max(a.dpow_, b.dpow_);
        QPoly n = lift(a, d) + lift(b, d);
        return Localized(std::move(n), d);
    }
    friend Localized operator-(const Localized& a, const Localized& b) {
        int d = std::max(a.dpow_, b.dpow_);
        QPoly n = lift(a, d) - lift(b, d);
        return Localized(std::move(n), d);
    }
    friend Localized operator*(const Localized& a, const Localized& b) {
        return Localized(a.num_ * b.num_, a.dpow_ + b.dpow_);
    }
    Localized& operator+=(const Localized& o) { return *this = *this + o; }
    Localized& operator-=(const Localized& o) { return *this = *this - o; }
    Localized& operator*=(const Localized& o) { return *this = *this * o; }

    Localized scaled(const Rat& s) const { return Localized(num_.scaled(s), dpow_); }

    // divide by (y-1)^k
    Localized div_ym1_pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        return Localized(num_, dpow_ + k);
    }

    friend bool operator==(const Localized& a, const Localized& b) {
        return a.dpow_ == b.dpow_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Localized& a, const Localized& b) { return !(a == b); }

    // requires denominator exponent 0 and integer coefficients
    Poly to_poly() const {
        if (dpow_ != 0) throw std::domain_error("denominator power nonzero");
        return to_int_poly(num_);
    }

private:
    static QPoly lift(const Localized& v, int d) {
        QPoly n = v.num_;
        if (int k = d - v.dpow_; k > 0) {
            QPoly ym1 = QPoly::y() - QPoly(Rat(1));
            n = n * ym1.pow(k);
        }
        return n;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            dpow_ = 0;
            return;
        }
        while (dpow_ > 0 && divisible_ym1(num_)) {
            num_ = div_ym1(num_);
            --dpow_;
        }
    }

    QPoly num_;
    int dpow_ = 0;
};

}  // namespace tutte
