#pragma once

#include <gmpxx.h>

#include <string>

#include "weylkit/errors.hpp"

namespace weylkit {

// Element of the coefficient field Q(sqrt2), stored as
// rat_part + surd_part * sqrt2 with both parts reduced rationals.
// All arithmetic is exact; equality is structural.
class Scalar {
public:
    Scalar() : rat_(0), surd_(0) {}
    Scalar(long n) : rat_(n), surd_(0) {}
    explicit Scalar(const mpq_class& rat) : rat_(rat), surd_(0) { reduce(); }
    Scalar(mpq_class rat, mpq_class surd) : rat_(std::move(rat)), surd_(std::move(surd)) {
        reduce();
    }

    static Scalar rational(long num, long den);
    static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& rat_part() const { return rat_; }
    const mpq_class& surd_part() const { return surd_; }

    bool is_zero() const { return rat_ == 0 && surd_ == 0; }
    bool is_one() const { return rat_ == 1 && surd_ == 0; }
    bool is_rational() const { return surd_ == 0; }
    bool is_mixed() const { return rat_ != 0 && surd_ != 0; }

    // Field norm a^2 - 2 b^2; zero iff the scalar is zero.
    mpq_class norm() const { return rat_ * rat_ - 2 * surd_ * surd_; }

    Scalar operator-() const { return Scalar(-rat_, -surd_); }

    Scalar& operator+=(const Scalar& o) {
        rat_ += o.rat_;
        surd_ += o.surd_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        rat_ -= o.rat_;
        surd_ -= o.surd_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s
        if (surd_ == 0 && o.surd_ == 0) {
            rat_ *= o.rat_;
            return *this;
        }
        mpq_class r = rat_ * o.rat_ + 2 * surd_ * o.surd_;
        mpq_class s = rat_ * o.surd_ + surd_ * o.rat_;
        rat_ = std::move(r);
        surd_ = std::move(s);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero())
            throw DivisionByZero();
        // 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); the norm is nonzero for
        // nonzero scalars because sqrt2 is irrational over Q.
        mpq_class n = norm();
        return Scalar(rat_ / n, -surd_ / n);
    }

    Scalar pow(unsigned e) const;

    bool operator==(const Scalar& o) const { return rat_ == o.rat_ && surd_ == o.surd_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text: "0", "3", "-1/2", "sqrt2", "-2/3*sqrt2", "1 - sqrt2".
    std::string to_string() const;

    // Sign used when extracting a leading minus in term lists: the sign of
    // the rational part when nonzero, otherwise of the surd part.
    int leading_sign() const {
        if (rat_ != 0)
            return sgn(rat_);
        return sgn(surd_);
    }

private:
    void reduce() {
        rat_.canonicalize();
        surd_.canonicalize();
    }

    mpq_class rat_;
    mpq_class surd_;
};

std::string rational_to_string(const mpq_class& q);

} // namespace weylkit
