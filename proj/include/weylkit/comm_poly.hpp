#pragma once

#include <map>
#include <string>

#include "weylkit/errors.hpp"
#include "weylkit/exp_pair.hpp"
#include "weylkit/scalar.hpp"

namespace weylkit {

// Element of the commutative polynomial ring K[x,y], sparse canonical form.
class CommPoly {
public:
    using TermMap = std::map<ExpPair, Scalar, GrlexLess>;

    CommPoly() = default;

    static CommPoly zero() { return CommPoly(); }
    static CommPoly constant(const Scalar& c) { return monomial(0, 0, c); }
    static CommPoly one() { return constant(Scalar(1)); }
    static CommPoly gen_x() { return monomial(1, 0, Scalar(1)); }
    static CommPoly gen_y() { return monomial(0, 1, Scalar(1)); }
    static CommPoly monomial(int i, int j, const Scalar& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar coeff(int i, int j) const;
    Scalar constant_term() const { return coeff(0, 0); }

    int degree() const;
    CommPoly leading_form() const;

    CommPoly operator-() const;
    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);

    CommPoly& operator*=(const Scalar& c);
    friend CommPoly operator*(CommPoly a, const Scalar& c) { return a *= c; }
    friend CommPoly operator*(const Scalar& c, CommPoly a) { return a *= c; }
    friend CommPoly operator/(CommPoly a, const Scalar& c) { return a *= c.inverse(); }

    CommPoly pow(unsigned e) const;

    CommPoly derivative_x() const;
    CommPoly derivative_y() const;

    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CommPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void add_term(const ExpPair& e, const Scalar& c);

    TermMap terms_;
};

// p evaluated at (img_x, img_y).
CommPoly substitute(const CommPoly& p, const CommPoly& img_x, const CommPoly& img_y);

} // namespace weylkit
