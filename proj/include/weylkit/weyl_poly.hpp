#pragma once

#include <map>
#include <string>

#include "weylkit/errors.hpp"
#include "weylkit/exp_pair.hpp"
#include "weylkit/scalar.hpp"

namespace weylkit {

enum class MapKind { homo, anti };

// Element of the first Weyl algebra A1 = K<X,Y | YX - XY = 1> in normal
// order: a finite map (i,j) -> coefficient representing sum c_ij X^i Y^j.
// No stored coefficient is zero, so equality of term maps is equality in A1.
class WeylPoly {
public:
    using TermMap = std::map<ExpPair, Scalar, GrlexLess>;

    WeylPoly() = default;

    static WeylPoly zero() { return WeylPoly(); }
    static WeylPoly constant(const Scalar& c) { return monomial(0, 0, c); }
    static WeylPoly one() { return constant(Scalar(1)); }
    static WeylPoly gen_x() { return monomial(1, 0, Scalar(1)); }
    static WeylPoly gen_y() { return monomial(0, 1, Scalar(1)); }
    static WeylPoly monomial(int i, int j, const Scalar& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar coeff(int i, int j) const;
    Scalar constant_term() const { return coeff(0, 0); }

    // Bernstein (total) degree; -1 for the zero element.
    int degree() const;
    // Sum of the terms of maximal total degree. Throws ZeroElement on 0.
    WeylPoly leading_form() const;

    WeylPoly operator-() const;
    WeylPoly& operator+=(const WeylPoly& o);
    WeylPoly& operator-=(const WeylPoly& o);
    friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }

    // Normal-ordered product.
    friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b);

    WeylPoly& operator*=(const Scalar& c);
    friend WeylPoly operator*(WeylPoly a, const Scalar& c) { return a *= c; }
    friend WeylPoly operator*(const Scalar& c, WeylPoly a) { return a *= c; }
    friend WeylPoly operator/(WeylPoly a, const Scalar& c) { return a *= c.inverse(); }

    WeylPoly pow(unsigned e) const;

    bool operator==(const WeylPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void add_term(const ExpPair& e, const Scalar& c);

    TermMap terms_;

    friend WeylPoly reorder(int m, int n);
    friend WeylPoly substitute(const WeylPoly&, const WeylPoly&, const WeylPoly&, MapKind);
};

// Normal form of Y^m X^n via the closed formula
// Y^m X^n = sum_k k! C(m,k) C(n,k) X^{n-k} Y^{m-k}.
WeylPoly reorder(int m, int n);

// uv - vu in normal form.
WeylPoly commutator(const WeylPoly& u, const WeylPoly& v);

// Image of u under the map sending X,Y to img_x,img_y; homo sends
// X^i Y^j to img_x^i img_y^j, anti reverses each monomial's factor order.
WeylPoly substitute(const WeylPoly& u, const WeylPoly& img_x, const WeylPoly& img_y,
                    MapKind kind);

} // namespace weylkit
