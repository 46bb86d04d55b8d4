#pragma once

#include <string>
#include <vector>

#include "weylkit/scalar.hpp"

namespace weylkit {

// Univariate polynomial over Scalar, coefficients stored ascending with no
// trailing zeros. Used for centralizer witnesses h(t) and triangular
// generator polynomials p.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly1 constant(const Scalar& c) { return Poly1({c}); }
    static Poly1 monomial(int deg, const Scalar& c);

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size()))
            return Scalar(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a += -b; }

    bool operator==(const Poly1& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly1& o) const { return !(*this == o); }

    Scalar eval(const Scalar& x) const;

    // Horner evaluation in any ring exposing constant(Scalar), + and *.
    template <class Ring>
    Ring eval_in(const Ring& arg) const {
        Ring acc = Ring::constant(Scalar(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * arg + Ring::constant(*it);
        return acc;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

} // namespace weylkit
