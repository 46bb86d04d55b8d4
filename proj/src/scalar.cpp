#include "weylkit/scalar.hpp"

namespace weylkit {

Scalar Scalar::rational(long num, long den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::pow(unsigned e) const {
    Scalar acc(1);
    Scalar base = *this;
    while (e != 0) {
        if (e & 1u)
            acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

std::string Scalar::to_string() const {
    if (is_zero())
        return "0";

    std::string out;
    if (rat_ != 0)
        out = rational_to_string(rat_);

    if (surd_ != 0) {
        mpq_class mag = abs(surd_);
        std::string surd_text = (mag == 1) ? "sqrt2" : rational_to_string(mag) + "*sqrt2";
        if (out.empty()) {
            out = (surd_ < 0 ? "-" : "") + surd_text;
        } else {
            out += (surd_ < 0 ? " - " : " + ") + surd_text;
        }
    }
    return out;
}

} // namespace weylkit
