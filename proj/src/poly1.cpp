#include "weylkit/poly1.hpp"

#include <utility>

#include "weylkit/detail/term_format.hpp"

namespace weylkit {

Poly1 Poly1::monomial(int deg, const Scalar& c) {
    if (c.is_zero() || deg < 0)
        return Poly1();
    std::vector<Scalar> coeffs(static_cast<std::size_t>(deg) + 1, Scalar(0));
    coeffs.back() = c;
    return Poly1(std::move(coeffs));
}

Poly1 Poly1::operator-() const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(-c);
    return Poly1(std::move(out));
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Scalar Poly1::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string Poly1::to_string(const std::string& var) const {
    std::vector<std::pair<ExpPair, Scalar>> ordered;
    for (int k = degree(); k >= 0; --k) {
        if (!coeffs_[static_cast<std::size_t>(k)].is_zero())
            ordered.push_back({{k, 0}, coeffs_[static_cast<std::size_t>(k)]});
    }
    return detail::format_terms(ordered, var, "");
}

} // namespace weylkit
