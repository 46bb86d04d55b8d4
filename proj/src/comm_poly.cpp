#include "weylkit/comm_poly.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "weylkit/detail/term_format.hpp"
#include "weylkit/limits.hpp"

namespace weylkit {

namespace {

struct ExpHash {
    std::size_t operator()(const ExpPair& e) const {
        return std::hash<long long>()((static_cast<long long>(e.x) << 32) ^ e.y);
    }
};

} // namespace

CommPoly CommPoly::monomial(int i, int j, const Scalar& c) {
    CommPoly p;
    if (!c.is_zero())
        p.terms_[{i, j}] = c;
    return p;
}

bool CommPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0});
}

Scalar CommPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
}

int CommPoly::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.total();
}

CommPoly CommPoly::leading_form() const {
    if (terms_.empty())
        throw ZeroElement("leading form of the zero element");
    int d = degree();
    CommPoly lf;
    for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.total() == d; ++it)
        lf.terms_[it->first] = it->second;
    return lf;
}

void CommPoly::add_term(const ExpPair& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

CommPoly CommPoly::operator-() const {
    CommPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (a.is_zero() || b.is_zero())
        return CommPoly::zero();
    if (a.degree() + b.degree() > degree_limit())
        throw DegreeLimitExceeded("product degree " + std::to_string(a.degree() + b.degree()) +
                                  " exceeds limit " + std::to_string(degree_limit()));

    std::unordered_map<ExpPair, Scalar, ExpHash> acc;
    acc.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            acc[{ea.x + eb.x, ea.y + eb.y}] += ca * cb;

    CommPoly out;
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            out.terms_.emplace(e, std::move(c));
    return out;
}

CommPoly CommPoly::pow(unsigned e) const {
    CommPoly acc = one();
    for (unsigned k = 0; k < e; ++k)
        acc = acc * *this;
    return acc;
}

CommPoly CommPoly::derivative_x() const {
    CommPoly out;
    for (const auto& [e, c] : terms_)
        if (e.x > 0)
            out.add_term({e.x - 1, e.y}, c * Scalar(e.x));
    return out;
}

CommPoly CommPoly::derivative_y() const {
    CommPoly out;
    for (const auto& [e, c] : terms_)
        if (e.y > 0)
            out.add_term({e.x, e.y - 1}, c * Scalar(e.y));
    return out;
}

CommPoly substitute(const CommPoly& p, const CommPoly& img_x, const CommPoly& img_y) {
    if (p.is_zero())
        return CommPoly::zero();

    // Two-level Horner evaluation in img_x, then img_y per row.
    int max_x = 0, max_y = 0;
    for (const auto& [e, c] : p.terms()) {
        max_x = std::max(max_x, e.x);
        max_y = std::max(max_y, e.y);
    }

    CommPoly out;
    for (int i = max_x; i >= 0; --i) {
        CommPoly row;
        for (int j = max_y; j >= 0; --j) {
            if (!row.is_zero())
                row = row * img_y;
            Scalar c = p.coeff(i, j);
            if (!c.is_zero())
                row += CommPoly::constant(c);
        }
        if (!out.is_zero())
            out = out * img_x;
        out += row;
    }
    return out;
}

std::string CommPoly::to_string() const {
    std::vector<std::pair<ExpPair, Scalar>> ordered(terms_.rbegin(), terms_.rend());
    return detail::format_terms(ordered, "x", "y");
}

} // namespace weylkit
