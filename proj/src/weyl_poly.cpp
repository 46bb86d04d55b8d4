#include "weylkit/weyl_poly.hpp"

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

void check_product_degree(int du, int dv) {
    if (du + dv > degree_limit())
        throw DegreeLimitExceeded("product degree " + std::to_string(du + dv) +
                                  " exceeds limit " + std::to_string(degree_limit()));
}

} // namespace

WeylPoly WeylPoly::monomial(int i, int j, const Scalar& c) {
    WeylPoly p;
    if (!c.is_zero())
        p.terms_[{i, j}] = c;
    return p;
}

bool WeylPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0});
}

Scalar WeylPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
}

int WeylPoly::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.total();
}

WeylPoly WeylPoly::leading_form() const {
    if (terms_.empty())
        throw ZeroElement("leading form of the zero element");
    int d = degree();
    WeylPoly lf;
    for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.total() == d; ++it)
        lf.terms_[it->first] = it->second;
    return lf;
}

void WeylPoly::add_term(const ExpPair& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WeylPoly WeylPoly::operator-() const {
    WeylPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

WeylPoly& WeylPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) {
    if (a.is_zero() || b.is_zero())
        return WeylPoly::zero();
    check_product_degree(a.degree(), b.degree());

    std::unordered_map<ExpPair, Scalar, ExpHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    mpz_class weight;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            // X^i1 Y^j1 X^i2 Y^j2 = X^i1 (Y^j1 X^i2) Y^j2, with the middle
            // factor expanded by the closed reorder formula. The weights
            // k! C(m,k) C(n,k) follow the recurrence w_{k+1} = w_k (m-k)(n-k)/(k+1).
            Scalar c = ca * cb;
            int m = ea.y, n = eb.x;
            int kmax = std::min(m, n);
            weight = 1;
            for (int k = 0; k <= kmax; ++k) {
                acc[{ea.x + eb.x - k, ea.y + eb.y - k}] +=
                    k == 0 ? c : c * Scalar(mpq_class(weight));
                if (k < kmax) {
                    weight *= (m - k) * (n - k);
                    weight /= k + 1;
                }
            }
        }
    }

    WeylPoly out;
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            out.terms_.emplace(e, std::move(c));
    return out;
}

WeylPoly WeylPoly::pow(unsigned e) const {
    WeylPoly acc = one();
    for (unsigned k = 0; k < e; ++k)
        acc = acc * *this;
    return acc;
}

WeylPoly reorder(int m, int n) {
    WeylPoly out;
    int kmax = std::min(m, n);
    mpz_class weight = 1;
    for (int k = 0; k <= kmax; ++k) {
        out.add_term({n - k, m - k}, Scalar(mpq_class(weight)));
        if (k < kmax) {
            weight *= (m - k) * (n - k);
            weight /= k + 1;
        }
    }
    return out;
}

WeylPoly commutator(const WeylPoly& u, const WeylPoly& v) {
    return u * v - v * u;
}

WeylPoly substitute(const WeylPoly& u, const WeylPoly& img_x, const WeylPoly& img_y,
                    MapKind kind) {
    if (u.is_zero())
        return WeylPoly::zero();

    // Two-level Horner evaluation. homo produces img_x^i img_y^j with the
    // outer variable multiplied from the left; anti produces img_y^j img_x^i.
    const bool homo = kind == MapKind::homo;
    int outer_max = 0, inner_max = 0;
    for (const auto& [e, c] : u.terms()) {
        outer_max = std::max(outer_max, homo ? e.x : e.y);
        inner_max = std::max(inner_max, homo ? e.y : e.x);
    }
    const WeylPoly& outer_img = homo ? img_x : img_y;
    const WeylPoly& inner_img = homo ? img_y : img_x;

    WeylPoly out;
    for (int o = outer_max; o >= 0; --o) {
        WeylPoly inner;
        for (int i = inner_max; i >= 0; --i) {
            if (!inner.is_zero())
                inner = inner * inner_img;
            Scalar c = homo ? u.coeff(o, i) : u.coeff(i, o);
            if (!c.is_zero())
                inner += WeylPoly::constant(c);
        }
        if (!out.is_zero())
            out = outer_img * out;
        out += inner;
    }
    return out;
}

std::string WeylPoly::to_string() const {
    std::vector<std::pair<ExpPair, Scalar>> ordered(terms_.rbegin(), terms_.rend());
    return detail::format_terms(ordered, "X", "Y");
}

} // namespace weylkit
