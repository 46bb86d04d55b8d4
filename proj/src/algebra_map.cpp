#include "weylkit/algebra_map.hpp"

#include <algorithm>

namespace weylkit {

namespace {

const WeylPoly& gen_x() {
    static const WeylPoly x = WeylPoly::gen_x();
    return x;
}

const WeylPoly& gen_y() {
    static const WeylPoly y = WeylPoly::gen_y();
    return y;
}

} // namespace

bool relation_holds(const AlgebraMap& f) {
    WeylPoly c = commutator(f.img_y, f.img_x);
    WeylPoly expected =
        (f.kind == MapKind::homo) ? WeylPoly::one() : WeylPoly::constant(Scalar(-1));
    return c == expected;
}

AlgebraMap make_map(WeylPoly img_x, WeylPoly img_y, MapKind kind) {
    AlgebraMap f{std::move(img_x), std::move(img_y), kind};
    if (!relation_holds(f)) {
        throw InvalidRelation(
            kind == MapKind::homo
                ? "[img_y, img_x] != 1: images do not define an endomorphism"
                : "[img_y, img_x] != -1: images do not define an anti-endomorphism");
    }
    return f;
}

WeylPoly apply(const AlgebraMap& f, const WeylPoly& u) {
    return substitute(u, f.img_x, f.img_y, f.kind);
}

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
    MapKind kind = (f.kind == g.kind) ? MapKind::homo : MapKind::anti;
    return AlgebraMap{apply(f, g.img_x), apply(f, g.img_y), kind};
}

AlgebraMap identity_map() { return AlgebraMap{gen_x(), gen_y(), MapKind::homo}; }

bool is_identity(const AlgebraMap& f) {
    return f.kind == MapKind::homo && f.img_x == gen_x() && f.img_y == gen_y();
}

AlgebraMap exchange_involution() { return AlgebraMap{gen_y(), gen_x(), MapKind::anti}; }

AlgebraMap beta_involution() {
    return AlgebraMap{gen_x(), -gen_y(), MapKind::anti};
}

AlgebraMap phi_automorphism() {
    WeylPoly half = (gen_x() + gen_y()) / Scalar(2);
    return AlgebraMap{half, gen_y() - gen_x(), MapKind::homo};
}

AlgebraMap phi_inverse() {
    return AlgebraMap{gen_x() - gen_y() / Scalar(2), gen_x() + gen_y() / Scalar(2),
                      MapKind::homo};
}

bool check_involution(const AlgebraMap& f) {
    if (f.kind != MapKind::anti)
        return false;
    return is_identity(compose(f, f));
}

Involution::Involution(AlgebraMap map) : map_(std::move(map)) {
    if (!relation_holds(map_))
        throw InvalidRelation("involution candidate does not preserve the relation");
    if (!check_involution(map_))
        throw NotInvolutive(map_.kind == MapKind::anti
                                ? "map has order > 2"
                                : "involutions on A1 are anti-automorphisms");
}

Involution alpha() { return Involution(exchange_involution()); }
Involution beta() { return Involution(beta_involution()); }

std::pair<WeylPoly, WeylPoly> sym_skew_decompose(const WeylPoly& u, const Involution& inv) {
    WeylPoly image = inv(u);
    return {(u + image) / Scalar(2), (u - image) / Scalar(2)};
}

namespace {

// sum_j c_j (X-Y)^{2j}
WeylPoly family_tail(const std::vector<Scalar>& cs) {
    WeylPoly d2 = (gen_x() - gen_y()) * (gen_x() - gen_y());
    WeylPoly acc;
    WeylPoly power = WeylPoly::one();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        acc += power * cs[j];
        if (j + 1 < cs.size())
            power = power * d2;
    }
    return acc;
}

} // namespace

AlgebraMap alpha_family(const Scalar& a, const Scalar& b, const std::vector<Scalar>& cs,
                        FamilyVariant variant) {
    Scalar constraint = a * a - b * b;
    Scalar expected = (variant == FamilyVariant::endo) ? Scalar(1) : Scalar(-1);
    if (constraint != expected)
        throw ConstraintViolated("a^2 - b^2 = " + constraint.to_string() + ", need " +
                                 expected.to_string());

    WeylPoly tail = family_tail(cs);
    AlgebraMap f{gen_x() * a + gen_y() * b + tail, gen_y() * a + gen_x() * b + tail,
                 variant == FamilyVariant::endo ? MapKind::homo : MapKind::anti};

    if (!relation_holds(f))
        throw InternalError("alpha_family member violates the defining relation");
    AlgebraMap alpha_map = exchange_involution();
    if (apply(alpha_map, f.img_x) != f.img_y || apply(alpha_map, f.img_y) != f.img_x)
        throw InternalError("alpha_family member does not commute with alpha");
    return f;
}

FamilyForm recognize_alpha_family(const AlgebraMap& f) {
    WeylPoly d2 = (gen_x() - gen_y()) * (gen_x() - gen_y());

    WeylPoly rem = f.img_x;
    int top = std::max(rem.degree(), 0);
    int n = top <= 1 ? 0 : top / 2;

    std::vector<Scalar> cs(static_cast<std::size_t>(n) + 1, Scalar(0));
    std::vector<WeylPoly> d2_pow(static_cast<std::size_t>(n) + 1);
    d2_pow[0] = WeylPoly::one();
    for (int j = 1; j <= n; ++j)
        d2_pow[static_cast<std::size_t>(j)] = d2_pow[static_cast<std::size_t>(j - 1)] * d2;

    // (X-Y)^{2j} is the only template generator containing X^{2j}, so the
    // coefficients peel off from the top.
    for (int j = n; j >= 1; --j) {
        Scalar c = rem.coeff(2 * j, 0);
        cs[static_cast<std::size_t>(j)] = c;
        rem -= d2_pow[static_cast<std::size_t>(j)] * c;
    }
    Scalar a = rem.coeff(1, 0);
    Scalar b = rem.coeff(0, 1);
    rem -= gen_x() * a + gen_y() * b;
    cs[0] = rem.coeff(0, 0);
    rem -= WeylPoly::constant(cs[0]);

    if (!rem.is_zero())
        throw NotFamilyForm("f(X) leaves residual " + rem.to_string());

    WeylPoly tail = family_tail(cs);
    if (f.img_y != gen_y() * a + gen_x() * b + tail)
        throw NotFamilyForm("f(Y) does not match the template, residual " +
                            (f.img_y - (gen_y() * a + gen_x() * b + tail)).to_string());

    Scalar constraint = a * a - b * b;
    FamilyVariant variant;
    if (constraint == Scalar(1))
        variant = FamilyVariant::endo;
    else if (constraint == Scalar(-1))
        variant = FamilyVariant::anti;
    else
        throw NotFamilyForm("a^2 - b^2 = " + constraint.to_string() + " is not +-1");

    MapKind expected_kind = variant == FamilyVariant::endo ? MapKind::homo : MapKind::anti;
    if (f.kind != expected_kind)
        throw NotFamilyForm("map kind does not match the family variant");

    while (!cs.empty() && cs.back().is_zero())
        cs.pop_back();
    return FamilyForm{a, b, std::move(cs), variant};
}

AlgebraMap alpha_family_invert(const AlgebraMap& f) {
    FamilyForm form = recognize_alpha_family(f);

    // f(X) - f(Y) = (a-b)(X-Y) makes X-Y recoverable, then X+Y; the inverse
    // stays in the family with coefficients -c_j (a+b)^{2j-1}.
    Scalar sum = form.a + form.b;
    Scalar a_inv = form.variant == FamilyVariant::endo ? form.a : -form.a;
    Scalar b_inv = form.variant == FamilyVariant::endo ? -form.b : form.b;

    std::vector<Scalar> cs_inv;
    cs_inv.reserve(form.cs.size());
    Scalar power = sum.inverse(); // (a+b)^{2j-1} at j = 0
    for (std::size_t j = 0; j < form.cs.size(); ++j) {
        cs_inv.push_back(-form.cs[j] * power);
        power *= sum * sum;
    }

    AlgebraMap g = alpha_family(a_inv, b_inv, cs_inv, form.variant);
    if (!is_identity(compose(g, f)) || !is_identity(compose(f, g)))
        throw InternalError("alpha_family_invert produced a non-inverse");
    return g;
}

} // namespace weylkit
