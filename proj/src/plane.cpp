#include "weylkit/plane.hpp"

#include <algorithm>
#include <utility>

namespace weylkit {

namespace {

const CommPoly& gx() {
    static const CommPoly x = CommPoly::gen_x();
    return x;
}

const CommPoly& gy() {
    static const CommPoly y = CommPoly::gen_y();
    return y;
}

} // namespace

CommPoly apply(const PlaneMap& f, const CommPoly& u) {
    return substitute(u, f.img_x, f.img_y);
}

PlaneMap compose(const PlaneMap& f, const PlaneMap& g) {
    return PlaneMap{apply(f, g.img_x), apply(f, g.img_y)};
}

PlaneMap plane_identity() { return PlaneMap{gx(), gy()}; }
PlaneMap plane_alpha() { return PlaneMap{gy(), gx()}; }
PlaneMap plane_beta() { return PlaneMap{gx(), -gy()}; }

bool is_plane_identity(const PlaneMap& f) { return f.img_x == gx() && f.img_y == gy(); }

bool is_order_two(const PlaneMap& f) {
    return !is_plane_identity(f) && is_plane_identity(compose(f, f));
}

AffineLetter affine_letter(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                           const Scalar& e, const Scalar& f) {
    if ((a * d - b * c).is_zero())
        throw ConstraintViolated("affine letter needs an invertible linear part");
    return AffineLetter{a, b, c, d, e, f};
}

PlaneMap letter_map(const PlaneLetter& l) {
    if (const auto* aff = std::get_if<AffineLetter>(&l)) {
        return PlaneMap{gx() * aff->a + gy() * aff->b + CommPoly::constant(aff->e),
                        gx() * aff->c + gy() * aff->d + CommPoly::constant(aff->f)};
    }
    const auto& el = std::get<ElementaryLetter>(l);
    return PlaneMap{gx() + el.p.eval_in(gy()), gy()};
}

PlaneLetter letter_inverse(const PlaneLetter& l) {
    if (const auto* aff = std::get_if<AffineLetter>(&l)) {
        Scalar det = aff->a * aff->d - aff->b * aff->c;
        Scalar ia = aff->d / det, ib = -aff->b / det;
        Scalar ic = -aff->c / det, id = aff->a / det;
        // translation of the inverse point map is -M^{-1} t
        Scalar ie = -(ia * aff->e + ib * aff->f);
        Scalar iff = -(ic * aff->e + id * aff->f);
        return AffineLetter{ia, ib, ic, id, ie, iff};
    }
    return ElementaryLetter{-std::get<ElementaryLetter>(l).p};
}

PlaneMap recompose(const FactorWord& w) {
    PlaneMap acc = plane_identity();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        acc = compose(letter_map(*it), acc);
    return acc;
}

FactorWord word_inverse(const FactorWord& w) {
    FactorWord out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(letter_inverse(*it));
    return out;
}

std::string letter_to_string(const PlaneLetter& l) {
    if (const auto* aff = std::get_if<AffineLetter>(&l)) {
        return "aff:" + aff->a.to_string() + "," + aff->b.to_string() + "," +
               aff->c.to_string() + "," + aff->d.to_string() + "," + aff->e.to_string() + "," +
               aff->f.to_string();
    }
    return "elem:" + std::get<ElementaryLetter>(l).p.to_string("y");
}

std::string word_to_string(const FactorWord& w) {
    if (w.letters.empty())
        return "id";
    std::string out;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k)
            out += ";";
        out += letter_to_string(w.letters[k]);
    }
    return out;
}

CommPoly jacobian(const PlaneMap& f) {
    return f.img_x.derivative_x() * f.img_y.derivative_y() -
           f.img_x.derivative_y() * f.img_y.derivative_x();
}

namespace {

const PlaneLetter swap_letter() {
    return AffineLetter{Scalar(0), Scalar(1), Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
}

AffineLetter affine_from_map(const PlaneMap& m) {
    return AffineLetter{m.img_x.coeff(1, 0), m.img_x.coeff(0, 1),
                        m.img_y.coeff(1, 0), m.img_y.coeff(0, 1),
                        m.img_x.coeff(0, 0), m.img_y.coeff(0, 0)};
}

} // namespace

FactorWord jvdk_factor(const PlaneMap& f) {
    CommPoly jac = jacobian(f);
    if (!jac.is_constant() || jac.is_zero())
        throw JacobianNotConstant("Jac = " + jac.to_string());

    PlaneMap m = f;
    std::vector<PlaneLetter> peels; // l_1, l_2, ... with m_{k+1} = m_k o l_{k+1}
    while (true) {
        int dx = m.img_x.degree();
        int dy = m.img_y.degree();
        if (dx <= 1 && dy <= 1)
            break;
        if (dx < dy) {
            PlaneLetter s = swap_letter();
            m = compose(m, letter_map(s));
            peels.push_back(s);
            continue;
        }
        // dy >= 1: a constant image would force Jac = 0, excluded above
        if (dx % dy != 0)
            throw PeelingStuck("deg img_x = " + std::to_string(dx) +
                               " not divisible by deg img_y = " + std::to_string(dy));
        int k = dx / dy;
        CommPoly top_x = m.img_x.leading_form();
        CommPoly top_yk = m.img_y.leading_form().pow(static_cast<unsigned>(k));
        const auto& lead = top_yk.terms().rbegin()->first;
        Scalar ratio = top_x.coeff(lead.x, lead.y) / top_yk.terms().rbegin()->second;
        if (ratio.is_zero() || top_x != top_yk * ratio)
            throw PeelingStuck("top form of img_x (" + top_x.to_string() +
                               ") is not proportional to (top form of img_y)^" +
                               std::to_string(k) + " (" + top_yk.to_string() + ")");
        PlaneLetter e = ElementaryLetter{Poly1::monomial(k, -ratio)};
        m = compose(m, letter_map(e));
        peels.push_back(e);
    }

    FactorWord word;
    AffineLetter tail = affine_from_map(m);
    if ((tail.a * tail.d - tail.b * tail.c).is_zero())
        throw InternalError("peeling terminated on a singular affine map");
    if (!is_plane_identity(m) || peels.empty())
        word.letters.push_back(tail);
    for (auto it = peels.rbegin(); it != peels.rend(); ++it)
        word.letters.push_back(letter_inverse(*it));

    if (!(recompose(word) == f))
        throw InternalError("factor word does not recompose to the input");
    return word;
}

namespace {

bool is_affine_map(const PlaneMap& m) {
    return m.img_x.degree() <= 1 && m.img_y.degree() <= 1;
}

// Membership in the triangular (de Jonquieres) subgroup:
// x -> a x + r(y), y -> d y + g with a, d nonzero.
bool is_triangular_map(const PlaneMap& m) {
    if (m.img_x.coeff(1, 0).is_zero() || m.img_y.coeff(0, 1).is_zero())
        return false;
    for (const auto& [e, c] : m.img_y.terms())
        if (e.x > 0 || e.y > 1)
            return false;
    for (const auto& [e, c] : m.img_x.terms())
        if (e.x > 1 || (e.x == 1 && e.y > 0))
            return false;
    return true;
}

Poly1 poly1_from_y(const CommPoly& u) {
    std::vector<Scalar> coeffs;
    for (const auto& [e, c] : u.terms()) {
        if (e.x != 0)
            throw InternalError("expected a polynomial in y only");
        if (e.y >= static_cast<int>(coeffs.size()))
            coeffs.resize(static_cast<std::size_t>(e.y) + 1, Scalar(0));
        coeffs[static_cast<std::size_t>(e.y)] = c;
    }
    return Poly1(std::move(coeffs));
}

PlaneMap invert_block(const PlaneMap& m) {
    if (is_affine_map(m))
        return letter_map(letter_inverse(affine_from_map(m)));
    // triangular: x -> a x + r(y), y -> d y + g
    Scalar a = m.img_x.coeff(1, 0);
    Scalar d = m.img_y.coeff(0, 1);
    Scalar g = m.img_y.coeff(0, 0);
    CommPoly r = m.img_x - gx() * a;
    CommPoly y_back = (gy() - CommPoly::constant(g)) / d;
    CommPoly x_back = (gx() - substitute(r, gx(), y_back)) / a;
    return PlaneMap{x_back, y_back};
}

// An affine or triangular map as one or two plain letters.
std::vector<PlaneLetter> block_letters(const PlaneMap& m) {
    if (is_affine_map(m))
        return {affine_from_map(m)};
    Scalar a = m.img_x.coeff(1, 0);
    Scalar d = m.img_y.coeff(0, 1);
    Scalar g = m.img_y.coeff(0, 0);
    Poly1 r = poly1_from_y(m.img_x - gx() * a);
    // m = aff o elem with aff = (a x, d y + g) and elem's p(t) = r((t-g)/d)
    CommPoly arg = (gy() - CommPoly::constant(g)) / d;
    Poly1 p = poly1_from_y(r.eval_in(arg));
    AffineLetter aff{a, Scalar(0), Scalar(0), d, Scalar(0), g};
    std::vector<PlaneLetter> out{aff, ElementaryLetter{p}};
    return out;
}

std::vector<PlaneMap> merge_blocks(const std::vector<PlaneLetter>& letters) {
    std::vector<PlaneMap> blocks;
    for (const auto& l : letters) {
        blocks.push_back(letter_map(l));
        while (blocks.size() >= 2) {
            PlaneMap joined = compose(blocks[blocks.size() - 2], blocks.back());
            if (!is_affine_map(joined) && !is_triangular_map(joined))
                break;
            blocks.pop_back();
            blocks.back() = joined;
        }
    }
    return blocks;
}

// Affine order-2 map with linear-part determinant -1, conjugated from the
// swap: find u with u^{-1} o alpha o u = a. The fixed point is t/2; the
// order-2 linear part has eigenvalues {1,-1} read off the columns of M +- I.
PlaneMap normalize_affine_order2(const PlaneMap& a) {
    Scalar m11 = a.img_x.coeff(1, 0), m12 = a.img_x.coeff(0, 1);
    Scalar m21 = a.img_y.coeff(1, 0), m22 = a.img_y.coeff(0, 1);
    Scalar t1 = a.img_x.coeff(0, 0), t2 = a.img_y.coeff(0, 0);

    Scalar p1 = t1 / Scalar(2), p2 = t2 / Scalar(2);

    Scalar ep_x = m11 + Scalar(1), ep_y = m21; // column of M + I
    if (ep_x.is_zero() && ep_y.is_zero()) {
        ep_x = m12;
        ep_y = m22 + Scalar(1);
    }
    Scalar em_x = m11 - Scalar(1), em_y = m21; // column of M - I
    if (em_x.is_zero() && em_y.is_zero()) {
        em_x = m12;
        em_y = m22 - Scalar(1);
    }

    Scalar v11 = (ep_x + em_x) / Scalar(2), v12 = (ep_x - em_x) / Scalar(2);
    Scalar v21 = (ep_y + em_y) / Scalar(2), v22 = (ep_y - em_y) / Scalar(2);

    PlaneMap u{gx() * v11 + gy() * v12 + CommPoly::constant(p1),
               gx() * v21 + gy() * v22 + CommPoly::constant(p2)};
    PlaneMap u_inv = letter_map(letter_inverse(affine_from_map(u)));
    if (!(compose(compose(u_inv, plane_alpha()), u) == a))
        throw InternalError("affine order-2 normalization failed verification");
    return u;
}

} // namespace

ClassifyResult involution_classify(const PlaneMap& f) {
    ClassifyResult result;
    if (!is_order_two(f)) {
        result.kind = PlaneInvolutionClass::not_involution;
        return result;
    }

    CommPoly jac = jacobian(f);
    if (!jac.is_constant())
        throw InternalError("order-2 map with nonconstant Jacobian");
    Scalar c = jac.constant_term();

    if (c == Scalar(1)) {
        result.kind = PlaneInvolutionClass::minus_identity_class;
        result.note = "order-2 automorphism with Jacobian +1; conjugates of the exchange "
                      "automorphism all have Jacobian -1, so this map lies in the class of "
                      "(-x,-y)";
        return result;
    }
    if (c != Scalar(-1))
        throw InternalError("order-2 map with Jacobian " + c.to_string());

    if (f == plane_alpha()) {
        result.kind = PlaneInvolutionClass::alpha_class;
        result.conjugator = FactorWord{};
        return result;
    }

    // Cyclic reduction: conjugating by the leading block strictly shortens
    // the reduced block word of an order-2 element until an affine map
    // remains (a triangular endpoint is impossible at Jacobian -1).
    PlaneMap m = f;
    FactorWord conj_letters; // blocks applied so far, in application order
    std::size_t guard = 0;
    while (true) {
        std::vector<PlaneMap> blocks = merge_blocks(jvdk_factor(m).letters);
        if (blocks.size() <= 1)
            break;
        if (++guard > 64)
            throw InternalError("cyclic reduction did not terminate");
        const PlaneMap& lead = blocks.front();
        m = compose(compose(invert_block(lead), m), lead);
        for (auto& l : block_letters(lead))
            conj_letters.letters.push_back(std::move(l));
    }

    if (!is_affine_map(m) && is_triangular_map(m)) {
        // Triangular order-2 endpoint, x -> a x + r(y), y -> -a y + g with
        // a = +-1. Conjugating by the elementary letter with p = a r / 2
        // cancels r exactly (the order-2 identity makes r anti-symmetric
        // about g/2 when a = 1), leaving an affine map.
        Scalar a = m.img_x.coeff(1, 0);
        if (a * a != Scalar(1))
            throw InternalError("triangular order-2 block with non-unit x coefficient");
        Poly1 r = poly1_from_y(m.img_x - gx() * a);
        Scalar half = a / Scalar(2);
        std::vector<Scalar> scaled;
        scaled.reserve(r.coeffs().size());
        for (const auto& coeff : r.coeffs())
            scaled.push_back(coeff * half);
        PlaneLetter e = ElementaryLetter{Poly1(std::move(scaled))};
        PlaneMap e_map = letter_map(e);
        m = compose(compose(letter_map(letter_inverse(e)), m), e_map);
        conj_letters.letters.push_back(e);
    }
    if (!is_affine_map(m))
        throw InternalError("cyclic reduction ended on a non-affine block at Jacobian -1");

    PlaneMap u = normalize_affine_order2(m);

    // f = C o m o C^{-1} and m = u^{-1} o alpha o u give w = u o C^{-1}.
    FactorWord w;
    w.letters.push_back(affine_from_map(u));
    FactorWord c_inv = word_inverse(conj_letters);
    for (auto& l : c_inv.letters)
        w.letters.push_back(std::move(l));

    PlaneMap w_map = recompose(w);
    PlaneMap w_inv = recompose(word_inverse(w));
    if (!(compose(compose(w_inv, plane_alpha()), w_map) == f))
        throw InternalError("constructed conjugator failed verification");

    result.kind = PlaneInvolutionClass::alpha_class;
    result.conjugator = std::move(w);
    return result;
}

JcCheckResult alpha_jc_check(const PlaneMap& f, const PlaneMap& gamma, const PlaneMap& delta) {
    if (!is_order_two(gamma))
        throw NotInvolution("gamma is not an order-2 automorphism");
    if (!is_order_two(delta))
        throw NotInvolution("delta is not an order-2 automorphism");

    JcCheckResult out;
    out.jac = jacobian(f);
    out.commutes = apply(f, gamma.img_x) == apply(delta, f.img_x) &&
                   apply(f, gamma.img_y) == apply(delta, f.img_y);
    return out;
}

} // namespace weylkit
