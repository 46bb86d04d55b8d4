#include "weylkit/dixmier.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "weylkit/limits.hpp"
#include "weylkit/linsolve.hpp"

namespace weylkit {

ImagePair make_image_pair(WeylPoly p, WeylPoly q) {
    if (commutator(q, p) != WeylPoly::one())
        throw InvalidRelation("[Q,P] != 1: the pair does not define an endomorphism");
    return ImagePair{std::move(p), std::move(q)};
}

WeylPoly eval_table(const CoeffTable& table, const ImagePair& pair) {
    return substitute(table, pair.p, pair.q, MapKind::homo);
}

Poly1 centralizer_poly(const WeylPoly& p, const WeylPoly& c) {
    if (p.is_constant())
        throw ConstraintViolated("centralizer extraction needs nonconstant p");
    if (!commutator(c, p).is_zero())
        throw NotCentralizing("[c,p] != 0");

    const int dp = p.degree();
    std::map<int, WeylPoly> powers;
    powers[0] = WeylPoly::one();

    Poly1 h;
    WeylPoly rem = c;
    while (!rem.is_zero()) {
        int d = rem.degree();
        if (d == 0) {
            h += Poly1::constant(rem.constant_term());
            break;
        }
        if (d % dp != 0)
            throw NotInPolynomialAlgebra("degree " + std::to_string(d) +
                                         " is not a multiple of deg p = " + std::to_string(dp));
        int k = d / dp;
        int have = powers.rbegin()->first;
        while (have < k) {
            powers[have + 1] = powers[have] * p;
            ++have;
        }
        const WeylPoly& pk = powers[k];
        WeylPoly lf_rem = rem.leading_form();
        WeylPoly lf_pk = pk.leading_form();

        const auto& top = lf_pk.terms().rbegin()->first;
        Scalar denom = lf_pk.terms().rbegin()->second;
        Scalar ratio = lf_rem.coeff(top.x, top.y) / denom;
        if (ratio.is_zero() || lf_rem != lf_pk * ratio)
            throw NotInPolynomialAlgebra("leading form of the remainder is not proportional to "
                                         "the leading form of p^" +
                                         std::to_string(k));

        h += Poly1::monomial(k, ratio);
        rem -= pk * ratio;
    }
    return h;
}

namespace {

std::vector<ExpPair> basis_exponents(int dp, int dq, int bound) {
    std::vector<ExpPair> out;
    for (int i = 0; i * dp <= bound; ++i)
        for (int j = 0; i * dp + j * dq <= bound; ++j)
            out.push_back({i, j});
    return out;
}

} // namespace

MembershipResult membership(const WeylPoly& w, const ImagePair& pair, int bound) {
    if (bound < 0)
        return {std::nullopt, bound};

    const int dp = pair.p.degree();
    const int dq = pair.q.degree();
    std::vector<ExpPair> exps = basis_exponents(dp, dq, bound);

    std::vector<WeylPoly> p_pow{WeylPoly::one()};
    std::vector<WeylPoly> q_pow{WeylPoly::one()};
    for (int i = 1; i * dp <= bound; ++i)
        p_pow.push_back(p_pow.back() * pair.p);
    for (int j = 1; j * dq <= bound; ++j)
        q_pow.push_back(q_pow.back() * pair.q);

    std::vector<WeylPoly> basis;
    basis.reserve(exps.size());
    for (const auto& e : exps)
        basis.push_back(p_pow[static_cast<std::size_t>(e.x)] *
                        q_pow[static_cast<std::size_t>(e.y)]);

    // rows: every Weyl monomial appearing in the basis or the target
    std::map<ExpPair, std::size_t, GrlexLess> row_of;
    auto note_rows = [&](const WeylPoly& u) {
        for (const auto& [e, c] : u.terms())
            row_of.emplace(e, 0);
    };
    for (const auto& bpoly : basis)
        note_rows(bpoly);
    note_rows(w);
    std::size_t next = 0;
    for (auto& [e, idx] : row_of)
        idx = next++;

    std::vector<std::vector<Scalar>> matrix(row_of.size(),
                                            std::vector<Scalar>(basis.size(), Scalar(0)));
    std::vector<Scalar> rhs(row_of.size(), Scalar(0));
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [e, c] : basis[col].terms())
            matrix[row_of[e]][col] = c;
    for (const auto& [e, c] : w.terms())
        rhs[row_of[e]] = c;

    SolveResult solved = solve_exact(std::move(matrix), std::move(rhs));
    if (solved.status == SolveStatus::underdetermined)
        throw InternalError("monomials P^i Q^j reported linearly dependent");
    if (solved.status == SolveStatus::inconsistent)
        return {std::nullopt, bound};

    CoeffTable table;
    for (std::size_t col = 0; col < exps.size(); ++col)
        table += WeylPoly::monomial(exps[col].x, exps[col].y, solved.solution[col]);

    if (eval_table(table, pair) != w)
        throw InternalError("membership table failed evaluation check");
    return {std::move(table), bound};
}

DecisionResult automorphism_decision(const ImagePair& pair, int bound) {
    MembershipResult mx = membership(WeylPoly::gen_x(), pair, bound);
    if (!mx.found())
        return {std::nullopt, bound};
    MembershipResult my = membership(WeylPoly::gen_y(), pair, bound);
    if (!my.found())
        return {std::nullopt, bound};
    return {AutomorphismCertificate{*mx.table, *my.table}, bound};
}

bool gamma_delta_check(const AlgebraMap& f, const Involution& gamma, const Involution& delta) {
    const AlgebraMap& g = gamma.map();
    const AlgebraMap& d = delta.map();
    return apply(f, g.img_x) == apply(d, f.img_x) && apply(f, g.img_y) == apply(d, f.img_y);
}

bool commutes_with_alpha(const AlgebraMap& f) {
    AlgebraMap a = exchange_involution();
    return f.img_y == apply(a, f.img_x) && f.img_x == apply(a, f.img_y);
}

GhClass gh_check(const AlgebraMap& f, const GeneratorWord& g, const GeneratorWord& h) {
    AlgebraMap composite = compose(word_to_map(h), compose(f, word_to_map(word_invert(g))));
    if (!commutes_with_alpha(composite))
        return GhClass::neither;
    return composite.kind == MapKind::homo ? GhClass::alpha_endo : GhClass::alpha_anti_endo;
}

RestrictionResult restriction_check(const ImagePair& pair, const Involution& e, int bound) {
    MembershipResult mp = membership(e(pair.p), pair, bound);
    if (!mp.found())
        return {std::nullopt, bound};
    MembershipResult mq = membership(e(pair.q), pair, bound);
    if (!mq.found())
        return {std::nullopt, bound};
    return {std::make_pair(*mp.table, *mq.table), bound};
}

std::pair<WeylPoly, WeylPoly> corresponding_involution_on_t(const Involution& e,
                                                            const ImagePair& pair) {
    return {substitute(e.map().img_x, pair.p, pair.q, MapKind::homo),
            substitute(e.map().img_y, pair.p, pair.q, MapKind::homo)};
}

ExtensionResult extension_search(const ImagePair& pair, int max_length, const SearchPool& pool) {
    std::optional<GeneratorWord> hit;
    Involution base = alpha();
    for_each_word(pool, max_length, [&](const GeneratorWord& w) {
        try {
            Involution gamma = conjugate_involution(base, w);
            if (gamma(pair.p) == pair.q && gamma(pair.q) == pair.p) {
                hit = w;
                return true;
            }
        } catch (const DegreeLimitExceeded&) {
            // candidate exploded past the cap; treat as a miss
        }
        return false;
    });
    return {std::move(hit), max_length};
}

SymmetrizeResult symmetrize_search(const ImagePair& pair, WhichImage which, int max_length,
                                   const SearchPool& pool) {
    const WeylPoly& target = which == WhichImage::p ? pair.p : pair.q;
    AlgebraMap a = exchange_involution();

    std::optional<GeneratorWord> hit;
    Parity parity = Parity::symmetric;
    for_each_word(pool, max_length, [&](const GeneratorWord& w) {
        try {
            WeylPoly image = apply(word_to_map(w), target);
            WeylPoly mirrored = apply(a, image);
            if (mirrored == image) {
                hit = w;
                parity = Parity::symmetric;
                return true;
            }
            if (mirrored == -image) {
                hit = w;
                parity = Parity::skew;
                return true;
            }
        } catch (const DegreeLimitExceeded&) {
        }
        return false;
    });
    return {std::move(hit), parity, max_length};
}

PipelineResult symmetric_image_pipeline(const ImagePair& pair, const Involution& e, int bound,
                                        WhichImage which, Parity parity) {
    const WeylPoly& selected = which == WhichImage::p ? pair.p : pair.q;
    const WeylPoly& other = which == WhichImage::p ? pair.q : pair.p;

    WeylPoly mirrored = e(selected);
    WeylPoly expected = parity == Parity::symmetric ? selected : -selected;
    if (mirrored != expected)
        throw ParityViolated("selected image is not " +
                             std::string(parity == Parity::symmetric ? "symmetric" : "skew") +
                             " under E");

    // Decompose the other image. The piece sharing the selected image's
    // parity centralizes it; the opposite piece carries the commutator.
    auto [sym_part, skew_part] = sym_skew_decompose(other, e);
    WeylPoly centralizing = parity == Parity::symmetric ? sym_part : skew_part;

    PipelineResult result;
    result.bound = bound;
    result.s1 = selected;
    result.h = centralizer_poly(selected, centralizing);
    result.s2 = centralizing;
    result.k2 = other - centralizing;

    WeylPoly bracket = which == WhichImage::p ? commutator(result.k2, result.s1)
                                              : commutator(result.s1, result.k2);
    result.bracket_identities =
        commutator(result.s2, result.s1).is_zero() && bracket == WeylPoly::one();
    if (!result.bracket_identities)
        throw InternalError("bracket identities failed for a valid decomposition");

    ImagePair cleaned = which == WhichImage::p ? make_image_pair(result.s1, result.k2)
                                               : make_image_pair(result.k2, result.s1);
    DecisionResult decision = automorphism_decision(cleaned, bound);
    if (!decision.found())
        return result;

    // Lift tables over the cleaned pair back to (P,Q): in the abstract copy
    // of T the cleaned generators read (X, Y - h(X)) resp. (X - h(Y), Y).
    WeylPoly gx = WeylPoly::gen_x();
    WeylPoly gy = WeylPoly::gen_y();
    auto lift = [&](const CoeffTable& t) {
        if (which == WhichImage::p)
            return substitute(t, gx, gy - result.h.eval_in(gx), MapKind::homo);
        return substitute(t, gx - result.h.eval_in(gy), gy, MapKind::homo);
    };
    AutomorphismCertificate cert{lift(decision.certificate->expr_x),
                                 lift(decision.certificate->expr_y)};
    if (eval_table(cert.expr_x, pair) != gx || eval_table(cert.expr_y, pair) != gy)
        throw InternalError("lifted certificate failed evaluation against (P,Q)");

    result.certificate = std::move(cert);
    return result;
}

int default_membership_bound(const ImagePair& pair, const WeylPoly& w) {
    int dw = std::max(w.degree(), 1);
    return 3 * std::max(pair.p.degree(), pair.q.degree()) * dw + 6;
}

} // namespace weylkit
