#include "weylkit/command.hpp"

#include <chrono>

#include "weylkit/detail/term_format.hpp"
#include "weylkit/dixmier.hpp"
#include "weylkit/parse.hpp"
#include "weylkit/plane.hpp"

namespace weylkit {

namespace {

using nlohmann::json;

std::string table_to_string(const CoeffTable& t) {
    std::vector<std::pair<ExpPair, Scalar>> ordered(t.terms().rbegin(), t.terms().rend());
    return detail::format_terms(ordered, "P", "Q");
}

json table_to_json(const CoeffTable& t) {
    json entries = json::array();
    for (const auto& [e, c] : t.terms())
        entries.push_back({{"i", e.x}, {"j", e.y}, {"c", c.to_string()}});
    return entries;
}

Poly1 poly1_from_weyl_y(const WeylPoly& u) {
    std::vector<Scalar> coeffs;
    for (const auto& [e, c] : u.terms()) {
        if (e.x != 0)
            throw ConstraintViolated("triangular polynomial must involve Y only");
        if (e.y >= static_cast<int>(coeffs.size()))
            coeffs.resize(static_cast<std::size_t>(e.y) + 1, Scalar(0));
        coeffs[static_cast<std::size_t>(e.y)] = c;
    }
    return Poly1(std::move(coeffs));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        if (end == std::string::npos)
            end = s.size();
        std::string piece = s.substr(start, end - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.erase(piece.begin());
        while (!piece.empty() && piece.back() == ' ')
            piece.pop_back();
        out.push_back(piece);
        start = end + 1;
    }
    return out;
}

Letter parse_letter(std::string text) {
    bool inverted = false;
    if (!text.empty() && text.front() == '~') {
        inverted = true;
        text.erase(text.begin());
    }
    if (text == "flip")
        return flip_letter();
    if (text == "phi")
        return phi_letter(inverted);
    if (text.rfind("lin:", 0) == 0) {
        std::vector<std::string> parts = split(text.substr(4), ',');
        if (parts.size() != 4)
            throw ConstraintViolated("linear letter needs four scalars: " + text);
        return linear_letter(parse_scalar(parts[0]), parse_scalar(parts[1]),
                             parse_scalar(parts[2]), parse_scalar(parts[3]), inverted);
    }
    if (text.rfind("tri:", 0) == 0)
        return triangular_letter(poly1_from_weyl_y(parse_weyl(text.substr(4))), inverted);
    throw ConstraintViolated("unknown word letter '" + text + "'");
}

GeneratorWord parse_word(const std::string& text) {
    GeneratorWord w;
    if (text.empty() || text == "id")
        return w;
    for (const auto& piece : split(text, ';'))
        if (!piece.empty())
            w.letters.push_back(parse_letter(piece));
    return w;
}

Involution parse_involution(const std::string& text) {
    if (text == "alpha")
        return alpha();
    if (text == "beta")
        return beta();
    std::vector<std::string> parts = split(text, ';');
    if (parts.size() != 2)
        throw ConstraintViolated("involution spec must be alpha, beta, or \"imgX;imgY\"");
    return Involution(make_map(parse_weyl(parts[0]), parse_weyl(parts[1]), MapKind::anti));
}

MapKind parse_kind(const std::string& kind, MapKind fallback) {
    if (kind.empty())
        return fallback;
    if (kind == "homo")
        return MapKind::homo;
    if (kind == "anti")
        return MapKind::anti;
    throw ConstraintViolated("kind must be homo or anti");
}

json word_to_json(const GeneratorWord& w) {
    json letters = json::array();
    for (const auto& l : w.letters) {
        json entry;
        if (const auto* lin = std::get_if<LinearLetter>(&l.payload)) {
            entry["type"] = "linear";
            entry["a"] = lin->a.to_string();
            entry["b"] = lin->b.to_string();
            entry["c"] = lin->c.to_string();
            entry["d"] = lin->d.to_string();
        } else if (const auto* tri = std::get_if<TriangularLetter>(&l.payload)) {
            entry["type"] = "triangular";
            entry["p"] = tri->p.to_string("Y");
        } else {
            entry["type"] = "flip";
        }
        entry["inverted"] = l.inverted;
        letters.push_back(entry);
    }
    return letters;
}

json plane_word_to_json(const FactorWord& w) {
    json letters = json::array();
    for (const auto& l : w.letters) {
        json entry;
        if (const auto* aff = std::get_if<AffineLetter>(&l)) {
            entry["type"] = "affine";
            entry["a"] = aff->a.to_string();
            entry["b"] = aff->b.to_string();
            entry["c"] = aff->c.to_string();
            entry["d"] = aff->d.to_string();
            entry["e"] = aff->e.to_string();
            entry["f"] = aff->f.to_string();
        } else {
            entry["type"] = "elementary";
            entry["p"] = std::get<ElementaryLetter>(l).p.to_string("y");
        }
        letters.push_back(entry);
    }
    return letters;
}

SearchPool pool_from_command(const Command& c) {
    if (c.pool_coeffs.empty())
        return SearchPool::default_pool(c.pool_degree);
    std::vector<Scalar> coeffs;
    for (const auto& s : c.pool_coeffs)
        coeffs.push_back(parse_scalar(s));
    return SearchPool::default_pool(c.pool_degree, std::move(coeffs));
}

const std::string& arg(const Command& c, std::size_t k) {
    if (k >= c.exprs.size())
        throw ConstraintViolated("missing argument #" + std::to_string(k + 1) + " for verb " +
                                 c.verb);
    return c.exprs[k];
}

ImagePair pair_from(const Command& c, std::size_t first = 0) {
    return make_image_pair(parse_weyl(arg(c, first)), parse_weyl(arg(c, first + 1)));
}

int bound_for(const Command& c, const ImagePair& pair) {
    if (c.bound)
        return *c.bound;
    return default_membership_bound(pair, WeylPoly::gen_x());
}

Report dispatch(const Command& c) {
    Report r;
    r.verb = c.verb;

    if (c.verb == "eval") {
        if (c.mode == "weyl")
            r.payload["value"] = parse_weyl(arg(c, 0)).to_string();
        else if (c.mode == "comm")
            r.payload["value"] = parse_comm(arg(c, 0)).to_string();
        else
            throw ConstraintViolated("mode must be weyl or comm");
        r.outcome = "ok";
        return r;
    }

    if (c.verb == "check-endo" || c.verb == "check-anti") {
        MapKind kind = c.verb == "check-endo" ? MapKind::homo : MapKind::anti;
        AlgebraMap f = make_map(parse_weyl(arg(c, 0)), parse_weyl(arg(c, 1)), kind);
        r.outcome = kind == MapKind::homo ? "valid-endomorphism" : "valid-anti-endomorphism";
        r.payload["img_x"] = f.img_x.to_string();
        r.payload["img_y"] = f.img_y.to_string();
        r.payload["alpha_commuting"] = commutes_with_alpha(f);
        return r;
    }

    if (c.verb == "check-involution") {
        MapKind kind = parse_kind(c.kind, MapKind::anti);
        AlgebraMap f = make_map(parse_weyl(arg(c, 0)), parse_weyl(arg(c, 1)), kind);
        r.outcome = check_involution(f) ? "involution" : "not-involution";
        r.payload["kind"] = kind == MapKind::homo ? "homo" : "anti";
        return r;
    }

    if (c.verb == "conjugate") {
        Involution base = parse_involution(arg(c, 0));
        Involution conj = conjugate_involution(base, parse_word(arg(c, 1)));
        r.outcome = "ok";
        r.payload["img_x"] = conj.map().img_x.to_string();
        r.payload["img_y"] = conj.map().img_y.to_string();
        r.payload["kind"] = "anti";
        return r;
    }

    if (c.verb == "sym-skew") {
        Involution inv = parse_involution(arg(c, 1));
        auto [s, k] = sym_skew_decompose(parse_weyl(arg(c, 0)), inv);
        r.outcome = "ok";
        r.payload["symmetric"] = s.to_string();
        r.payload["skew"] = k.to_string();
        return r;
    }

    if (c.verb == "alpha-family") {
        FamilyVariant variant =
            c.variant == "anti" ? FamilyVariant::anti : FamilyVariant::endo;
        std::vector<Scalar> cs;
        for (std::size_t k = 2; k < c.exprs.size(); ++k)
            cs.push_back(parse_scalar(c.exprs[k]));
        AlgebraMap f = alpha_family(parse_scalar(arg(c, 0)), parse_scalar(arg(c, 1)), cs, variant);
        r.outcome = "ok";
        r.payload["img_x"] = f.img_x.to_string();
        r.payload["img_y"] = f.img_y.to_string();
        r.payload["kind"] = f.kind == MapKind::homo ? "homo" : "anti";
        if (c.invert) {
            AlgebraMap g = alpha_family_invert(f);
            r.payload["inverse_img_x"] = g.img_x.to_string();
            r.payload["inverse_img_y"] = g.img_y.to_string();
        }
        return r;
    }

    if (c.verb == "centralizer") {
        Poly1 h = centralizer_poly(parse_weyl(arg(c, 0)), parse_weyl(arg(c, 1)));
        r.outcome = "ok";
        r.payload["h"] = h.to_string("t");
        return r;
    }

    if (c.verb == "membership") {
        WeylPoly w = parse_weyl(arg(c, 0));
        ImagePair pair = pair_from(c, 1);
        int bound = c.bound ? *c.bound : default_membership_bound(pair, w);
        MembershipResult m = membership(w, pair, bound);
        r.bound = m.bound;
        if (m.found()) {
            r.outcome = "found";
            r.payload["witness"] = table_to_string(*m.table);
            r.payload["witness_table"] = table_to_json(*m.table);
        } else {
            r.outcome = "not-found-up-to";
            r.exit_code = 2;
        }
        return r;
    }

    if (c.verb == "auto-decide") {
        ImagePair pair = pair_from(c);
        DecisionResult d = automorphism_decision(pair, bound_for(c, pair));
        r.bound = d.bound;
        if (d.found()) {
            r.outcome = "certificate";
            r.payload["expr_x"] = table_to_string(d.certificate->expr_x);
            r.payload["expr_y"] = table_to_string(d.certificate->expr_y);
            r.payload["expr_x_table"] = table_to_json(d.certificate->expr_x);
            r.payload["expr_y_table"] = table_to_json(d.certificate->expr_y);
        } else {
            r.outcome = "not-found-up-to";
            r.exit_code = 2;
        }
        return r;
    }

    if (c.verb == "gamma-delta") {
        AlgebraMap f = make_map(parse_weyl(arg(c, 0)), parse_weyl(arg(c, 1)), MapKind::homo);
        bool ok = gamma_delta_check(f, parse_involution(arg(c, 2)), parse_involution(arg(c, 3)));
        r.outcome = ok ? "holds" : "fails";
        return r;
    }

    if (c.verb == "gh-check") {
        MapKind kind = parse_kind(c.kind, MapKind::homo);
        AlgebraMap f = make_map(parse_weyl(arg(c, 0)), parse_weyl(arg(c, 1)), kind);
        GhClass cls = gh_check(f, parse_word(arg(c, 2)), parse_word(arg(c, 3)));
        r.outcome = cls == GhClass::alpha_endo        ? "alpha-endo"
                    : cls == GhClass::alpha_anti_endo ? "alpha-anti-endo"
                                                      : "neither";
        return r;
    }

    if (c.verb == "restriction") {
        ImagePair pair = pair_from(c);
        Involution e = parse_involution(arg(c, 2));
        RestrictionResult res = restriction_check(pair, e, bound_for(c, pair));
        r.bound = res.bound;
        if (res.restricts()) {
            r.outcome = "restricts";
            r.payload["image_of_p"] = table_to_string(res.witnesses->first);
            r.payload["image_of_q"] = table_to_string(res.witnesses->second);
        } else {
            r.outcome = "not-found-up-to";
            r.exit_code = 2;
        }
        return r;
    }

    if (c.verb == "extension-search") {
        ImagePair pair = pair_from(c);
        ExtensionResult res = extension_search(pair, c.word_length, pool_from_command(c));
        r.bound = res.bound;
        if (res.found()) {
            r.outcome = "found";
            r.payload["word"] = word_to_string(*res.word);
            r.payload["word_letters"] = word_to_json(*res.word);
        } else {
            r.outcome = "not-found-up-to";
            r.exit_code = 2;
        }
        return r;
    }

    if (c.verb == "sym-pipeline") {
        ImagePair pair = pair_from(c);
        Involution e = parse_involution(arg(c, 2));
        WhichImage which = c.which == "Q" ? WhichImage::q : WhichImage::p;
        Parity parity = c.parity == "skew" ? Parity::skew : Parity::symmetric;
        PipelineResult res = symmetric_image_pipeline(pair, e, bound_for(c, pair), which, parity);
        r.bound = res.bound;
        r.payload["h"] = res.h.to_string("t");
        r.payload["s1"] = res.s1.to_string();
        r.payload["s2"] = res.s2.to_string();
        r.payload["k2"] = res.k2.to_string();
        r.payload["bracket_identities"] = res.bracket_identities;
        if (res.found()) {
            r.outcome = "certificate";
            r.payload["expr_x"] = table_to_string(res.certificate->expr_x);
            r.payload["expr_y"] = table_to_string(res.certificate->expr_y);
            r.payload["expr_x_table"] = table_to_json(res.certificate->expr_x);
            r.payload["expr_y_table"] = table_to_json(res.certificate->expr_y);
        } else {
            r.outcome = "not-found-up-to";
            r.exit_code = 2;
        }
        return r;
    }

    if (c.verb == "symmetrize-search") {
        ImagePair pair = pair_from(c);
        WhichImage which = c.which == "Q" ? WhichImage::q : WhichImage::p;
        SymmetrizeResult res =
            symmetrize_search(pair, which, c.word_length, pool_from_command(c));
        r.bound = res.bound;
        if (res.found()) {
            r.outcome = "found";
            r.payload["word"] = word_to_string(*res.word);
            r.payload["word_letters"] = word_to_json(*res.word);
            r.payload["parity"] = res.parity == Parity::symmetric ? "sym" : "skew";
        } else {
            r.outcome = "not-found-up-to";
            r.exit_code = 2;
        }
        return r;
    }

    if (c.verb == "kxy-jacobian") {
        PlaneMap f{parse_comm(arg(c, 0)), parse_comm(arg(c, 1))};
        r.outcome = "ok";
        r.payload["jacobian"] = jacobian(f).to_string();
        return r;
    }

    if (c.verb == "kxy-factor") {
        PlaneMap f{parse_comm(arg(c, 0)), parse_comm(arg(c, 1))};
        FactorWord w = jvdk_factor(f);
        r.outcome = "factored";
        r.payload["word"] = word_to_string(w);
        r.payload["word_letters"] = plane_word_to_json(w);
        r.payload["length"] = w.letters.size();
        return r;
    }

    if (c.verb == "kxy-classify") {
        PlaneMap f{parse_comm(arg(c, 0)), parse_comm(arg(c, 1))};
        ClassifyResult res = involution_classify(f);
        switch (res.kind) {
        case PlaneInvolutionClass::alpha_class:
            r.outcome = "alpha-class";
            r.payload["conjugator"] = word_to_string(*res.conjugator);
            r.payload["conjugator_letters"] = plane_word_to_json(*res.conjugator);
            break;
        case PlaneInvolutionClass::minus_identity_class:
            r.outcome = "minus-identity-class";
            r.payload["note"] = res.note;
            break;
        case PlaneInvolutionClass::not_involution:
            r.outcome = "not-involution";
            break;
        }
        return r;
    }

    if (c.verb == "kxy-jc-check") {
        PlaneMap f{parse_comm(arg(c, 0)), parse_comm(arg(c, 1))};
        PlaneMap gamma{parse_comm(arg(c, 2)), parse_comm(arg(c, 3))};
        PlaneMap delta{parse_comm(arg(c, 4)), parse_comm(arg(c, 5))};
        JcCheckResult res = alpha_jc_check(f, gamma, delta);
        r.outcome = "ok";
        r.payload["jacobian"] = res.jac.to_string();
        r.payload["commutes"] = res.commutes;
        return r;
    }

    throw ConstraintViolated("unknown verb '" + c.verb + "'");
}

} // namespace

Report run_command(const Command& c) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    try {
        r = dispatch(c);
    } catch (const ParseError& e) {
        r.verb = c.verb;
        r.outcome = "error";
        r.exit_code = 1;
        r.payload = {{"error", e.code()},
                     {"message", e.what()},
                     {"position", e.position()},
                     {"expected", e.expected()}};
    } catch (const Error& e) {
        r.verb = c.verb;
        r.outcome = "error";
        r.exit_code = 1;
        r.payload = {{"error", e.code()}, {"message", e.what()}};
    } catch (const std::exception& e) {
        r.verb = c.verb;
        r.outcome = "error";
        r.exit_code = 1;
        r.payload = {{"error", "internal-error"}, {"message", e.what()}};
    }
    auto end = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return r;
}

} // namespace weylkit
