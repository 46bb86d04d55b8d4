#pragma once

#include <optional>
#include <utility>

#include "weylkit/generator_word.hpp"
#include "weylkit/poly1.hpp"
#include "weylkit/weyl_poly.hpp"

namespace weylkit {

// Images P = f(X), Q = f(Y) of an endomorphism; [Q,P] = 1 so the generated
// subalgebra T is an isomorphic copy of A1.
struct ImagePair {
    WeylPoly p;
    WeylPoly q;
};

ImagePair make_image_pair(WeylPoly p, WeylPoly q);

// Coefficient table over pairs (i,j) standing for sum c_ij P^i Q^j; the
// normal-form basis of T makes WeylPoly the natural carrier.
using CoeffTable = WeylPoly;

WeylPoly eval_table(const CoeffTable& table, const ImagePair& pair);

// Expressions of X and Y as tables over (P,Q); evaluating them must
// reproduce the generators exactly, which certifies T = A1.
struct AutomorphismCertificate {
    CoeffTable expr_x;
    CoeffTable expr_y;
};

// Bounded-search result: Found tables are verified by evaluation;
// NotFoundUpTo(bound) is never a proof of non-membership.
struct MembershipResult {
    std::optional<CoeffTable> table;
    int bound = 0;
    bool found() const { return table.has_value(); }
};

// The polynomial h with c = h(p), extracted by graded leading-form
// elimination. The centralizer of a nonconstant p is K[p], so failure of the
// leading-form match on centralizing input signals an internal defect.
Poly1 centralizer_poly(const WeylPoly& p, const WeylPoly& c);

// Exact linear solve for w = sum c_ij P^i Q^j over all (i,j) with
// i deg(P) + j deg(Q) <= bound.
MembershipResult membership(const WeylPoly& w, const ImagePair& pair, int bound);

struct DecisionResult {
    std::optional<AutomorphismCertificate> certificate;
    int bound = 0;
    bool found() const { return certificate.has_value(); }
};

DecisionResult automorphism_decision(const ImagePair& pair, int bound);

// f o gamma = delta o f on the generators.
bool gamma_delta_check(const AlgebraMap& f, const Involution& gamma, const Involution& delta);

bool commutes_with_alpha(const AlgebraMap& f);

enum class GhClass { alpha_endo, alpha_anti_endo, neither };

// Classifies h o f o g^{-1} by alpha-commutation and kind.
GhClass gh_check(const AlgebraMap& f, const GeneratorWord& g, const GeneratorWord& h);

struct RestrictionResult {
    std::optional<std::pair<CoeffTable, CoeffTable>> witnesses; // tables for E(P), E(Q)
    int bound = 0;
    bool restricts() const { return witnesses.has_value(); }
};

// E restricted to T is an involution on T iff E(P), E(Q) lie back in T.
RestrictionResult restriction_check(const ImagePair& pair, const Involution& e, int bound);

// epsilon(P), epsilon(Q): E's generator images with X -> P, Y -> Q, the
// involution on T satisfying f o E = epsilon o f by construction.
std::pair<WeylPoly, WeylPoly> corresponding_involution_on_t(const Involution& e,
                                                            const ImagePair& pair);

struct ExtensionResult {
    std::optional<GeneratorWord> word;
    int bound = 0;
    bool found() const { return word.has_value(); }
};

// Searches for a word w such that the conjugate of alpha by w extends the
// involution P <-> Q of T to all of A1. Sound, incomplete.
ExtensionResult extension_search(const ImagePair& pair, int max_length, const SearchPool& pool);

enum class Parity { symmetric, skew };
enum class WhichImage { p, q };

struct SymmetrizeResult {
    std::optional<GeneratorWord> word;
    Parity parity = Parity::symmetric;
    int bound = 0;
    bool found() const { return word.has_value(); }
};

// Searches for a word whose map sends the selected image to an
// alpha-symmetric or alpha-skew element.
SymmetrizeResult symmetrize_search(const ImagePair& pair, WhichImage which, int max_length,
                                   const SearchPool& pool);

struct PipelineResult {
    std::optional<AutomorphismCertificate> certificate;
    int bound = 0;
    Poly1 h;
    WeylPoly s1; // the selected image, symmetric or skew under E
    WeylPoly s2; // centralizing piece of the other image, equals h(s1)
    WeylPoly k2; // active piece, commutator with s1 is +-1
    bool bracket_identities = false;
    bool found() const { return certificate.has_value(); }
};

// The certified route of the symmetric-image theorem: decompose the other
// image against E, extract h through the centralizer, check the bracket
// identities, decide automorphism on the cleaned pair and lift the
// certificate back to (P,Q).
PipelineResult symmetric_image_pipeline(const ImagePair& pair, const Involution& e, int bound,
                                        WhichImage which, Parity parity);

// CLI-facing default for the membership radius.
int default_membership_bound(const ImagePair& pair, const WeylPoly& w);

} // namespace weylkit
