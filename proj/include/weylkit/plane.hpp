#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylkit/comm_poly.hpp"
#include "weylkit/poly1.hpp"

namespace weylkit {

// Endomorphism of K[x,y] by generator images; automorphism status is decided
// by factorization, not at construction.
struct PlaneMap {
    CommPoly img_x;
    CommPoly img_y;

    bool operator==(const PlaneMap& o) const {
        return img_x == o.img_x && img_y == o.img_y;
    }
};

CommPoly apply(const PlaneMap& f, const CommPoly& u);
PlaneMap compose(const PlaneMap& f, const PlaneMap& g); // (f o g)(u) = f(g(u))

PlaneMap plane_identity();
PlaneMap plane_alpha(); // x <-> y
PlaneMap plane_beta();  // x -> x, y -> -y
bool is_plane_identity(const PlaneMap& f);
bool is_order_two(const PlaneMap& f);

// x -> a x + b y + e, y -> c x + d y + f with ad - bc != 0.
struct AffineLetter {
    Scalar a, b, c, d, e, f;
};

// x -> x + p(y), y -> y.
struct ElementaryLetter {
    Poly1 p;
};

using PlaneLetter = std::variant<AffineLetter, ElementaryLetter>;

struct FactorWord {
    std::vector<PlaneLetter> letters;
};

AffineLetter affine_letter(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                           const Scalar& e, const Scalar& f);
PlaneMap letter_map(const PlaneLetter& l);
PlaneLetter letter_inverse(const PlaneLetter& l);
PlaneMap recompose(const FactorWord& w); // letters[0] o letters[1] o ...
FactorWord word_inverse(const FactorWord& w);
std::string letter_to_string(const PlaneLetter& l);
std::string word_to_string(const FactorWord& w);

// Jac(f) = dx(img_x) dy(img_y) - dy(img_x) dx(img_y), exact.
CommPoly jacobian(const PlaneMap& f);

// Tame factorization by leading-form peeling. Throws JacobianNotConstant for
// non-automorphisms detected by the Jacobian, PeelingStuck if a degree step
// cannot be reduced (an implementation bug or a Keller-style map; surfaced
// loudly, never treated as a disproof of invertibility).
FactorWord jvdk_factor(const PlaneMap& f);

enum class PlaneInvolutionClass { alpha_class, minus_identity_class, not_involution };

struct ClassifyResult {
    PlaneInvolutionClass kind = PlaneInvolutionClass::not_involution;
    // For alpha_class: w with recompose(w)^{-1} o alpha o recompose(w) = f.
    std::optional<FactorWord> conjugator;
    // Nonempty for minus_identity_class: order-2 automorphisms with
    // Jacobian +1 cannot be conjugates of alpha, whose conjugates all have
    // Jacobian -1.
    std::string note;
};

ClassifyResult involution_classify(const PlaneMap& f);

struct JcCheckResult {
    CommPoly jac;
    bool commutes = false;
};

// Jacobian of f plus the check f o gamma = delta o f on the generators;
// gamma and delta must be order-2 automorphisms.
JcCheckResult alpha_jc_check(const PlaneMap& f, const PlaneMap& gamma, const PlaneMap& delta);

} // namespace weylkit
