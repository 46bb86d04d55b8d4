#pragma once

#include <utility>
#include <vector>

#include "weylkit/weyl_poly.hpp"

namespace weylkit {

// Endomorphism or anti-endomorphism of A1, stored by generator images.
// Validity: homo requires [img_y, img_x] = 1, anti requires [img_y, img_x] = -1.
struct AlgebraMap {
    WeylPoly img_x;
    WeylPoly img_y;
    MapKind kind = MapKind::homo;
};

// Validated constructor; throws InvalidRelation when the commutator test fails.
AlgebraMap make_map(WeylPoly img_x, WeylPoly img_y, MapKind kind);

bool relation_holds(const AlgebraMap& f);

WeylPoly apply(const AlgebraMap& f, const WeylPoly& u);

// f after g, i.e. (f o g)(u) = f(g(u)); kinds multiply (anti o anti = homo).
AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g);

AlgebraMap identity_map();
bool is_identity(const AlgebraMap& f);

// The exchange involution alpha: X -> Y, Y -> X (anti).
AlgebraMap exchange_involution();
// beta: X -> X, Y -> -Y (anti), conjugate to alpha by phi.
AlgebraMap beta_involution();
// phi: X -> (X+Y)/2, Y -> Y-X (automorphism).
AlgebraMap phi_automorphism();
AlgebraMap phi_inverse();

// True iff f is an anti-map and f o f fixes both generators.
bool check_involution(const AlgebraMap& f);

// Order-2 anti-automorphism of A1. Order-2 automorphisms (such as
// X -> -X, Y -> -Y) are deliberately not Involutions; they stay plain
// AlgebraMaps.
class Involution {
public:
    explicit Involution(AlgebraMap map);

    const AlgebraMap& map() const { return map_; }
    WeylPoly operator()(const WeylPoly& u) const { return apply(map_, u); }

private:
    AlgebraMap map_;
};

Involution alpha();
Involution beta();

// S = (u + i(u))/2, K = (u - i(u))/2; i(S) = S, i(K) = -K, S + K = u.
std::pair<WeylPoly, WeylPoly> sym_skew_decompose(const WeylPoly& u, const Involution& inv);

enum class FamilyVariant { endo, anti };

// The classified alpha-commuting family:
//   f(X) = aX + bY + sum_j c_j (X-Y)^{2j},  f(Y) = aY + bX + sum_j c_j (X-Y)^{2j},
// with a^2 - b^2 = 1 for endomorphisms and -1 for anti-endomorphisms.
AlgebraMap alpha_family(const Scalar& a, const Scalar& b, const std::vector<Scalar>& cs,
                        FamilyVariant variant);

struct FamilyForm {
    Scalar a;
    Scalar b;
    std::vector<Scalar> cs;
    FamilyVariant variant;
};

// Matches f against the family template by triangular elimination in the
// monomial basis; throws NotFamilyForm (reporting the residual) on mismatch.
FamilyForm recognize_alpha_family(const AlgebraMap& f);

// Closed-form inverse of an endo-variant family member: (a, b, c_j) maps to
// (a, -b, -c_j (a+b)^{2j-1}). The anti member alpha is self-inverse.
AlgebraMap alpha_family_invert(const AlgebraMap& f);

} // namespace weylkit
