#include <doctest.h>

#include "oracle.hpp"
#include "testutil.hpp"
#include "weylkit/limits.hpp"
#include "weylkit/weyl_poly.hpp"

using namespace weylkit;
using namespace weylkit::testing;

namespace {
const WeylPoly X = WeylPoly::gen_x();
const WeylPoly Y = WeylPoly::gen_y();
} // namespace

TEST_CASE("defining relation and basic products") {
    CHECK(Y * X == X * Y + WeylPoly::one());
    CHECK(X * Y == WeylPoly::monomial(1, 1, Scalar(1)));

    WeylPoly y2x2 = (Y * Y) * (X * X);
    WeylPoly expected = WeylPoly::monomial(2, 2, Scalar(1)) + WeylPoly::monomial(1, 1, Scalar(4)) +
                        WeylPoly::constant(Scalar(2));
    CHECK(y2x2 == expected);
    CHECK(y2x2 == oracle_mul(Y * Y, X * X));
}

TEST_CASE("reorder closed formula") {
    CHECK(reorder(1, 1) == X * Y + WeylPoly::one());
    CHECK(reorder(0, 5) == X.pow(5));
    CHECK(reorder(2, 2) == WeylPoly::monomial(2, 2, Scalar(1)) +
                               WeylPoly::monomial(1, 1, Scalar(4)) + WeylPoly::constant(Scalar(2)));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            CHECK(reorder(m, n) == oracle_reorder(m, n));
}

TEST_CASE("commutators") {
    CHECK(commutator(Y, X) == WeylPoly::one());
    WeylPoly u = X * Y + X.pow(3);
    CHECK(commutator(u, u).is_zero());
    CHECK(commutator(Y * Y, X) == Y * Scalar(2));
}

TEST_CASE("substitution") {
    WeylPoly relation = Y * X - X * Y;
    CHECK(substitute(relation, X, Y + X * X, MapKind::homo) == WeylPoly::one());
    CHECK(substitute(X * Y, X, Y + X * X, MapKind::homo) == X * Y + X.pow(3));
    CHECK(substitute(X * X * Y, Y, X, MapKind::anti) == X * Y * Y);
}

TEST_CASE("substitute respects kind multiplicativity") {
    Rng rng(7);
    WeylPoly ix = X;
    WeylPoly iy = Y + X * X; // triangular endomorphism images
    for (int t = 0; t < 40; ++t) {
        WeylPoly u = random_weyl(rng, 3, 3);
        WeylPoly v = random_weyl(rng, 3, 3);
        CHECK(substitute(u * v, ix, iy, MapKind::homo) ==
              substitute(u, ix, iy, MapKind::homo) * substitute(v, ix, iy, MapKind::homo));
        CHECK(substitute(u * v, Y, X, MapKind::anti) ==
              substitute(v, Y, X, MapKind::anti) * substitute(u, Y, X, MapKind::anti));
    }
}

TEST_CASE("degree and leading form") {
    CHECK((X * Y + WeylPoly::one()).degree() == 2);
    CHECK(WeylPoly::one().degree() == 0);
    CHECK(WeylPoly::zero().degree() == -1);
    CHECK(WeylPoly::zero().is_constant());

    WeylPoly u = WeylPoly::monomial(2, 2, Scalar(1)) + WeylPoly::monomial(1, 1, Scalar(4)) +
                 WeylPoly::constant(Scalar(2));
    CHECK(u.leading_form() == WeylPoly::monomial(2, 2, Scalar(1)));
    CHECK_THROWS_AS(WeylPoly::zero().leading_form(), ZeroElement);
}

TEST_CASE("product degree is additive, commutator drops by two") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        WeylPoly u = random_nonzero_weyl(rng, 4, 3);
        WeylPoly v = random_nonzero_weyl(rng, 4, 3);
        CHECK((u * v).degree() == u.degree() + v.degree());
        WeylPoly c = commutator(u, v);
        if (!c.is_zero())
            CHECK(c.degree() <= u.degree() + v.degree() - 2);
    }
}

TEST_CASE("associativity on random triples") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        WeylPoly u = random_weyl(rng, 4, 3);
        WeylPoly v = random_weyl(rng, 4, 3);
        WeylPoly w = random_weyl(rng, 4, 3);
        CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("multiplication against the rewrite oracle") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        WeylPoly u = random_weyl(rng, 5, 4, true);
        WeylPoly v = random_weyl(rng, 5, 4, true);
        CHECK(u * v == oracle_mul(u, v));
    }
}

TEST_CASE("degree cap aborts runaway expansion") {
    int saved = degree_limit();
    set_degree_limit(8);
    CHECK_THROWS_AS(X.pow(5) * X.pow(5), DegreeLimitExceeded);
    set_degree_limit(saved);
}

TEST_CASE("canonical weyl text") {
    CHECK((Y * Y * X * X).to_string() == "X^2*Y^2 + 4*X*Y + 2");
    CHECK(((X - Y) * (X - Y)).to_string() == "X^2 - 2*X*Y + Y^2 - 1");
    CHECK(WeylPoly::zero().to_string() == "0");
    CHECK((X * Scalar::sqrt2() - WeylPoly::one()).to_string() == "sqrt2*X - 1");
    CHECK((X * Scalar(mpq_class(1), mpq_class(1)) + WeylPoly::constant(Scalar(2)))
              .to_string() == "(1 + sqrt2)*X + 2");
}
