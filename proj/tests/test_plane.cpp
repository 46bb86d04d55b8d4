#include <doctest.h>

#include "testutil.hpp"
#include "weylkit/limits.hpp"
#include "weylkit/plane.hpp"

using namespace weylkit;
using namespace weylkit::testing;

namespace {
const CommPoly x = CommPoly::gen_x();
const CommPoly y = CommPoly::gen_y();
} // namespace

TEST_CASE("jacobian") {
    CHECK(jacobian(plane_identity()) == CommPoly::one());
    CHECK(jacobian(plane_alpha()) == CommPoly::constant(Scalar(-1)));
    CHECK(jacobian(PlaneMap{(x + y) / Scalar(2), y - x}) == CommPoly::one());
    CHECK(jacobian(PlaneMap{x * x, y}) == x * Scalar(2));
}

TEST_CASE("factorization of the worked examples") {
    FactorWord w1 = jvdk_factor(plane_alpha());
    CHECK(w1.letters.size() == 1);
    CHECK(std::holds_alternative<AffineLetter>(w1.letters[0]));

    FactorWord w2 = jvdk_factor(PlaneMap{x + y * y, y});
    CHECK(w2.letters.size() == 1);
    CHECK(std::holds_alternative<ElementaryLetter>(w2.letters[0]));

    CHECK_THROWS_AS(jvdk_factor(PlaneMap{x * x, y}), JacobianNotConstant);

    PlaneMap f{y, x + y * y};
    FactorWord w3 = jvdk_factor(f);
    CHECK(w3.letters.size() >= 2);
    CHECK(recompose(w3) == f);
}

TEST_CASE("factor words round-trip") {
    Rng rng(5);
    int saved = degree_limit();
    set_degree_limit(256);
    for (int t = 0; t < 30; ++t) {
        FactorWord w = random_factor_word(rng, 4, 4);
        PlaneMap m = recompose(w);
        FactorWord back = jvdk_factor(m);
        CHECK(recompose(back) == m);
    }
    set_degree_limit(saved);
}

TEST_CASE("jacobian is multiplicative on automorphisms") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        PlaneMap f = recompose(random_factor_word(rng, 3, 3));
        PlaneMap g = recompose(random_factor_word(rng, 3, 3));
        CHECK(jacobian(compose(f, g)) == jacobian(f) * jacobian(g));
    }
}

TEST_CASE("involution classification basics") {
    ClassifyResult r1 = involution_classify(plane_alpha());
    CHECK(r1.kind == PlaneInvolutionClass::alpha_class);
    REQUIRE(r1.conjugator.has_value());
    CHECK(r1.conjugator->letters.empty());

    ClassifyResult r2 = involution_classify(plane_beta());
    CHECK(r2.kind == PlaneInvolutionClass::alpha_class);
    PlaneMap w = recompose(*r2.conjugator);
    PlaneMap w_inv = recompose(word_inverse(*r2.conjugator));
    CHECK(compose(compose(w_inv, plane_alpha()), w) == plane_beta());

    ClassifyResult r3 = involution_classify(PlaneMap{-x, -y});
    CHECK(r3.kind == PlaneInvolutionClass::minus_identity_class);
    CHECK(!r3.note.empty());

    CHECK(involution_classify(plane_identity()).kind == PlaneInvolutionClass::not_involution);
    CHECK(involution_classify(PlaneMap{x + y * y, y}).kind ==
          PlaneInvolutionClass::not_involution);
}

TEST_CASE("classification of random conjugates of the swap") {
    Rng rng(19);
    int saved = degree_limit();
    set_degree_limit(256);
    int done = 0;
    while (done < 10) {
        FactorWord u = random_factor_word(rng, 3, 3, 4);
        PlaneMap um = recompose(u);
        PlaneMap um_inv = recompose(word_inverse(u));
        PlaneMap f = compose(compose(um_inv, plane_alpha()), um);
        if (std::max(f.img_x.degree(), f.img_y.degree()) > 9)
            continue;
        REQUIRE(is_order_two(f));

        ClassifyResult res = involution_classify(f);
        CHECK(res.kind == PlaneInvolutionClass::alpha_class);
        REQUIRE(res.conjugator.has_value());
        PlaneMap w = recompose(*res.conjugator);
        PlaneMap w_inv = recompose(word_inverse(*res.conjugator));
        CHECK(compose(compose(w_inv, plane_alpha()), w) == f);
        CHECK(jacobian(f) == CommPoly::constant(Scalar(-1)));
        ++done;
    }
    set_degree_limit(saved);
}

TEST_CASE("order-2 maps have constant jacobian of square one") {
    Rng rng(23);
    int saved = degree_limit();
    set_degree_limit(256);
    for (int t = 0; t < 8; ++t) {
        FactorWord u = random_factor_word(rng, 2, 2, 4);
        PlaneMap um = recompose(u);
        PlaneMap um_inv = recompose(word_inverse(u));
        for (PlaneMap core : {plane_alpha(), PlaneMap{-x, -y}}) {
            PlaneMap f = compose(compose(um_inv, core), um);
            CommPoly j = jacobian(f);
            REQUIRE(j.is_constant());
            Scalar c = j.constant_term();
            CHECK(c * c == Scalar(1));
        }
    }
    set_degree_limit(saved);
}

TEST_CASE("alpha jc check") {
    PlaneMap a = plane_alpha();
    PlaneMap b = plane_beta();

    JcCheckResult r1 = alpha_jc_check(plane_identity(), a, a);
    CHECK(r1.jac == CommPoly::one());
    CHECK(r1.commutes);

    // phi conjugates alpha to beta: phi o beta = alpha o phi
    PlaneMap phi{(x + y) / Scalar(2), y - x};
    JcCheckResult r2 = alpha_jc_check(phi, b, a);
    CHECK(r2.jac == CommPoly::one());
    CHECK(r2.commutes);

    JcCheckResult r3 = alpha_jc_check(PlaneMap{x * Scalar(2), y}, a, a);
    CHECK(r3.jac == CommPoly::constant(Scalar(2)));
    CHECK(!r3.commutes);

    CHECK_THROWS_AS(alpha_jc_check(plane_identity(), plane_identity(), a), NotInvolution);
    CHECK_THROWS_AS(alpha_jc_check(plane_identity(), a, PlaneMap{x + y, y}), NotInvolution);
}
