#include <doctest.h>

#include "testutil.hpp"
#include "weylkit/dixmier.hpp"

using namespace weylkit;
using namespace weylkit::testing;

namespace {
const WeylPoly X = WeylPoly::gen_x();
const WeylPoly Y = WeylPoly::gen_y();

ImagePair seed_pair() { return make_image_pair((X + Y) / Scalar(2), Y - X); }
} // namespace

TEST_CASE("image pair validation") {
    CHECK_NOTHROW(make_image_pair(X, Y + X * X));
    CHECK_THROWS_AS(make_image_pair(X, X), InvalidRelation);
    CHECK_THROWS_AS(make_image_pair(Y, X), InvalidRelation);
}

TEST_CASE("centralizer extraction") {
    Poly1 h1 = centralizer_poly(X, X.pow(3) + X * Scalar(2));
    CHECK(h1 == Poly1({Scalar(0), Scalar(2), Scalar(0), Scalar(1)}));

    Poly1 h2 = centralizer_poly(X * X, X.pow(4) + WeylPoly::one());
    CHECK(h2 == Poly1({Scalar(1), Scalar(0), Scalar(1)}));

    CHECK_THROWS_AS(centralizer_poly(X, Y), NotCentralizing);
    CHECK_THROWS_AS(centralizer_poly(WeylPoly::one(), WeylPoly::one()), ConstraintViolated);
}

TEST_CASE("centralizer round-trip on random data") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        WeylPoly p = random_nonzero_weyl(rng, 2, 2);
        if (p.is_constant())
            p += X;
        Poly1 h = random_poly1(rng, 4);
        CHECK(centralizer_poly(p, h.eval_in(p)) == h);
    }
}

TEST_CASE("membership examples") {
    ImagePair pair = make_image_pair(X, Y + X * X);

    MembershipResult m1 = membership(X, pair, 3);
    REQUIRE(m1.found());
    CHECK(*m1.table == WeylPoly::monomial(1, 0, Scalar(1)));

    MembershipResult m2 = membership(Y, pair, 3);
    REQUIRE(m2.found());
    CHECK(*m2.table == WeylPoly::monomial(0, 1, Scalar(1)) - WeylPoly::monomial(2, 0, Scalar(1)));

    CHECK(!membership(Y, pair, 1).found());
    CHECK(membership(Y, pair, 1).bound == 1);
}

TEST_CASE("membership is sound and never underdetermined") {
    Rng rng(17);
    for (int t = 0; t < 12; ++t) {
        GeneratorWord w = random_automorphism_word(rng, 2, 2);
        AlgebraMap m = word_to_map(w);
        if (std::max(m.img_x.degree(), m.img_y.degree()) > 4)
            continue;
        ImagePair pair = make_image_pair(m.img_x, m.img_y);
        WeylPoly probe = random_weyl(rng, 3, 3);
        MembershipResult res = membership(probe, pair, 8);
        if (res.found())
            CHECK(eval_table(*res.table, pair) == probe);
    }
}

TEST_CASE("automorphism decision") {
    DecisionResult d1 = automorphism_decision(make_image_pair(X, Y), 1);
    REQUIRE(d1.found());
    CHECK(d1.certificate->expr_x == WeylPoly::monomial(1, 0, Scalar(1)));
    CHECK(d1.certificate->expr_y == WeylPoly::monomial(0, 1, Scalar(1)));

    CHECK(automorphism_decision(make_image_pair(X, Y + X * X), 3).found());

    DecisionResult d3 = automorphism_decision(seed_pair(), 2);
    REQUIRE(d3.found());
    CHECK(d3.certificate->expr_x == WeylPoly::monomial(1, 0, Scalar(1)) -
                                        WeylPoly::monomial(0, 1, Scalar::rational(1, 2)));
    CHECK(d3.certificate->expr_y == WeylPoly::monomial(1, 0, Scalar(1)) +
                                        WeylPoly::monomial(0, 1, Scalar::rational(1, 2)));
}

TEST_CASE("gamma delta check") {
    Involution a = alpha();
    Involution b = beta();
    CHECK(gamma_delta_check(identity_map(), a, a));
    CHECK(!gamma_delta_check(identity_map(), a, b));

    GeneratorWord tri{{triangular_letter(Poly1({Scalar(0), Scalar(0), Scalar(1)}))}};
    AlgebraMap f = word_to_map(tri);
    CHECK(gamma_delta_check(f, conjugate_involution(a, tri), a));
}

TEST_CASE("gh check") {
    CHECK(gh_check(identity_map(), GeneratorWord{}, GeneratorWord{}) == GhClass::alpha_endo);

    Rng rng(29);
    GeneratorWord w = random_automorphism_word(rng, 2, 2);
    CHECK(gh_check(word_to_map(w), w, GeneratorWord{}) == GhClass::alpha_endo);

    GeneratorWord flip{{flip_letter()}};
    CHECK(gh_check(identity_map(), flip, GeneratorWord{}) == GhClass::alpha_anti_endo);

    AlgebraMap tri = word_to_map(GeneratorWord{{triangular_letter(Poly1::monomial(2, Scalar(1)))}});
    CHECK(gh_check(tri, GeneratorWord{}, GeneratorWord{}) == GhClass::neither);
}

TEST_CASE("gh check matches gamma delta on generated instances") {
    Rng rng(31);
    Involution a = alpha();
    for (int t = 0; t < 20; ++t) {
        GeneratorWord wf = random_automorphism_word(rng, 2, 2);
        AlgebraMap f = word_to_map(wf);
        GeneratorWord g = random_word(rng, 2, 2);
        GeneratorWord h = random_word(rng, 2, 2);

        GhClass cls = gh_check(f, g, h);
        bool gd = gamma_delta_check(f, conjugate_involution(a, g), conjugate_involution(a, h));
        CHECK((cls != GhClass::neither) == gd);
        if (cls != GhClass::neither) {
            bool same_parity = word_to_map(g).kind == word_to_map(h).kind;
            CHECK((cls == GhClass::alpha_endo) == same_parity);
        }
    }
}

TEST_CASE("restriction condition") {
    Involution a = alpha();

    RestrictionResult r1 = restriction_check(make_image_pair(X, Y), a, 2);
    REQUIRE(r1.restricts());
    CHECK(r1.witnesses->first == WeylPoly::monomial(0, 1, Scalar(1)));
    CHECK(r1.witnesses->second == WeylPoly::monomial(1, 0, Scalar(1)));

    RestrictionResult r2 = restriction_check(seed_pair(), a, 2);
    REQUIRE(r2.restricts());
    CHECK(r2.witnesses->first == WeylPoly::monomial(1, 0, Scalar(1)));
    CHECK(r2.witnesses->second == WeylPoly::monomial(0, 1, Scalar(-1)));

    CHECK(!restriction_check(make_image_pair(X, Y + X * X), a, 1).restricts());
}

TEST_CASE("corresponding involution on T") {
    ImagePair pair = make_image_pair(X, Y + X * X);
    auto [ep, eq] = corresponding_involution_on_t(alpha(), pair);
    CHECK(ep == pair.q);
    CHECK(eq == pair.p);

    auto [bp, bq] = corresponding_involution_on_t(beta(), pair);
    CHECK(bp == pair.p);
    CHECK(bq == -pair.q);

    auto [ip, iq] = corresponding_involution_on_t(alpha(), make_image_pair(X, Y));
    CHECK(ip == Y);
    CHECK(iq == X);
}

TEST_CASE("extension search") {
    SearchPool pool = SearchPool::default_pool(2);

    ExtensionResult e1 = extension_search(make_image_pair(X, Y), 0, pool);
    REQUIRE(e1.found());
    CHECK(e1.word->letters.empty());

    ExtensionResult e2 = extension_search(seed_pair(), 1, pool);
    REQUIRE(e2.found());
    CHECK(e2.word->letters.size() == 1);
    Involution gamma = conjugate_involution(alpha(), *e2.word);
    CHECK(gamma(seed_pair().p) == seed_pair().q);
    CHECK(gamma(seed_pair().q) == seed_pair().p);

    ExtensionResult e3 = extension_search(make_image_pair(X, Y + X * X), 0, pool);
    CHECK(!e3.found());
    CHECK(e3.bound == 0);
}

TEST_CASE("symmetrize search") {
    SearchPool pool = SearchPool::default_pool(2);

    SymmetrizeResult s1 = symmetrize_search(seed_pair(), WhichImage::p, 0, pool);
    REQUIRE(s1.found());
    CHECK(s1.word->letters.empty());
    CHECK(s1.parity == Parity::symmetric);

    SymmetrizeResult s2 = symmetrize_search(make_image_pair(X, Y), WhichImage::p, 1, pool);
    REQUIRE(s2.found());
    CHECK(apply(word_to_map(*s2.word), X) == (X + Y) / Scalar(2));
    CHECK(s2.parity == Parity::symmetric);

    SymmetrizeResult s3 = symmetrize_search(make_image_pair(X, Y), WhichImage::q, 1, pool);
    REQUIRE(s3.found());
    CHECK(s3.parity == Parity::skew);
}

TEST_CASE("symmetric image pipeline on the worked examples") {
    Involution a = alpha();
    Involution b = beta();

    PipelineResult p1 = symmetric_image_pipeline(seed_pair(), a, 12, WhichImage::p,
                                                 Parity::symmetric);
    REQUIRE(p1.found());
    CHECK(p1.s2.is_zero());
    CHECK(p1.h.is_zero());
    CHECK(p1.k2 == Y - X);
    CHECK(p1.bracket_identities);
    CHECK(eval_table(p1.certificate->expr_x, seed_pair()) == X);
    CHECK(eval_table(p1.certificate->expr_y, seed_pair()) == Y);

    PipelineResult p2 = symmetric_image_pipeline(make_image_pair(X, Y), b, 4, WhichImage::p,
                                                 Parity::symmetric);
    REQUIRE(p2.found());
    CHECK(p2.k2 == Y);

    CHECK_THROWS_AS(symmetric_image_pipeline(make_image_pair(X, Y), a, 4, WhichImage::p,
                                             Parity::symmetric),
                    ParityViolated);

    // skew branch: the seed pair's Q is alpha-skew
    PipelineResult p3 = symmetric_image_pipeline(seed_pair(), a, 12, WhichImage::q, Parity::skew);
    REQUIRE(p3.found());
    CHECK(p3.bracket_identities);
}

TEST_CASE("pipeline handles a nonzero centralizer part") {
    // P = X symmetric under beta; Q picks up the h(P) = P^3 + 1 tail.
    ImagePair pair = make_image_pair(X, Y + X.pow(3) + WeylPoly::one());
    PipelineResult res =
        symmetric_image_pipeline(pair, beta(), 8, WhichImage::p, Parity::symmetric);
    REQUIRE(res.found());
    CHECK(res.h == Poly1({Scalar(1), Scalar(0), Scalar(0), Scalar(1)}));
    CHECK(res.k2 == Y);
    CHECK(eval_table(res.certificate->expr_x, pair) == X);
    CHECK(eval_table(res.certificate->expr_y, pair) == Y);
}

TEST_CASE("pipeline on conjugated pairs") {
    Rng rng(37);
    Involution a = alpha();
    int done = 0;
    while (done < 5) {
        GeneratorWord w = random_word(rng, 2, 2);
        AlgebraMap g = word_to_map(w);
        WeylPoly p0 = seed_pair().p, q0 = seed_pair().q;
        WeylPoly gp = apply(g, p0), gq = apply(g, q0);
        ImagePair pair = g.kind == MapKind::homo ? make_image_pair(gp, gq)
                                                 : make_image_pair(gq, gp);
        if (std::max(pair.p.degree(), pair.q.degree()) > 4)
            continue;
        AlgebraMap g_inv = word_to_map(word_invert(w));
        Involution e(compose(compose(g, a.map()), g_inv));

        WeylPoly sel = pair.p;
        Parity parity = e(sel) == sel ? Parity::symmetric : Parity::skew;
        PipelineResult res = symmetric_image_pipeline(pair, e, 12, WhichImage::p, parity);
        CHECK(res.found());
        CHECK(res.bracket_identities);
        ++done;
    }
}

TEST_CASE("default membership bound") {
    ImagePair pair = make_image_pair(X, Y + X * X);
    CHECK(default_membership_bound(pair, X) == 3 * 2 * 1 + 6);
    CHECK(default_membership_bound(pair, X.pow(3)) == 3 * 2 * 3 + 6);
}
