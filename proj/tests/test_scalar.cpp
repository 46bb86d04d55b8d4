#include <doctest.h>

#include "testutil.hpp"
#include "weylkit/scalar.hpp"

using namespace weylkit;
using weylkit::testing::Rng;
using weylkit::testing::random_scalar;

TEST_CASE("scalar arithmetic basics") {
    Scalar one(1);
    Scalar s2 = Scalar::sqrt2();

    CHECK(one * s2 == s2);
    CHECK(s2 * s2 == Scalar(2));
    CHECK(one / s2 == Scalar(mpq_class(0), mpq_class(1, 2)));
    CHECK((one / s2) * s2 == one);

    Scalar mixed(mpq_class(3, 2), mpq_class(-1, 3));
    CHECK(mixed * mixed.inverse() == one);
    CHECK(mixed - mixed == Scalar(0));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::rational(1, 0), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Scalar c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("norm vanishes only at zero") {
    Rng rng(99);
    for (int t = 0; t < 500; ++t) {
        Scalar a = random_scalar(rng);
        if (a.is_zero())
            continue;
        CHECK(a.norm() != 0);
    }
    CHECK(Scalar(0).norm() == 0);
}

TEST_CASE("canonical text") {
    CHECK(Scalar(0).to_string() == "0");
    CHECK(Scalar(3).to_string() == "3");
    CHECK(Scalar::rational(-1, 2).to_string() == "-1/2");
    CHECK(Scalar::sqrt2().to_string() == "sqrt2");
    CHECK((-Scalar::sqrt2()).to_string() == "-sqrt2");
    CHECK(Scalar(mpq_class(0), mpq_class(-2, 3)).to_string() == "-2/3*sqrt2");
    CHECK(Scalar(mpq_class(1), mpq_class(-1)).to_string() == "1 - sqrt2");
    CHECK(Scalar(mpq_class(-1), mpq_class(1, 2)).to_string() == "-1 + 1/2*sqrt2");
}
