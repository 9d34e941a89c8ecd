#include <doctest.h>

#include <random>

#include "partialcramer/scalar.hpp"

using namespace cramer;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    Scalar s = Scalar::rational(6, 4);
    CHECK(s == Scalar::rational(3, 2));
    CHECK(s.to_string() == "3/2");

    CHECK(Scalar::rational(2, -4).to_string() == "-1/2");
    CHECK(Scalar::rational(-2, -4).to_string() == "1/2");
    CHECK(Scalar::rational(0, 7).to_string() == "0");

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 500);
    for (int t = 0; t < 200; ++t) {
        long long d = den(rng);
        Scalar r = Scalar::rational(num(rng), (t % 2 == 0) ? d : -d);
        const BigRational& v = r.as_rational();
        CHECK(denominator(v) > 0);
        CHECK(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(numerator(v))),
                                         BigInt(denominator(v))) == 1);
    }
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Scalar::rational(1, 0), Error);
}

TEST_CASE("arithmetic stays exact") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(1, 6);
    CHECK(a + b == Scalar::rational(1, 2));
    CHECK(a - b == Scalar::rational(1, 6));
    CHECK(a * b == Scalar::rational(1, 18));
    CHECK(a / b == Scalar::rational(2));
    CHECK(-a == Scalar::rational(-1, 3));
    CHECK_THROWS_AS(a / Scalar::rational(0), Error);
}

TEST_CASE("kinds never mix") {
    Scalar r = Scalar::rational(1, 2);
    Scalar f = Scalar::float64(0.5);
    CHECK_THROWS_AS(r + f, ScalarKindError);
    CHECK_THROWS_AS(r == f, ScalarKindError);
    CHECK_THROWS_AS(f.as_rational(), ScalarKindError);
    CHECK_THROWS_AS(r.as_float(), ScalarKindError);
}

TEST_CASE("conversions between the kinds") {
    // A double converts to exactly the dyadic rational it stores.
    Scalar f = Scalar::float64(0.375);
    CHECK(f.to_kind(ScalarKind::rational) == Scalar::rational(3, 8));

    Scalar r = Scalar::rational(1, 2);
    CHECK(r.to_kind(ScalarKind::float64).as_float() == 0.5);
}

TEST_CASE("float formatting round-trips") {
    Scalar f = Scalar::float64(0.1);
    CHECK(f.to_string() == "0.1");
    CHECK(Scalar::float64(-3.0).to_string() == "-3");
}

TEST_CASE("approx_equal is absolute-or-relative") {
    CHECK(approx_equal(1.0, 1.0 + 5e-10));
    CHECK(approx_equal(1e12, 1e12 * (1 + 1e-10)));
    CHECK_FALSE(approx_equal(1.0, 1.001));
    CHECK(approx_equal(0.0, 1e-10));
}
