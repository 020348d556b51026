#include <doctest.h>

#include <qumbral/rational.hpp>
#include <qumbral/rng.hpp>

using namespace qumbral;

TEST_CASE("rational canonical form") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(rational(0, 7) == rational(0));
    CHECK(rational(0).to_string() == "0");
    CHECK(rational(2, -4).denominator_str() == "2");
    CHECK(rational(2, -4).numerator_str() == "-1");
}

TEST_CASE("rational arithmetic") {
    CHECK(rational(1, 2) + rational(1, 3) == rational(5, 6));
    CHECK(rational(1, 2) - rational(1, 2) == rational(0));
    CHECK(rational(2, 3) * rational(3, 4) == rational(1, 2));
    CHECK(rational(2, 3) / rational(4, 3) == rational(1, 2));
    CHECK(-rational(3, 7) == rational(-3, 7));
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(3, 2).pow(3) == rational(27, 8));
    CHECK(rational(3, 2).pow(-2) == rational(4, 9));
    CHECK(rational(5, 3).reciprocal() == rational(3, 5));
}

TEST_CASE("rational error paths") {
    CHECK_THROWS_AS(rational(1, 0), arithmetic_error);
    CHECK_THROWS_AS(rational(1) / rational(0), arithmetic_error);
    CHECK_THROWS_AS(rational(0).reciprocal(), arithmetic_error);
    CHECK_THROWS_AS(rational(0).pow(-1), arithmetic_error);
    CHECK_THROWS_AS(rational::from_string("a/b"), parse_error);
    CHECK_THROWS_AS(rational::from_string("1/"), parse_error);
    CHECK_THROWS_AS(rational::from_string(""), parse_error);
    CHECK_THROWS_AS(rational::from_string("1/0"), arithmetic_error);
}

TEST_CASE("rational string round trip") {
    CHECK(rational::from_string("-7/21") == rational(-1, 3));
    CHECK(rational::from_string("42") == rational(42));
    CHECK(rational(22, -6).to_string() == "-11/3");
    CHECK(rational(9, 3).to_string() == "3");

    splitmix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        rational r = random_rational(rng);
        CHECK(rational::from_string(r.to_string()) == r);
    }
}

TEST_CASE("field axioms on random samples") {
    splitmix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == rational(1));
    CHECK(factorial(5) == rational(120));
    CHECK(factorial(24).to_string() == "620448401733239439360000");
    CHECK(binomial(5, 2) == rational(10));
    CHECK(binomial(3, 5) == rational(0));
}
