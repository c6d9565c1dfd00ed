#include "chx/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chx;

TEST_CASE("rationals reduce to canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(make_rational(-3, -9) == Rational(1, 3));
    CHECK(denominator(make_rational(6, -4)) == 2);
    CHECK(numerator(make_rational(6, -4)) == -3);
    CHECK_THROWS_AS((void)make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
    for (const char* text : {"0", "1", "-7", "3/4", "-22/7", "1000000000000000000000/7"}) {
        CHECK(to_string(parse_rational(text)) == text);
    }
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS((void)parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational(""), std::invalid_argument);
}

TEST_CASE("integrality checks") {
    CHECK(is_integer(Rational(8, 2)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
    CHECK(to_integer(Rational(-12, 4)) == -3);
    CHECK_THROWS_AS((void)to_integer(Rational(1, 2)), std::invalid_argument);
    CHECK(parity(Rational(6)) == 0);
    CHECK(parity(Rational(-9)) == 1);
    CHECK_THROWS_AS((void)parity(Rational(5, 2)), std::invalid_argument);
}

TEST_CASE("powers, factorials, binomials") {
    CHECK(pow_rational(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(pow_rational(Rational(3), -2) == Rational(1, 9));
    CHECK(pow_rational(Rational(0), 0) == 1);
    CHECK_THROWS_AS((void)pow_rational(Rational(0), -1), std::invalid_argument);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(7, -1) == 0);
}
