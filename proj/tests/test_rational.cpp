#include "floerlab/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace floerlab;

TEST_CASE("parse_rational accepts fractions, integers and decimals")
{
    CHECK(parse_rational("1/10") == Rational(1, 10));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
}

TEST_CASE("parse_rational rejects malformed input")
{
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("to_string is canonical and round-trips")
{
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    for (long p = -12; p <= 12; ++p)
        for (long q = 1; q <= 7; ++q) {
            const Rational r = make_rational(p, q);
            CHECK(parse_rational(to_string(r)) == r);
        }
}

TEST_CASE("floor_to_long rounds toward negative infinity")
{
    CHECK(floor_to_long(Rational(7, 2)) == 3);
    CHECK(floor_to_long(Rational(-7, 2)) == -4);
    CHECK(floor_to_long(Rational(-4)) == -4);
    CHECK(floor_to_long(Rational(0)) == 0);
}
