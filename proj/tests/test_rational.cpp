#include <doctest.h>

#include "mpkc/rational.hpp"

#include "mpkc/errors.hpp"

using namespace mpkc;

TEST_CASE("rational basics") {
    CHECK(Rational().is_zero());
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7) == Rational());
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational parse round trip") {
    for (const char* s : {"0", "7", "-7", "3/2", "-3/2", "123456789123456789123456789",
                          "1/123456789123456789123456789"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("4/6").str() == "2/3"); // reduced on input
    CHECK(Rational::parse("+5").str() == "5");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
}

TEST_CASE("rational arithmetic is exact") {
    Rational third(1, 3), sixth(1, 6), half(1, 2);
    CHECK(third + sixth == half);
    CHECK(half - third == sixth);
    CHECK(third * Rational(3) == Rational(1));
    CHECK((half + half + half).str() == "3/2");
    CHECK((Rational(1, 10) + Rational(2, 10)).str() == "3/10");

    // big values go through the arbitrary-precision path
    Rational big = Rational::parse("123456789123456789123456789/7");
    CHECK(big + big == Rational::parse("246913578246913578246913578/7"));
    CHECK((big - big).is_zero());
    CHECK(big * Rational(7) == Rational::parse("123456789123456789123456789"));
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational::parse("123456789123456789123456789") >
          Rational::parse("123456789123456789123456788"));
}

TEST_CASE("addition is associative identically") {
    // exactness property: (a+b)+c equals a+(b+c) with no tolerance
    const Rational vals[] = {Rational(1, 3), Rational(5, 7), Rational(9), Rational(0),
                             Rational(22, 6)};
    for (const auto& a : vals)
        for (const auto& b : vals)
            for (const auto& c : vals) CHECK((a + b) + c == a + (b + c));
}
