#include "perispec/rational.hpp"

#include <doctest.h>

using namespace perispec;

TEST_SUITE("rational") {

TEST_CASE("parse round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-0") == Rational(0));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("parse keeps huge values exact") {
    auto r = parse_rational("123456789012345678901234567891/7");
    CHECK(rational_to_string(r) == "123456789012345678901234567891/7");
    CHECK(rational_to_string(parse_rational("123456789012345678901234567890/7")) ==
          "17636684144620811271604938270");  // divisible, so it normalizes
}

TEST_CASE("parse rejects malformed literals") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("complex arithmetic") {
    ComplexRational a{Rational(1, 2), Rational(1)};
    ComplexRational b{Rational(2), Rational(-3)};
    CHECK((a + b) == ComplexRational{Rational(5, 2), Rational(-2)});
    CHECK((a * b) == ComplexRational{Rational(4), Rational(1, 2)});
    CHECK(pow(ComplexRational{Rational(0), Rational(1)}, 2) ==
          ComplexRational{Rational(-1), Rational(0)});
    CHECK(pow(a, 0) == ComplexRational{Rational(1)});
}

TEST_CASE("complex formatting") {
    CHECK(complex_rational_to_string(ComplexRational{Rational(1, 2)}) == "1/2");
    CHECK(complex_rational_to_string(ComplexRational{Rational(1), Rational(2)}) == "1+2*i");
    CHECK(complex_rational_to_string(ComplexRational{Rational(1), Rational(-2)}) == "1-2*i");
    CHECK(complex_rational_to_string(ComplexRational{Rational(0), Rational(-1, 3)}) == "-1/3*i");
}

TEST_CASE("to_double") {
    CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(to_double(Rational(-7, 2)) == doctest::Approx(-3.5).epsilon(1e-15));
}

}  // TEST_SUITE
