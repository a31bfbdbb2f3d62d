#include "simplicia/point.hpp"
#include "simplicia/rational.hpp"

#include <doctest.h>

using namespace simplicia;

TEST_CASE("parse_rational accepts fractions, integers and decimals")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/8") == Rational(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK(parse_rational(" 17/20 ") == Rational(17, 20));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-.5") == Rational(-1, 2));
    CHECK(parse_rational("1e3") == 1000);
    CHECK(parse_rational("2.5e-2") == Rational(1, 40));
    CHECK(parse_rational("0") == 0);
}

TEST_CASE("parse_rational rejects malformed text")
{
    for (const char* bad : {"", "  ", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "0x10", "1/2/3", "e5", "1e99999"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("rational rendering")
{
    CHECK(to_string(Rational(-6) / 4) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_decimal(Rational(2, 3)) == "0.666667");
    CHECK(to_decimal(Rational(313, 5832), 3) == "0.0537");
    CHECK(to_decimal(Rational(0)) == "0");
}

TEST_CASE("power and abs")
{
    CHECK(power(Rational(2, 3), 0) == 1);
    CHECK(power(Rational(2, 3), 6) == Rational(64, 729));
    CHECK(power(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
    CHECK(abs(Rational(3, 7)) == Rational(3, 7));
}

TEST_CASE("point arithmetic is exact")
{
    const Point a{Rational(0), Rational(0)};
    const Point b{Rational(1), Rational(0)};
    const Point c{Rational(1, 5), Rational(9, 10)};
    CHECK(midpoint(a, b) == Point{Rational(1, 2), Rational(0)});
    const std::vector<Point> tri{a, b, c};
    CHECK(centroid(tri) == Point{Rational(2, 5), Rational(3, 10)});
    const std::vector<Rational> w{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
    CHECK(affine_combination(tri, w) == Point{Rational(3, 10), Rational(9, 40)});
    CHECK(b - a + c == Point{Rational(6, 5), Rational(9, 10)});
    CHECK(Rational(2) * c / Rational(3) == Point{Rational(2, 15), Rational(3, 5)});
    CHECK(Point::zero(3).dim() == 3);
    CHECK(a < b);
    CHECK_FALSE(b < a);
}

TEST_CASE("parse_point and to_string round trip")
{
    const Point p = parse_point("1/4,-17/20,0.5");
    CHECK(p == Point{Rational(1, 4), Rational(-17, 20), Rational(1, 2)});
    CHECK(to_string(p) == "(1/4, -17/20, 1/2)");
    CHECK(parse_point("3").dim() == 1);
    CHECK_THROWS_AS(parse_point("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point(""), std::invalid_argument);
}
