#include <catch_amalgamated.hpp>

#include "fsigma/dyadic.hpp"

using namespace fsigma;

TEST_CASE("construction normalizes") {
    Dyadic half(2, 2);
    CHECK(half.numerator() == 1);
    CHECK(half.exponent() == 1);

    Dyadic zero(0, 5);
    CHECK(zero.numerator() == 0);
    CHECK(zero.exponent() == 0);
    CHECK(zero.is_zero());

    Dyadic d(13, 4);
    CHECK(d.numerator() == 13);
    CHECK(d.exponent() == 4);
}

TEST_CASE("arithmetic is exact") {
    Dyadic a(3, 2);   // 3/4
    Dyadic b(1, 3);   // 1/8
    CHECK(a + b == Dyadic(7, 3));
    CHECK(a - b == Dyadic(5, 3));
    CHECK(a * b == Dyadic(3, 5));
    CHECK(-a == Dyadic(-3, 2));
    CHECK(a + (-a) == Dyadic(0));
    CHECK(Dyadic(1, 1) + Dyadic(1, 1) == Dyadic(1));
}

TEST_CASE("ordering") {
    CHECK(Dyadic(1, 2) < Dyadic(1, 1));
    CHECK(Dyadic(-1, 1) < Dyadic(0));
    CHECK(Dyadic(5, 3) <= Dyadic(5, 3));
    CHECK(Dyadic(1) > Dyadic(15, 4));
    CHECK(Dyadic::compare(Dyadic(3, 2), Dyadic(6, 3)) == 0);
}

TEST_CASE("mul_pow2 in both directions") {
    Dyadic d(13, 4);
    CHECK(d.mul_pow2(4) == Dyadic(13));
    CHECK(d.mul_pow2(2) == Dyadic(13, 2));
    CHECK(d.mul_pow2(-3) == Dyadic(13, 7));
    CHECK(d.mul_pow2(3).mul_pow2(-3) == d);
    CHECK(Dyadic(6).mul_pow2(-1) == Dyadic(3));
}

TEST_CASE("midpoint") {
    CHECK(Dyadic::midpoint(Dyadic(0), Dyadic(1)) == Dyadic(1, 1));
    CHECK(Dyadic::midpoint(Dyadic(1, 1), Dyadic(3, 2)) == Dyadic(5, 3));
}

TEST_CASE("string form uses plain power-of-two denominators") {
    CHECK(Dyadic(13, 4).str() == "13/16");
    CHECK(Dyadic(-3, 2).str() == "-3/4");
    CHECK(Dyadic(0).str() == "0");
    CHECK(Dyadic(7).str() == "7");
}

TEST_CASE("rational view") {
    CHECK(Dyadic(3, 2).to_rational() == Rational(3, 4));
    CHECK(Dyadic(-1, 3).to_rational() == Rational(-1, 8));
}

TEST_CASE("log2_exact") {
    CHECK(log2_exact(Dyadic(1, 3)) == -3);
    CHECK(log2_exact(Dyadic(8)) == 3);
    CHECK(log2_exact(Dyadic(1)) == 0);
    CHECK(!log2_exact(Dyadic(3, 2)));
    CHECK(!log2_exact(Dyadic(0)));
    CHECK(!log2_exact(Dyadic(-2)));
}

TEST_CASE("interval validation") {
    CHECK_NOTHROW(Interval(Dyadic(1, 2), Dyadic(3, 2)));
    CHECK_NOTHROW(Interval(Dyadic(1, 1), Dyadic(1, 1)));  // degenerate but legal
    CHECK(Interval(Dyadic(1, 1), Dyadic(1, 1)).is_degenerate());
    CHECK_THROWS_AS(Interval(Dyadic(3, 2), Dyadic(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(Interval(Dyadic(-1, 1), Dyadic(1, 1)), std::invalid_argument);
    CHECK(Interval(Dyadic(1, 2), Dyadic(1)).width() == Dyadic(3, 2));
}
