#include <catch2/catch_amalgamated.hpp>

#include "hodgeprobe/scalar.hpp"
#include "support/oracles.hpp"

using namespace hodgeprobe;

TEST_CASE("scalar arithmetic on the tower") {
    Scalar rt2 = Scalar::sqrt_d(2);
    Scalar i = Scalar::imaginary_unit();

    CHECK(rt2 * rt2 == Scalar(2));
    CHECK(i * i == Scalar(-1));
    CHECK((i * rt2) * (i * rt2) == Scalar(-2));
    CHECK((Scalar(1) + rt2) * (Scalar(1) - rt2) == Scalar(-1));

    Scalar z = Scalar(3) + Scalar(2) * rt2 + i - Scalar(5) * i * rt2;
    CHECK(z.level() == TowerLevel::gaussian);
    CHECK(z * z.inverse() == Scalar(1));
    CHECK(z + (-z) == Scalar(0));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).is_real());
}

TEST_CASE("scalar canonical form and level tags") {
    Scalar rt2 = Scalar::sqrt_d(2);
    CHECK((rt2 * rt2).level() == TowerLevel::rational);
    CHECK((rt2 * rt2).d() == 0); // quadratic part cancelled, tag drops
    CHECK(rt2.level() == TowerLevel::quadratic);
    CHECK(Scalar::imaginary_unit().level() == TowerLevel::gaussian);
    CHECK(Scalar(Rational(7, 2)).is_rational());
    CHECK_THROWS_AS(Scalar::sqrt_d(4), FieldMismatch);
    CHECK_THROWS_AS(Scalar::sqrt_d(2) + Scalar::sqrt_d(3), FieldMismatch);
}

TEST_CASE("exact sign of a + b sqrt(d) matches interval refinement") {
    oracles::Rng rng(20240711);
    for (int trial = 0; trial < 400; ++trial) {
        Rational a = rng.rational(-9, 9, 4);
        Rational b = rng.rational(-9, 9, 4);
        long d = (trial % 2 == 0) ? 2 : 5;
        Scalar s = Scalar::make(a, b, 0, 0, (b == 0) ? 0 : d);
        int expect = oracles::interval_sign(a, b, d);
        CHECK(s.sign_real() == expect);
    }
    // rationalization corner: a, b of opposite signs, close magnitudes
    CHECK(Scalar::make(Rational(-7), Rational(5), 0, 0, 2).sign_real() == 1);  // 5*sqrt2 ~ 7.07
    CHECK(Scalar::make(Rational(7), Rational(-5), 0, 0, 2).sign_real() == -1);
    CHECK(Scalar::make(Rational(17), Rational(-12), 0, 0, 2).sign_real() == 1); // 12*sqrt2 ~ 16.97
}

TEST_CASE("scalar parser round-trips canonical text") {
    oracles::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar s = Scalar::make(rng.rational(), rng.rational(), rng.rational(), rng.rational(), 2);
        CHECK(parse_scalar(s.str()) == s);
    }
    CHECK(parse_scalar("1/2+3*sqrt(2)") ==
          Scalar::make(Rational(1, 2), Rational(3), 0, 0, 2));
    CHECK(parse_scalar("-i") == -Scalar::imaginary_unit());
    CHECK(parse_scalar("(1+i)*(1-i)") == Scalar(2));
    CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("sqrt(2"), ParseError);
}
