#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "qmoment/sqrt2.hpp"

using namespace qmoment;
using fixtures::ra;
using fixtures::sq;
using fixtures::times_rt;

namespace {

std::mt19937 rng(20240901);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 24);
    return Rational(num(rng), den(rng));
}
Sqrt2 random_sqrt2() { return Sqrt2(random_rational(), random_rational()); }
// random element of Z[1/sqrt2]
Sqrt2 random_dyadic() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<int> e(0, 5);
    return Sqrt2(Rational(num(rng), 1L << e(rng)), Rational(num(rng), 1L << e(rng)));
}

} // namespace

TEST_CASE("rational canonical form and predicates") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational::parse("-14/21") == Rational(-2, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(100, 1).is_integer());
    CHECK_FALSE(Rational(3, 2).is_integer());
    // Catalan number C_4 = C(8,4)/5
    CHECK(Rational(binomial(8, 4), mpz_class(5)) == Rational(14));
    CHECK(Rational(binomial(8, 4), mpz_class(5)).is_integer());
    CHECK(Rational(3, 8).is_dyadic());
    CHECK_FALSE(Rational(1, 3).is_dyadic());
    CHECK(Rational(5, 1).is_dyadic()); // 2^0
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
}

TEST_CASE("pochhammer and generalized binomial") {
    CHECK(pochhammer(Rational(2), 3) == Rational(24));
    CHECK(pochhammer(Rational(9, 4), 0) == Rational(1));
    CHECK(pochhammer(Rational(9, 4), -1) == Rational(4, 5));
    CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(gen_binomial(Rational(5), 2) == Rational(10));
}

TEST_CASE("field operation examples") {
    CHECK(Sqrt2(1) * Sqrt2::sqrt2() == Sqrt2::sqrt2());
    CHECK(Sqrt2::sqrt2().inverse() == sq(0, 1, 1, 2)); // 1/sqrt2 = sqrt2/2
    CHECK(sq(1, 1, 1, 1) * sq(1, 1, -1, 1) == ra(-1)); // (1+r2)(1-r2) = -1
    CHECK_THROWS_AS(Sqrt2().inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        Sqrt2 x = random_sqrt2(), y = random_sqrt2(), z = random_sqrt2();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) + z == x + (y + z));
        if (!x.is_zero()) CHECK(x * x.inverse() == Sqrt2(1));
    }
}

TEST_CASE("membership in Z[1/sqrt2]") {
    CHECK(sq(-8, 1, 25, 2).in_z_inv_sqrt2()); // q^3 coefficient of Delta_1
    CHECK_FALSE(Sqrt2(Rational(1, 3)).in_z_inv_sqrt2());
    CHECK(Sqrt2().in_z_inv_sqrt2());
    // closure of the ring under +, -, *
    for (int i = 0; i < 200; ++i) {
        Sqrt2 x = random_dyadic(), y = random_dyadic();
        CHECK((x + y).in_z_inv_sqrt2());
        CHECK((x - y).in_z_inv_sqrt2());
        CHECK((x * y).in_z_inv_sqrt2());
    }
}

TEST_CASE("exact sign and ordering") {
    CHECK(Sqrt2::sqrt2().sign() == 1);
    CHECK(sq(-3, 2, 1, 1).sign() < 0);  // sqrt2 < 3/2
    CHECK(sq(-7, 5, 1, 1).sign() > 0);  // sqrt2 > 7/5
    CHECK(sq(3, 2, -1, 1).sign() > 0);
    CHECK(Sqrt2().sign() == 0);
    CHECK(sq(-1, 1, 5, 7).sign() > 0);  // 5/7 sqrt2 > 1
    for (int i = 0; i < 200; ++i) {
        Sqrt2 x = random_sqrt2(), y = random_sqrt2();
        double xd = x.a().num().get_d() / x.a().den().get_d() +
                    1.4142135623730951 * x.b().num().get_d() / x.b().den().get_d();
        double yd = y.a().num().get_d() / y.a().den().get_d() +
                    1.4142135623730951 * y.b().num().get_d() / y.b().den().get_d();
        if (std::abs(xd - yd) > 1e-9) CHECK((x < y) == (xd < yd));
    }
}

TEST_CASE("decimal rendering") {
    CHECK(Sqrt2::sqrt2().inverse().to_decimal(6) == "0.707107");
    CHECK((Sqrt2(2) - Sqrt2::sqrt2()).to_decimal(6) == "0.585786");
    CHECK(Sqrt2().to_decimal(6) == "0.000000");
    CHECK(Sqrt2(Rational(1192570000L)).to_decimal(6) == "1.19257e+09");
    CHECK(Sqrt2(Rational(178096)).to_decimal(6) == "178096");
    CHECK(Sqrt2(Rational(4398071, 100000)).to_decimal(6) == "43.9807");
    CHECK(Sqrt2(Rational(-1, 2)).to_decimal(3) == "-0.500");
    CHECK(Sqrt2(Rational(999999, 1000000)).to_decimal(3) == "1.00");
    CHECK(Sqrt2(Rational(1, 65536)).to_decimal(4) == "1.526e-05");
}

TEST_CASE("decimal rendering respects ordering") {
    for (int i = 0; i < 100; ++i) {
        Sqrt2 x = random_sqrt2(), y = random_sqrt2();
        if (x.is_zero() || y.is_zero() || x == y) continue;
        double xd = std::stod(x.to_decimal(20));
        double yd = std::stod(y.to_decimal(20));
        if (xd != yd) CHECK((x < y) == (xd < yd));
    }
}

TEST_CASE("half powers of two") {
    CHECK(pow2_half(0) == Sqrt2(1));
    CHECK(pow2_half(1) == Sqrt2::sqrt2());
    CHECK(pow2_half(-1) == sq(0, 1, 1, 2));
    CHECK(pow2_half(4) == Sqrt2(4));
    CHECK(pow2_half(-5) == sq(0, 1, 1, 8)); // 2^{-5/2} = sqrt2/8
    CHECK(pow2_half(7) == times_rt(8));
}
