#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>
#include <stdexcept>

#include "waring/scalars.hpp"

using waring::ComplexF;
using waring::QuadExt;
using waring::Rational;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
    CHECK(Rational(1) - Rational(1) == Rational(0));
    CHECK((Rational(5, 6) / Rational(5, 2)) == Rational(1, 3));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-1, 2).sign() == -1);
}

TEST_CASE("rational canonical form") {
    Rational x(6, -4);
    CHECK(x == Rational(-3, 2));
    CHECK(x.den() > 0);
    CHECK(x.str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 5).str() == "0");
}

TEST_CASE("rational parsing") {
    CHECK(Rational("5/6") == Rational(5, 6));
    CHECK(Rational("-7") == Rational(-7));
    CHECK(Rational("4/-6") == Rational(-2, 3));
    CHECK(Rational("123456789012345678901234567890/3") ==
          Rational("41152263004115226300411522630"));
    CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational("1/0"), std::domain_error);
}

TEST_CASE("rational division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(3, 0), std::domain_error);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!z.is_zero()) CHECK((x / z) * z == x);
    }
}

TEST_CASE("quadext defining relation and units") {
    QuadExt r5(Rational(0), Rational(1), 5);
    CHECK(r5 * r5 == QuadExt(5));
    QuadExt phi(Rational(1, 2), Rational(1, 2), 5);
    CHECK(phi * phi.conj() == QuadExt(-1));
    QuadExt beta(Rational(0), Rational(1, 2), 5);
    CHECK(beta * beta == QuadExt(Rational(5, 4)));
}

TEST_CASE("quadext rational values mix with any radicand") {
    QuadExt two(2);
    QuadExt r5(Rational(0), Rational(1), 5);
    CHECK((two + r5).d() == 5);
    CHECK(two * r5 == QuadExt(Rational(0), Rational(2), 5));
    // b collapsing to zero drops the radicand, so the value re-mixes freely
    QuadExt collapsed = r5 - r5 + QuadExt(3);
    CHECK(collapsed.is_rational());
    QuadExt i(Rational(0), Rational(1), -1);
    CHECK((collapsed + i).d() == -1);
}

TEST_CASE("quadext mismatched radicands rejected") {
    QuadExt r5(Rational(0), Rational(1), 5);
    QuadExt r2(Rational(0), Rational(1), 2);
    CHECK_THROWS_AS(r5 + r2, std::domain_error);
    CHECK_THROWS_AS(r5 * r2, std::domain_error);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 0), std::invalid_argument);
}

TEST_CASE("quadext division") {
    QuadExt x(Rational(3), Rational(-2), 5);
    QuadExt y(Rational(1), Rational(1), 5);
    CHECK((x / y) * y == x);
    CHECK_THROWS_AS(x / QuadExt(0), std::domain_error);
    // Gaussian rationals: (1+i)/(1-i) = i
    QuadExt ip(Rational(1), Rational(1), -1);
    QuadExt im(Rational(1), Rational(-1), -1);
    CHECK(ip / im == QuadExt(Rational(0), Rational(1), -1));
}

TEST_CASE("quadext field axioms on random triples") {
    std::mt19937 rng(226);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    auto rnd = [&]() {
        return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5);
    };
    for (int trial = 0; trial < 200; ++trial) {
        QuadExt x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!z.is_zero()) CHECK((x / z) * z == x);
    }
}

TEST_CASE("embedding into ComplexF commutes with arithmetic") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    auto rnd = [&](long d) {
        return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
    };
    for (long d : {5L, -1L}) {
        for (int trial = 0; trial < 100; ++trial) {
            QuadExt x = rnd(d), y = rnd(d);
            ComplexF xc = waring::to_complex(x), yc = waring::to_complex(y);
            auto close = [](ComplexF u, ComplexF v) {
                return std::abs(u - v) <= 1e-12 * (1.0 + std::abs(u) + std::abs(v));
            };
            CHECK(close(waring::to_complex(x + y), xc + yc));
            CHECK(close(waring::to_complex(x * y), xc * yc));
            if (!y.is_zero()) CHECK(close(waring::to_complex(x / y), xc / yc));
        }
    }
}

TEST_CASE("complex embedding of pure rationals") {
    CHECK(waring::to_complex(Rational(-3, 4)) == ComplexF(-0.75, 0.0));
    QuadExt i(Rational(0), Rational(1), -1);
    CHECK(waring::to_complex(i) == ComplexF(0.0, 1.0));
    CHECK_THROWS_AS(i.to_double(), std::domain_error);
}
