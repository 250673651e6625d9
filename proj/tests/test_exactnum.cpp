#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"
#include "schurdex/exactnum.hpp"

using namespace schurdex;
using arith::i64;

namespace {

// Numerical embedding ζ_m ↦ e^{2πi/m}; an independent oracle for the exact
// arithmetic (it never touches Φ_n reduction or order minimization).
std::complex<double> embed(const Cyclotomic& x) {
    std::complex<double> z = 0;
    const double m = static_cast<double>(x.order());
    for (std::size_t j = 0; j < x.coeffs().size(); ++j)
        z += x.coeffs()[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / m);
    return z;
}

std::complex<double> embed_root(i64 n, i64 k) {
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

struct RandomCyc {
    std::mt19937_64 rng{12345};

    // Small integer combination of n-th roots of unity, with the raw complex value.
    std::pair<Cyclotomic, std::complex<double>> draw(i64 n, int terms = 4) {
        Cyclotomic x;
        std::complex<double> z = 0;
        for (int i = 0; i < terms; ++i) {
            i64 k = std::uniform_int_distribution<i64>(0, n - 1)(rng);
            long c = std::uniform_int_distribution<long>(-3, 3)(rng);
            x = x + Cyclotomic(c) * cyc_root(n, k);
            z += static_cast<double>(c) * embed_root(n, k);
        }
        return {x, z};
    }
};

}  // namespace

TEST_CASE("cyc_root examples") {
    auto m1 = cyc_root(4, 2);
    CHECK(m1.order() == 1);
    CHECK(m1 == Cyclotomic(-1L));
    CHECK(cyc_add(cyc_root(3, 1), cyc_root(3, 2)) == Cyclotomic(-1L));
    CHECK(cyc_root(12, 9) == cyc_root(4, 3));
    CHECK(cyc_root(12, 9).order() == 4);
    CHECK(cyc_root(6, 1).order() == 3);
    CHECK(cyc_root(1, 0) == Cyclotomic(1L));
    CHECK(cyc_root(2, 1) == Cyclotomic(-1L));
}

TEST_CASE("cyc_add / cyc_mul / cyc_eq examples") {
    auto i = cyc_root(4, 1);
    CHECK(cyc_mul(i, i) == Cyclotomic(-1L));
    // (1+i)^2 = 1 + 2i + i^2 = 2i
    auto one_i = Cyclotomic(1L) + i;
    CHECK(cyc_mul(one_i, one_i) == Cyclotomic(2L) * i);
    // ζ_6 = e^{iπ/3} = -ζ_3^2: Φ_3 = t^2+t+1 gives -t^2 = t+1 = 1+ζ_3.
    CHECK(cyc_eq(cyc_root(6, 1), -cyc_root(3, 2)));
    CHECK(cyc_root(6, 1) == Cyclotomic(1L) + cyc_root(3, 1));
}

TEST_CASE("zero and rationals are order 1 with canonical storage") {
    Cyclotomic z = cyc_root(5, 1) - cyc_root(5, 1);
    CHECK(z.is_zero());
    CHECK(z.coeffs().empty());
    CHECK(z.order() == 1);
    Cyclotomic s;
    for (i64 k = 0; k < 7; ++k) s = s + cyc_root(7, k);
    CHECK(s.is_zero());
    CHECK(Cyclotomic(Rational(3, 6)).rational_value() == Rational(1, 2));
}

TEST_CASE("galois_apply examples") {
    CHECK(galois_apply(GaloisAut(12, 5), cyc_root(12, 1)) == cyc_root(12, 5));
    auto sqrt2 = cyc_root(8, 1) + cyc_root(8, -1);
    CHECK(galois_apply(GaloisAut(8, 7), sqrt2) == sqrt2);
    CHECK(sqrt2 * sqrt2 == Cyclotomic(2L));
    RandomCyc gen;
    auto [x, zx] = gen.draw(20);
    CHECK(galois_apply(GaloisAut(20, 1), x) == x);
    CHECK_THROWS_AS(galois_apply(GaloisAut(5, 2), cyc_root(4, 1)), Error);
    CHECK_THROWS_AS(GaloisAut(12, 4), Error);
}

TEST_CASE("root_of_unity_order examples") {
    CHECK(root_of_unity_order(Cyclotomic(-1L)) == 2);
    CHECK(root_of_unity_order(cyc_root(12, 9)) == 4);
    CHECK_FALSE(root_of_unity_order(Cyclotomic(1L) + cyc_root(4, 1)).has_value());
    CHECK(root_of_unity_order(Cyclotomic(1L)) == 1);
    CHECK_FALSE(root_of_unity_order(Cyclotomic()).has_value());
    CHECK_FALSE(root_of_unity_order(Cyclotomic(2L)).has_value());
    // -ζ_3 has order 6 and is stored in Q(ζ_3)
    CHECK(root_of_unity_order(-cyc_root(3, 1)) == 6);
}

TEST_CASE("conjugate_product examples") {
    auto x = Cyclotomic(1L) + cyc_root(4, 1);
    CHECK(conjugate_product(x, GaloisAut(12, 7), 2) == Cyclotomic(2L));
    CHECK(conjugate_product(x, GaloisAut(12, 7), 1) == x);
    CHECK(conjugate_product(cyc_root(12, 1), GaloisAut(12, 5), 2) == Cyclotomic(-1L));
    CHECK_THROWS_AS(conjugate_product(cyc_root(8, 1), GaloisAut(12, 5), 2), Error);
}

TEST_CASE("inverse and division") {
    auto x = Cyclotomic(1L) + cyc_root(4, 1);
    CHECK(x * x.inverse() == Cyclotomic(1L));
    auto y = Cyclotomic(2L) + cyc_root(15, 4) - cyc_root(15, 7);
    CHECK(y * y.inverse() == Cyclotomic(1L));
    CHECK((y / x) * x == y);
    CHECK(cyc_root(7, 3).pow(-1) == cyc_root(7, 4));
}

TEST_CASE("to_string rendering") {
    CHECK((Cyclotomic(1L) + cyc_root(4, 1)).to_string() == "1+E(4)");
    CHECK(Cyclotomic(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(cyc_root(3, 2).to_string() == "-1-E(3)");
    CHECK(Cyclotomic().to_string() == "0");
}

TEST_CASE("property: canonical form agrees with the complex embedding") {
    RandomCyc gen;
    for (int trial = 0; trial < 300; ++trial) {
        i64 n = std::uniform_int_distribution<i64>(1, 60)(gen.rng);
        i64 n2 = std::uniform_int_distribution<i64>(1, 60)(gen.rng);
        auto [x, zx] = gen.draw(n);
        auto [y, zy] = gen.draw(n2);
        CHECK(close(embed(x), zx));
        CHECK(close(embed(x + y), zx + zy));
        CHECK(close(embed(x * y), zx * zy));
        CHECK(cyc_eq(x, y) == (x - y).is_zero());
        CHECK(cyc_eq(x, y) == (std::abs(zx - zy) < 1e-9));
        // the order is minimal: x is not fixed by the kernel onto any proper divisor
        CHECK(x.order() % 4 != 2);
    }
}

TEST_CASE("property: Galois action is a ring automorphism and composes") {
    RandomCyc gen;
    for (int trial = 0; trial < 200; ++trial) {
        i64 n = std::uniform_int_distribution<i64>(2, 48)(gen.rng);
        auto us = arith::units(n);
        i64 b = us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(gen.rng)];
        i64 b2 = us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(gen.rng)];
        GaloisAut s(n, b), t(n, b2);
        auto [x, zx] = gen.draw(n);
        auto [y, zy] = gen.draw(n);
        CHECK(galois_apply(s, x + y) == galois_apply(s, x) + galois_apply(s, y));
        CHECK(galois_apply(s, x * y) == galois_apply(s, x) * galois_apply(s, y));
        CHECK(galois_apply(s, galois_apply(t, x)) == galois_apply(s.compose(t), x));
    }
}

TEST_CASE("property: root orders") {
    for (i64 n = 1; n <= 60; ++n)
        for (i64 k = 1; k < n; ++k) {
            auto ord = root_of_unity_order(cyc_root(n, k));
            REQUIRE(ord.has_value());
            CHECK(*ord == n / arith::gcd(n, k));
        }
}

TEST_CASE("property: full norm is fixed") {
    RandomCyc gen;
    for (int trial = 0; trial < 60; ++trial) {
        i64 n = std::uniform_int_distribution<i64>(3, 40)(gen.rng);
        auto us = arith::units(n);
        GaloisAut s(n, us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(gen.rng)]);
        auto [x, zx] = gen.draw(n, 3);
        auto norm = conjugate_product(x, s, s.order());
        CHECK(galois_apply(s, norm) == norm);
    }
}
