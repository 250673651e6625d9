#pragma once

// Exact arithmetic in the cyclotomic fields Q(ζ_n).
//
// A Cyclotomic is stored in the power basis {1, ζ_n, ..., ζ_n^{φ(n)-1}} of
// Q(ζ_n) = Q[t]/Φ_n(t), where n is always the *minimal* order: the element lies
// in no smaller cyclotomic field. Because of that normal form, equality of two
// values is plain coordinate equality. Orders ≡ 2 mod 4 never occur since
// Q(ζ_{2m}) = Q(ζ_m) for odd m.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schurdex {

using Rational = mpq_class;

class Cyclotomic {
public:
    /// Zero.
    Cyclotomic() = default;
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// ζ_n^k.
    static Cyclotomic root(std::int64_t n, std::int64_t k);

    /// Σ_k weights[k]·ζ_n^k for k in [0, n). weights.size() must equal n.
    static Cyclotomic from_powers(std::int64_t n, const std::vector<Rational>& weights);
    static Cyclotomic from_powers(std::int64_t n, const std::vector<std::int64_t>& weights);

    /// Minimal n with the value in Q(ζ_n); 1 for rationals (including zero).
    std::int64_t order() const { return order_; }

    /// Power-basis coordinates modulo Φ_order; empty for zero.
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return order_ == 1; }
    /// Requires is_rational().
    Rational rational_value() const;

    /// Coordinates in the power basis of Q(ζ_N); requires order() | N.
    std::vector<Rational> coordinates_in(std::int64_t N) const;

    Cyclotomic operator-() const;
    Cyclotomic pow(std::int64_t k) const;
    /// Multiplicative inverse via the field norm. Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y);
    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        return x.order_ == y.order_ && x.coeffs_ == y.coeffs_;
    }

    Cyclotomic& operator+=(const Cyclotomic& y) { return *this = *this + y; }
    Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }

    /// GAP-like rendering: "1+E(4)", "-E(3)^2", "1/2".
    std::string to_string() const;

private:
    Cyclotomic(std::int64_t order, std::vector<Rational> coeffs);
    static Cyclotomic canonical(std::int64_t order, std::vector<Rational> coeffs);

    std::int64_t order_ = 1;
    std::vector<Rational> coeffs_;

    friend Cyclotomic apply_galois_exponent(std::int64_t b, const Cyclotomic& x);
};

/// σ_b applied to x with b read modulo x.order(); b must be a unit there.
Cyclotomic apply_galois_exponent(std::int64_t b, const Cyclotomic& x);

/// σ_b on Q(ζ_modulus): ζ_modulus ↦ ζ_modulus^b.
class GaloisAut {
public:
    /// Throws NotCoprime when gcd(b, modulus) != 1.
    GaloisAut(std::int64_t modulus, std::int64_t exponent);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t exponent() const { return exponent_; }

    GaloisAut compose(const GaloisAut& other) const;
    GaloisAut power(std::int64_t k) const;
    std::int64_t order() const;

    friend bool operator==(const GaloisAut&, const GaloisAut&) = default;

private:
    std::int64_t modulus_;
    std::int64_t exponent_;
};

Cyclotomic cyc_root(std::int64_t n, std::int64_t k);
Cyclotomic cyc_add(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic cyc_mul(const Cyclotomic& x, const Cyclotomic& y);
bool cyc_eq(const Cyclotomic& x, const Cyclotomic& y);

/// Image of x under s; throws IncompatibleModulus unless x.order() | s.modulus().
Cyclotomic galois_apply(const GaloisAut& s, const Cyclotomic& x);

/// Multiplicative order when x is a root of unity.
std::optional<std::int64_t> root_of_unity_order(const Cyclotomic& x);

/// When x is a root of unity, the pair (m, k) with x = ζ_m^k and m = ord(x).
std::optional<std::pair<std::int64_t, std::int64_t>> as_root_of_unity(const Cyclotomic& x);

/// x · s(x) · ... · s^{k-1}(x).
Cyclotomic conjugate_product(const Cyclotomic& x, const GaloisAut& s, std::int64_t k);

/// Complex conjugate (σ_{-1}).
Cyclotomic complex_conjugate(const Cyclotomic& x);

}  // namespace schurdex
