#pragma once

// Small-integer number theory shared by every module. All moduli here are
// "desk scale" (well below 2^31), so int64_t with 128-bit products is enough.

#include <cstdint>
#include <vector>

namespace schurdex::arith {

using i64 = std::int64_t;

/// Non-negative residue of a mod m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, i64 exp, i64 m);
/// Inverse of a mod m; requires gcd(a, m) = 1.
i64 invmod(i64 a, i64 m);
i64 ipow(i64 base, unsigned exp);

bool is_prime(i64 n);
/// Distinct prime divisors, ascending.
std::vector<i64> prime_divisors(i64 n);
/// Prime factorization as (p, multiplicity) pairs, ascending in p.
std::vector<std::pair<i64, int>> factorize(i64 n);
/// Positive divisors, ascending.
std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);

/// Multiplicative order of a mod m; requires gcd(a, m) = 1. ord mod 1 is 1.
i64 mult_order(i64 a, i64 m);

/// Largest power of p dividing n, and the cofactor (n_p, n_{p'}).
std::pair<i64, i64> split_part(i64 n, i64 p);

/// Squarefree kernel with sign: 12 -> 3, -8 -> -2, 1 -> 1. Requires n != 0.
i64 squarefree_part(i64 n);

/// Units of Z/m as residues in [0, m). For m = 1 this is {0}.
std::vector<i64> units(i64 m);

/// Closure of gens (plus 1) under multiplication mod m, sorted.
std::vector<i64> subgroup_closure(const std::vector<i64>& gens, i64 m);

}  // namespace schurdex::arith
