#include "schurdex/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace schurdex::arith {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return std::abs(a / gcd(a, b) * b);
}

i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

i64 powmod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 invmod(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) throw std::domain_error("invmod: argument not invertible");
    return mod(old_s, m);
}

i64 ipow(i64 base, unsigned exp) {
    i64 r = 1;
    while (exp--) r *= base;
    return r;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    n = std::abs(n);
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.emplace_back(d, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (auto [p, k] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

i64 mult_order(i64 a, i64 m) {
    if (m == 1) return 1;
    a = mod(a, m);
    if (gcd(a, m) != 1) throw std::domain_error("mult_order: argument not a unit");
    i64 k = 1, x = a;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++k;
    }
    return k;
}

std::pair<i64, i64> split_part(i64 n, i64 p) {
    i64 np = 1;
    while (n % p == 0) {
        n /= p;
        np *= p;
    }
    return {np, n};
}

i64 squarefree_part(i64 n) {
    if (n == 0) throw std::domain_error("squarefree_part of zero");
    i64 r = n < 0 ? -1 : 1;
    for (auto [p, k] : factorize(n))
        if (k % 2) r *= p;
    return r;
}

std::vector<i64> units(i64 m) {
    if (m == 1) return {0};
    std::vector<i64> out;
    for (i64 b = 1; b < m; ++b)
        if (gcd(b, m) == 1) out.push_back(b);
    return out;
}

std::vector<i64> subgroup_closure(const std::vector<i64>& gens, i64 m) {
    if (m == 1) return {0};
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<i64> out{1};
    seen[1] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (i64 g : gens) {
            i64 y = mulmod(out[i], g, m);
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schurdex::arith
