#include "schurdex/ratquat.hpp"

#include <set>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"

namespace schurdex {

using arith::i64;

namespace {

// a = p^k·u with p ∤ u.
std::pair<int, i64> split_valuation(i64 a, i64 p) {
    int k = 0;
    while (a % p == 0) {
        a /= p;
        ++k;
    }
    return {k, a};
}

int sign_power(i64 e) { return e % 2 == 0 ? 1 : -1; }

// ε(u) = (u-1)/2 and ω(u) = (u²-1)/8 modulo 2, for odd u.
i64 eps(i64 u) { return (arith::mod(u, 4) - 1) / 2; }
i64 omega(i64 u) {
    i64 r = arith::mod(u, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

std::vector<i64> sign_prime_factors(i64 x) {
    std::vector<i64> out;
    if (x < 0) out.push_back(-1);
    for (i64 p : arith::prime_divisors(x)) out.push_back(p);
    return out;
}

}  // namespace

int legendre(i64 a, i64 p) {
    if (p < 3 || !arith::is_prime(p)) throw std::domain_error("legendre: p must be an odd prime");
    i64 r = arith::mod(a, p);
    if (r == 0) return 0;
    return arith::powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int hilbert_symbol(i64 a, i64 b, Place v) {
    if (a == 0 || b == 0) throw Error(ErrorKind::ZeroEntry, "Hilbert symbol of zero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const i64 p = v.prime();
    auto [alpha, u] = split_valuation(a, p);
    auto [beta, w] = split_valuation(b, p);
    if (p == 2) return sign_power(eps(u) * eps(w) + alpha * omega(w) + beta * omega(u));
    int s = sign_power(static_cast<i64>(alpha) * beta * ((p - 1) / 2));
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

std::vector<QuaternionAlgebraQ> factor_entries(const QuaternionAlgebraQ& A) {
    auto N = QuaternionAlgebraQ::normalized(A.a, A.b);
    std::vector<QuaternionAlgebraQ> out;
    for (i64 c : sign_prime_factors(N.a))
        for (i64 d : sign_prime_factors(N.b)) out.push_back({c, d});
    return out;
}

LocalIndexTable local_indices_quaternion(const QuaternionAlgebraQ& A) {
    LocalIndexTable total;
    for (const auto& E : factor_entries(A)) {
        std::set<Place> places{Place(2), Place::infinity()};
        for (i64 x : {E.a, E.b})
            if (x != -1 && x != 2) places.insert(Place(x));
        LocalIndexTable t;
        for (Place v : places)
            if (hilbert_symbol(E.a, E.b, v) == -1) t.set(v, 2);
        total = combine_local_indices(total, t);
    }
    return total;
}

i64 schur_index_quaternion(const QuaternionAlgebraQ& A) { return local_indices_quaternion(A).schur_index(); }

}  // namespace schurdex
