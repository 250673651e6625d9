#include "schurdex/cycliclocal.hpp"

#include <gmpxx.h>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"

namespace schurdex {

using arith::i64;

i64 local_index_at_infty(const CyclicCyclotomicAlgebra& A) {
    return is_real(A.F) && A.n > 2 && cyc_root(A.n, A.c) == Cyclotomic(-1L) ? 2 : 1;
}

LocalIndex local_index_at_odd_p(const CyclicCyclotomicAlgebra& A, i64 p) {
    if (p == 2 || !arith::is_prime(p)) throw std::domain_error("local_index_at_odd_p: p must be an odd prime");
    LocalIndex out;
    const auto L = top_field(A.F, A.n);
    const i64 e = efg(L, A.F, p).e;
    if (e == 1) return out;
    const i64 f = efg(A.F, AbelianNumberField::rationals(), p).f;

    const i64 full = A.n / arith::gcd(A.n, arith::mod(A.c, A.n));
    const auto [p_part, o] = arith::split_part(full, p);
    if (p_part > 1)
        out.warnings.push_back("p-part of zeta_n^c of order " + std::to_string(p_part) + " ignored at " +
                               std::to_string(p));

    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
    q -= 1;
    mpz_class t = q / gcd(q, mpz_class(static_cast<long>(e)));
    const i64 g = mpz_class(gcd(t, mpz_class(static_cast<long>(o)))).get_si();
    out.index = o / g;
    return out;
}

i64 minimal_root_order(const AbelianNumberField& K, const AbelianNumberField& L, i64 n) {
    for (i64 m : arith::divisors(n))
        if (adjoin_root_of_unity(K, m) == L) return m;
    throw Error(ErrorKind::FieldNotContained, L.to_string() + " is not " + K.to_string() + "(zeta_m) for m | n");
}

i64 local_index_at_two(const CyclicCyclotomicAlgebra& A) {
    const auto L = top_field(A.F, A.n);
    const auto K = p_split_subextension(A.F, L, 2);
    const i64 n_min = minimal_root_order(K, L, A.n);
    if (n_min % 4 != 0) return 1;
    if (field_contains(K, cyc_root(4, 1))) return 1;
    const i64 ord = A.n / arith::gcd(A.n, arith::mod(A.c, A.n));
    if (ord % 4 != 2) return 1;
    return local_degree(K, AbelianNumberField::rationals(), 2) % 2 == 1 ? 2 : 1;
}

i64 adjust_index_for_field(i64 m, const AbelianNumberField& F, const AbelianNumberField& F0, i64 p) {
    return m / arith::gcd(m, local_degree(F, F0, p));
}

std::vector<Place> candidate_places(i64 n) {
    std::vector<Place> out;
    for (i64 p : arith::prime_divisors(2 * n)) out.emplace_back(p);
    out.push_back(Place::infinity());
    return out;
}

IndexReport local_indices_cyclic(const CyclicCyclotomicAlgebra& A) {
    IndexReport out;
    for (Place v : candidate_places(A.n)) {
        if (v.is_infinite()) {
            out.table.set(v, local_index_at_infty(A));
        } else if (v.prime() == 2) {
            out.table.set(v, local_index_at_two(A));
        } else {
            auto r = local_index_at_odd_p(A, v.prime());
            out.table.set(v, r.index);
            out.warnings.insert(out.warnings.end(), r.warnings.begin(), r.warnings.end());
        }
    }
    return out;
}

}  // namespace schurdex
