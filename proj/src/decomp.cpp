#include "schurdex/decomp.hpp"

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"
#include "schurdex/ratquat.hpp"

namespace schurdex {

using arith::i64;

namespace {

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorKind::DecompositionFailed, why); }

// A residue mod N fixing F and restricting to σ_b on Q(ζ_n).
i64 lift_residue(const AbelianNumberField& F, i64 N, i64 n, i64 b) {
    for (i64 u : F.stabilizer_mod(N))
        if (arith::mod(u - b, n) == 0) return u;
    throw Error(ErrorKind::FieldNotContained, "sigma_" + std::to_string(b) + " does not fix " + F.to_string());
}

struct Scalars {
    Cyclotomic s{1L}, t{1L};
    bool found = false;
};

// u' = s·u, v' = t·v for ζ_n^d ∈ ⟨ζ_4⟩, keyed on (ζ_n^d, ζ_4^{b_1}, ζ_4^{b_2}).
Scalars table_scalars(i64 quarter, i64 e1, i64 e2) {
    const Cyclotomic i = cyc_root(4, 1), one(1L);
    Scalars out;
    out.found = true;
    if (quarter == 0) return out;
    if (quarter == 2) {
        if (e2 == 1) out.t = i;
        else out.s = i;
        return out;
    }
    const Cyclotomic a = quarter == 1 ? one - i : one + i;  // ζ_4 rows use 1 - ζ_4, -ζ_4 rows 1 + ζ_4
    const Cyclotomic b = quarter == 1 ? one + i : one - i;
    if (e1 == 1 && e2 == 3) out.s = a;
    else if (e1 == 3 && e2 == 1) out.t = b;
    else if (e1 == 3 && e2 == 3) out.s = a, out.t = i;
    else out.found = false;
    return out;
}

TensorPair attempt(const CyclotomicAlgebra& A) {
    const i64 n = A.n;
    const auto& g1 = A.gens[0];
    const auto& g2 = A.gens[1];
    const i64 d = arith::mod(A.twists[0][0], n);
    const auto L = top_field(A.F, n);
    const i64 N = arith::lcm(L.conductor(), n);
    const i64 b1 = lift_residue(A.F, N, n, g1.b), b2 = lift_residue(A.F, N, n, g2.b);
    const GaloisAut s1(N, b1), s2(N, b2);

    TensorPair out;
    out.matrix_size = A.r;
    Scalars sc;
    const bool in_four = arith::mod(4 * d, n) == 0;
    const i64 quarter = in_four ? arith::mod(4 * d / n, 4) : -1;
    const bool have_i = N % 4 == 0;
    if (in_four && (quarter == 0 || (have_i && !field_contains(A.F, cyc_root(4, 1))))) {
        sc = table_scalars(quarter, have_i ? b1 % 4 : 1, have_i ? b2 % 4 : 1);
        out.method = "table";
    }
    if (!sc.found) {
        const i64 g = arith::gcd(n, d);
        sc.s = scalar_candidate(n / g, d / g, g1.b, g2.b);
        sc.t = Cyclotomic(1L);
        out.method = "general";
    }
    if (sc.s.is_zero() || sc.t.is_zero()) fail("scalar candidate vanishes");
    const Cyclotomic twist = cyc_root(n, arith::mulmod(arith::mulmod(d, g1.b, n), g2.b, n));
    if (sc.t * galois_apply(s2, sc.s) * twist != sc.s * galois_apply(s1, sc.t))
        fail("rescaled generators do not commute");

    const Cyclotomic first_value = conjugate_product(sc.s, s1, g1.a) * cyc_root(n, g1.c);
    const Cyclotomic second_value = conjugate_product(sc.t, s2, g2.a) * cyc_root(n, g2.c);
    if (!field_contains(A.F, first_value)) fail("(cu)^a1 = " + first_value.to_string() + " is not in the center");
    if (!field_contains(A.F, second_value)) fail("(cv)^a2 = " + second_value.to_string() + " is not in the center");

    auto fixed_by = [&](i64 b) {
        auto gens = L.stabilizer_mod(N);
        gens.push_back(b);
        return AbelianNumberField::fixed_field(N, gens);
    };
    out.first = make_cyclic_algebra(A.F, fixed_by(b2), s1, first_value);
    out.second = make_cyclic_algebra(A.F, fixed_by(b1), s2, second_value);
    out.u_scalar = sc.s;
    out.v_scalar = sc.t;
    return out;
}

}  // namespace

Cyclotomic scalar_candidate(i64 m, i64 t, i64 b1, i64 b2) {
    if (m < 1) throw std::domain_error("scalar_candidate: m must be positive");
    if (m == 1) return Cyclotomic(1L);
    const i64 step = arith::mulmod(arith::mulmod(arith::mod(t, m), arith::mod(b1, m), m), arith::mod(b2, m), m);
    const i64 r = arith::mod(b2, m);
    const i64 limit = m * arith::mult_order(r, m);
    std::vector<i64> weights(static_cast<std::size_t>(m), 0);
    i64 e = 0;  // running product is ζ_m^e
    for (i64 k = 0; k < limit; ++k) {
        ++weights[static_cast<std::size_t>(e)];
        e = arith::mod(step + arith::mulmod(r, e, m), m);
        if (e == 0) return Cyclotomic::from_powers(m, weights);
    }
    throw Error(ErrorKind::NonTerminating, "no closing term within " + std::to_string(limit) + " steps");
}

TensorPair decompose(const CyclotomicAlgebra& A) {
    if (A.rank() != 2)
        throw Error(ErrorKind::WrongGeneratorCount, "expected 2 generators, got " + std::to_string(A.rank()));
    try {
        return attempt(A);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DecompositionFailed) throw;
    }
    CyclotomicAlgebra swapped = A;
    std::swap(swapped.gens[0], swapped.gens[1]);
    swapped.twists = {{arith::mod(-A.twists[0][0], A.n)}};
    TensorPair out = attempt(swapped);
    out.swapped = true;
    return out;
}

IndexReport local_indices_of_factor(const CyclicAlgebra& A) {
    IndexReport out;
    // a = N(x) for x ∈ K whenever a = x^[L:K].
    const bool odd_degree = relative_degree(A.L, A.K) % 2 == 1;
    if (A.L == A.K || A.a == Cyclotomic(1L) || (odd_degree && A.a == Cyclotomic(-1L))) return out;
    if (A.K.is_rational() && A.L.degree() == 2 && A.a.is_rational()) {
        out.table = local_indices_quaternion(quadratic_to_quaternion(A));
        return out;
    }
    try {
        return local_indices_cyclic(cyclic_to_cyclic_cyclotomic(A));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotCyclotomicForm) throw;
        throw Error(ErrorKind::UnsolvedNormEquation, A.to_string() + " needs a norm equation");
    }
}

IndexReport local_indices_noncyclic(const CyclotomicAlgebra& A) {
    if (A.rank() > 2)
        throw Error(ErrorKind::UnsupportedGeneratorCount, std::to_string(A.rank()) + " generators");
    const TensorPair pair = decompose(A);
    auto r1 = local_indices_of_factor(pair.first);
    auto r2 = local_indices_of_factor(pair.second);
    IndexReport out;
    out.table = combine_local_indices(r1.table, r2.table);
    out.warnings = std::move(r1.warnings);
    out.warnings.insert(out.warnings.end(), r2.warnings.begin(), r2.warnings.end());
    return out;
}

LocalIndexTable schur_index_noncyclic(const CyclotomicAlgebra& A) { return local_indices_noncyclic(A).table; }

}  // namespace schurdex
