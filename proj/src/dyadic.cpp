#include "schurdex/dyadic.hpp"

#include <algorithm>
#include <map>

#include "schurdex/arith.hpp"
#include "schurdex/cycliclocal.hpp"
#include "schurdex/errors.hpp"

namespace schurdex {

using arith::i64;
using Elem = PresentedGroup::Elem;

std::string DyadicVerdict::to_string() const {
    switch (kind) {
        case Kind::Q8: return "Q8";
        case Kind::TypeQ8q: return "(Q8," + std::to_string(q.value_or(0)) + ")";
        case Kind::TypeQDq: return "(QD," + std::to_string(q.value_or(0)) + ")";
        case Kind::NotDyadicSchur: break;
    }
    return "not dyadic Schur";
}

bool is_dyadic_2group(const PresentedGroup& G, const Subgroup& P) {
    if (!is_p_group(P, 2)) throw Error(ErrorKind::NotTwoGroup, "order " + std::to_string(P.order()));
    const Subgroup D = derived_subgroup(G, P);
    if (D.order() < 4 || !is_cyclic(G, D)) return false;
    const auto fours = elements_of_order(G, D, 4);
    const Subgroup Z = closure(G, {fours.front()});
    const Subgroup Y = centralizer(G, P, Z);
    const i64 quotient = static_cast<i64>(Y.order() / Z.order());
    return std::any_of(Y.elements.begin(), Y.elements.end(),
                       [&](Elem y) { return order_modulo(G, y, Z) == quotient; });
}

DyadicVerdict is_dyadic_schur_group(const PresentedGroup& H) {
    using Kind = DyadicVerdict::Kind;
    const Subgroup all = whole_group(H);
    if (H.order() == 8 && is_generalized_quaternion(H, all)) return {Kind::Q8, std::nullopt};

    const auto [two, q] = arith::split_part(static_cast<i64>(H.order()), 2);
    if (two < 2 || q < 3 || !arith::is_prime(q)) return {};
    const Subgroup U = sylow(H, all, q);
    if (!is_normal(H, all, U)) return {};
    const Subgroup P = sylow(H, all, 2);
    const Subgroup X = centralizer(H, P, U);

    if (X.order() == 8 && is_generalized_quaternion(H, X)) {
        const Subgroup C = centralizer(H, P, X);
        const Subgroup XC = intersection(H, X, C);
        const bool product = X.order() * C.order() == P.order() * XC.order();
        if (product && XC == center(H, X)) return {Kind::TypeQ8q, q};
        return {};
    }
    const bool shape = (X.order() >= 16 && is_generalized_quaternion(H, X)) || is_dihedral(H, X);
    if (!shape || !is_dyadic_2group(H, P)) return {};
    const Subgroup D = derived_subgroup(H, P);
    const bool inside = std::all_of(D.elements.begin(), D.elements.end(), [&](Elem g) { return X.contains(g); });
    if (inside && X.order() == 2 * D.order()) return {Kind::TypeQDq, q};
    return {};
}

namespace {

using Tuple = std::vector<i64>;

i64 tuple_order(const Tuple& e, const std::vector<GeneratorTriple>& gens) {
    i64 o = 1;
    for (std::size_t i = 0; i < e.size(); ++i) o = arith::lcm(o, gens[i].a / arith::gcd(gens[i].a, e[i]));
    return o;
}

Tuple tuple_multiple(const Tuple& e, i64 k, const std::vector<GeneratorTriple>& gens) {
    Tuple out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = arith::mod(e[i] * k, gens[i].a);
    return out;
}

// An internal direct-product basis of a finite abelian group of rank ≤ 2.
std::vector<Tuple> cyclic_basis(const std::vector<Tuple>& S, const std::vector<GeneratorTriple>& gens) {
    const i64 size = static_cast<i64>(S.size());
    if (size == 1) return {};
    auto by_order = S;
    std::sort(by_order.begin(), by_order.end(),
              [&](const Tuple& a, const Tuple& b) { return tuple_order(a, gens) > tuple_order(b, gens); });
    const Tuple& g1 = by_order.front();
    const i64 o1 = tuple_order(g1, gens);
    if (o1 == size) return {g1};
    std::vector<Tuple> span1;
    for (i64 k = 0; k < o1; ++k) span1.push_back(tuple_multiple(g1, k, gens));
    for (const Tuple& g2 : S) {
        const i64 o2 = tuple_order(g2, gens);
        if (o1 * o2 != size) continue;
        bool meets = false;
        for (i64 k = 1; k < o2 && !meets; ++k)
            meets = std::find(span1.begin(), span1.end(), tuple_multiple(g2, k, gens)) != span1.end();
        if (!meets) return {g1, g2};
    }
    throw Error(ErrorKind::NormReductionRequired, "Galois group over K_2 is not 2-generated");
}

}  // namespace

TwoSplitReduction reduce_to_two_split(const CyclotomicAlgebra& A) {
    const i64 n = A.n;
    const auto& gens = A.gens;
    const auto L = top_field(A.F, n);
    const i64 N = arith::lcm(L.conductor(), n);
    TwoSplitReduction out;
    out.K = p_split_subextension(A.F, L, 2);

    const auto BK = out.K.stabilizer_mod(N);
    std::map<i64, i64> lift;
    for (i64 u : A.F.stabilizer_mod(N)) lift.emplace(arith::mod(u, n), u);

    // Gal(L/F) as exponent tuples; keep the Sylow 2-subgroup of Gal(L/K).
    std::vector<Tuple> S;
    std::vector<i64> fixing = L.stabilizer_mod(N);
    i64 total = 1;
    for (const auto& g : gens) total *= g.a;
    for (i64 rank = 0; rank < total; ++rank) {
        Tuple e(gens.size());
        i64 rest = rank, beta = 1 % n;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            e[i] = rest % gens[i].a;
            rest /= gens[i].a;
            beta = arith::mulmod(beta, arith::powmod(gens[i].b, e[i], n), n);
        }
        const i64 u = lift.at(beta);
        if (!std::binary_search(BK.begin(), BK.end(), u)) continue;
        if (arith::split_part(tuple_order(e, gens), 2).second != 1) continue;
        S.push_back(std::move(e));
        fixing.push_back(u);
    }
    out.K2 = AbelianNumberField::fixed_field(N, fixing);

    std::size_t involutions = 0;
    for (const auto& e : S) involutions += tuple_order(e, gens) <= 2;
    if (involutions >= 8)
        throw Error(ErrorKind::NormReductionRequired, "Gal(L/K_2) needs three generators");
    const auto basis = cyclic_basis(S, gens);

    const i64 n_min = minimal_root_order(out.K2, L, n);
    out.minimal_n = n_min;
    out.algebra = CyclotomicAlgebra{A.r, out.K2, n, {}, {}};
    if (basis.empty()) {
        out.algebra.n = n_min;
        out.algebra.gens = {GeneratorTriple{1, 1, 0}};
        return out;
    }

    const PresentedGroup G = defining_group(A);
    auto word = [&](const Tuple& e) {
        Elem w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w = G.multiply(w, G.power(G.y(i), e[i]));
        return w;
    };
    std::vector<Elem> words;
    std::vector<GeneratorTriple> triples;
    for (const auto& e : basis) {
        words.push_back(word(e));
        i64 beta = 1 % n;
        for (std::size_t i = 0; i < e.size(); ++i) beta = arith::mulmod(beta, arith::powmod(gens[i].b, e[i], n), n);
        triples.push_back({tuple_order(e, gens), beta, 0});
    }

    // Rescale each generator by a power of x until the factor set lies in ⟨x^{n/n'}⟩.
    const i64 step = n / n_min;
    const std::size_t k = words.size();
    auto factor_set = [&](const std::vector<i64>& shift, std::vector<GeneratorTriple>& t, i64& d) {
        std::vector<Elem> w(k);
        for (std::size_t j = 0; j < k; ++j) {
            w[j] = G.multiply(G.x_power(shift[j]), words[j]);
            t[j].c = G.x_exponent(G.power(w[j], t[j].a));
        }
        d = k == 2 ? G.x_exponent(G.multiply(G.inverse(G.multiply(w[0], w[1])), G.multiply(w[1], w[0]))) : 0;
    };
    std::vector<i64> shift(k, 0);
    std::vector<GeneratorTriple> t = triples;
    i64 d = 0;
    bool reduced = false;
    const i64 tries = k == 1 ? n : n * n;
    for (i64 s = 0; s < tries && step > 1; ++s) {
        shift[0] = s % n;
        if (k == 2) shift[1] = s / n;
        factor_set(shift, t, d);
        if (std::all_of(t.begin(), t.end(), [&](const GeneratorTriple& g) { return g.c % step == 0; }) &&
            d % step == 0) {
            reduced = true;
            break;
        }
    }
    if (!reduced) {
        std::fill(shift.begin(), shift.end(), 0);
        factor_set(shift, t, d);
        if (step > 1)
            out.warnings.push_back("factor set does not descend to zeta_" + std::to_string(n_min) + "; kept n = " +
                                   std::to_string(n));
    }
    const i64 m = reduced ? n_min : n;
    const i64 div = reduced ? step : 1;
    for (auto& g : t) {
        g.b = arith::mod(g.b, m);
        g.c = g.c / div;
    }
    out.algebra.n = m;
    out.algebra.gens = t;
    if (k == 2) out.algebra.twists = {{d / div}};
    validate(out.algebra);
    return out;
}

TwoLocalReport two_local_report(const CyclotomicAlgebra& A) {
    TwoLocalReport out;
    const auto red = reduce_to_two_split(A);
    out.warnings = red.warnings;
    const CyclotomicAlgebra& B = red.algebra;
    if (B.rank() == 1 && B.gens[0].a == 1) {
        out.step = "split";
        return out;
    }
    if (red.minimal_n % 4 != 0 || field_contains(red.K2, cyc_root(4, 1))) {
        out.step = "no-zeta4";
        return out;
    }
    if (B.rank() == 1) {
        out.step = "cyclic";
        out.index = local_index_at_two(as_cyclic_cyclotomic(B));
        return out;
    }
    const PresentedGroup H = defining_group(B);
    if (possible_defect_groups(H, 2).all_abelian) {
        out.step = "abelian-defect";
        return out;
    }
    // The classification only applies once L = K_2(ζ_{4q}).
    const auto [two, odd] = arith::split_part(red.minimal_n, 2);
    if (two != 4 || (odd > 1 && !arith::is_prime(odd)) || B.n != red.minimal_n)
        throw Error(ErrorKind::NormReductionRequired,
                    "L = K_2(zeta_" + std::to_string(red.minimal_n) + ") is not of the form K_2(zeta_4q)");
    out.verdict = is_dyadic_schur_group(H);
    if (!out.verdict->is_dyadic()) {
        out.step = "not-dyadic";
        return out;
    }
    out.step = "dyadic";
    const auto Qchi = character_field(induced_faithful_character(H));
    out.index = local_degree(red.K2, Qchi, 2) % 2 == 1 ? 2 : 1;
    return out;
}

i64 local_index_at_two_by_character(const CyclotomicAlgebra& A) { return two_local_report(A).index; }

i64 local_index_at_two_by_character(const CyclicCyclotomicAlgebra& A) {
    return two_local_report(as_cyclotomic(A)).index;
}

}  // namespace schurdex
