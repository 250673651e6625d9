#include <doctest.h>

#include "corpus.hpp"
#include "schurdex/decomp.hpp"
#include "schurdex/errors.hpp"
#include "schurdex/groups.hpp"
#include "schurdex/ratquat.hpp"

using namespace schurdex;
using arith::i64;

namespace {

const Place P2{2}, P3{3};
const Place Inf = Place::infinity();

CyclotomicAlgebra algebra(const std::string& s) { return std::get<CyclotomicAlgebra>(parse_algebra(s)); }

}  // namespace

TEST_CASE("decompose examples") {
    // (48,15) .. (48,18): (Q(ζ_3)/Q, ±2) ⊗ (Q(ζ_4)/Q, ±1).
    const std::vector<std::pair<long, long>> expected{{2, 1}, {-2, 1}, {-2, -1}, {2, -1}};
    const auto& inputs = testing::order48_inputs();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        INFO(inputs[i]);
        const auto pair = decompose(algebra(inputs[i]));
        CHECK(pair.method == "table");
        CHECK_FALSE(pair.swapped);
        CHECK(pair.first.K.is_rational());
        CHECK(pair.first.L == AbelianNumberField::cyclotomic(3));
        CHECK(pair.first.a == Cyclotomic(expected[i].first));
        CHECK(pair.second.L == AbelianNumberField::cyclotomic(4));
        CHECK(pair.second.a == Cyclotomic(expected[i].second));
    }
    // ζ_12^9 = -ζ_4 with ζ_4^5 = ζ_4 and ζ_4^7 = -ζ_4 selects u' = (1+ζ_4)u.
    auto p15 = decompose(algebra(inputs[0]));
    CHECK(p15.u_scalar == Cyclotomic(1L) + cyc_root(4, 1));
    CHECK(p15.v_scalar == Cyclotomic(1L));
    CHECK(p15.first.to_string() == "[Q,CF(3),[2]]");

    // d = 0: u and v already commute.
    auto p0 = decompose(algebra("[1,Q,12,[[2,5,6],[2,7,6]],[[0]]]"));
    CHECK(p0.method == "table");
    CHECK(p0.u_scalar == Cyclotomic(1L));
    CHECK(p0.v_scalar == Cyclotomic(1L));
    CHECK(p0.first.a == Cyclotomic(-1L));
    CHECK(p0.second.a == Cyclotomic(-1L));
}

TEST_CASE("decompose errors") {
    auto one = as_cyclotomic(std::get<CyclicCyclotomicAlgebra>(parse_algebra("[1,Q,4,[2,3,2]]")));
    CHECK_THROWS_WITH_AS(decompose(one), doctest::Contains("WrongGeneratorCount"), Error);
    CHECK_THROWS_WITH_AS(decompose(algebra("[1,Q,12,[[2,5,9],[2,7,8]],[[7]]]")),
                         doctest::Contains("DecompositionFailed"), Error);
}

TEST_CASE("scalar_candidate examples") {
    CHECK(scalar_candidate(1, 0, 5, 7) == Cyclotomic(1L));
    // ζ_m^{t b1 b2} = 1 closes at once.
    CHECK(scalar_candidate(3, 3, 1, 2) == Cyclotomic(1L));
    // w = ζ_4^3, σ_3(w) = ζ_4, so the sum stops after 1 + w.
    CHECK(scalar_candidate(4, 1, 1, 3) == Cyclotomic(1L) + cyc_root(4, 3));
    // The general candidate agrees with the table entry for ζ_12^9 = ζ_4^3 up to a root of unity.
    const auto c = scalar_candidate(4, 3, 5, 7);
    CHECK(as_root_of_unity(c / (Cyclotomic(1L) + cyc_root(4, 1))).has_value());
}

TEST_CASE("schur_index_noncyclic examples") {
    const auto& in = testing::order48_inputs();
    CHECK(schur_index_noncyclic(algebra(in[0])) == LocalIndexTable{{P2, 2}, {P3, 2}});
    CHECK(schur_index_noncyclic(algebra(in[1])) == LocalIndexTable{{P2, 2}, {Inf, 2}});
    CHECK(schur_index_noncyclic(algebra(in[2])).empty());
    CHECK(schur_index_noncyclic(algebra(in[3])) == LocalIndexTable{{P3, 2}, {Inf, 2}});
    CHECK(schur_index_noncyclic(algebra("[1,Q,12,[[2,5,6],[2,7,6]],[[0]]]")) ==
          combine_local_indices(local_indices_quaternion({-3, -1}), local_indices_quaternion({-1, -1})));
}

TEST_CASE("schur_index_noncyclic errors") {
    CHECK_THROWS_WITH_AS(schur_index_noncyclic(algebra("[1,Q,24,[[2,5,0],[2,7,0],[2,13,0]],[[0,0],[0]]]")),
                         doctest::Contains("UnsupportedGeneratorCount"), Error);
    CHECK_THROWS_WITH_AS(schur_index_noncyclic(algebra("[1,Q,20,[[4,17,10],[2,19,0]],[[19]]]")),
                         doctest::Contains("UnsolvedNormEquation"), Error);
    CHECK_THROWS_WITH_AS(schur_index_noncyclic(algebra("[1,Q,12,[[2,5,9],[2,7,8]],[[7]]]")),
                         doctest::Contains("DecompositionFailed"), Error);
}

TEST_CASE("property: decompositions commute, land in the center and match the character route") {
    int decomposed = 0, swapped = 0, general = 0, compared = 0;
    for (const auto& A : testing::two_generator_corpus(30, 300, 3)) {
        INFO(to_descriptor(AlgebraPresentation{A}));
        TensorPair pair;
        try {
            pair = decompose(A);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DecompositionFailed);
            continue;
        }
        ++decomposed;
        swapped += pair.swapped;
        general += pair.method == "general";
        CHECK(field_contains(A.F, pair.first.a));
        CHECK(field_contains(A.F, pair.second.a));
        CHECK(pair.first.K == A.F);
        CHECK(pair.second.K == A.F);
        // Orders of the two factors multiply to [L:F].
        CHECK(relative_degree(pair.first.L, A.F) * relative_degree(pair.second.L, A.F) ==
              relative_degree(top_field(A.F, A.n), A.F));
        CHECK(compositum(pair.first.L, pair.second.L) == top_field(A.F, A.n));

        // Commutation with the generators in the order actually used.
        const auto& g1 = A.gens[pair.swapped ? 1 : 0];
        const auto& g2 = A.gens[pair.swapped ? 0 : 1];
        const i64 d = pair.swapped ? -A.twists[0][0] : A.twists[0][0];
        const i64 N = arith::lcm(top_field(A.F, A.n).conductor(), A.n);
        auto sigma = [&](i64 b) {
            for (i64 u : A.F.stabilizer_mod(N))
                if (arith::mod(u - b, A.n) == 0) return GaloisAut(N, u);
            return GaloisAut(N, 1);
        };
        const Cyclotomic lhs = pair.v_scalar * galois_apply(sigma(g2.b), pair.u_scalar) * cyc_root(A.n, d * g1.b * g2.b);
        CHECK(lhs == pair.u_scalar * galois_apply(sigma(g1.b), pair.v_scalar));

        LocalIndexTable t;
        try {
            t = schur_index_noncyclic(A);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnsolvedNormEquation);
            continue;
        }
        ++compared;
        CHECK(t.at(Inf) == local_index_at_infty_by_character(A));
    }
    CHECK(decomposed > 250);
    CHECK(swapped > 0);
    CHECK(general > 0);
    CHECK(compared > 150);
}

TEST_CASE("property: route agreement with cyclic rewrites") {
    // A two-generator algebra with a trivial second generator is its first factor.
    for (const auto& A : testing::cyclic_corpus(30, 150, 17)) {
        if (A.a < 2) continue;
        CyclotomicAlgebra B{1, A.F, A.n, {{A.a, A.b, A.c}, {1, 1, 0}}, {{0}}};
        LocalIndexTable t;
        try {
            t = schur_index_noncyclic(B);
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::UnsolvedNormEquation || e.kind() == ErrorKind::UnsupportedIndex));
            continue;
        }
        CHECK(t == local_indices_cyclic(A).table);
    }
}
