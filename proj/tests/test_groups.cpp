#include <doctest.h>

#include "corpus.hpp"
#include "schurdex/cycliclocal.hpp"
#include "schurdex/errors.hpp"
#include "schurdex/groups.hpp"
#include "schurdex/kernels.hpp"

using namespace schurdex;
using arith::i64;
using Elem = PresentedGroup::Elem;

namespace {

PresentedGroup group_of(const std::string& text) {
    auto A = parse_algebra(text);
    if (auto* c = std::get_if<CyclicCyclotomicAlgebra>(&A)) return defining_group(*c);
    return defining_group(std::get<CyclotomicAlgebra>(A));
}

std::map<i64, int> order_census(const PresentedGroup& G) {
    std::map<i64, int> out;
    for (Elem g = 0; g < G.order(); ++g) ++out[G.element_order(g)];
    return out;
}

// x^e y^i · x^f y^j = x^{e + f b^i + c[i+j ≥ a]} y^{(i+j) mod a}.
std::pair<i64, i64> semidirect_product(const CyclicCyclotomicAlgebra& A, std::pair<i64, i64> g, std::pair<i64, i64> h) {
    const auto [e, i] = g;
    const auto [f, j] = h;
    const i64 x = e + f * arith::powmod(A.b, i, A.n) + (i + j >= A.a ? A.c : 0);
    return {arith::mod(x, A.n), (i + j) % A.a};
}

void check_relations(const PresentedGroup& G) {
    const Elem x = G.x_power(1);
    CHECK(G.power(x, G.n()) == 0);
    const auto& t = G.generator_triples();
    for (std::size_t i = 0; i < G.rank(); ++i) {
        const Elem y = G.y(i);
        CHECK(G.power(y, t[i].a) == G.x_power(t[i].c));
        CHECK(G.multiply(y, x) == G.multiply(G.x_power(t[i].b), y));
    }
}

}  // namespace

TEST_CASE("defining_group examples") {
    auto Q8 = group_of("[1,Q,4,[2,3,2]]");
    CHECK(Q8.order() == 8);
    CHECK(order_census(Q8) == std::map<i64, int>{{1, 1}, {2, 1}, {4, 6}});
    CHECK(center(Q8, whole_group(Q8)).order() == 2);
    CHECK(is_generalized_quaternion(Q8, whole_group(Q8)));
    CHECK_FALSE(is_dihedral(Q8, whole_group(Q8)));

    auto G48 = group_of("[1,Q,12,[[2,5,9],[2,7,0]],[[9]]]");
    CHECK(G48.order() == 48);
    check_relations(G48);

    auto C5 = group_of("[1,CF(5),5,[1,1,0]]");
    CHECK(C5.order() == 5);
    CHECK(is_cyclic(C5, whole_group(C5)));

    auto S3 = group_of("[1,Q,3,[2,2,0]]");
    CHECK(order_census(S3) == std::map<i64, int>{{1, 1}, {2, 3}, {3, 2}});
    CHECK(is_dihedral(S3, whole_group(S3)));
}

TEST_CASE("defining_group errors") {
    CHECK_THROWS_WITH_AS(PresentedGroup(12, {{2, 5, 0}, {2, 7, 0}, {2, 11, 0}, {1, 1, 0}}, {{0, 0, 0}, {0, 0}, {0}}),
                         doctest::Contains("UnsupportedGeneratorCount"), Error);
    CHECK_THROWS_WITH_AS(PresentedGroup(7, {{6, 3, 1}}, {}), doctest::Contains("InconsistentPresentation"), Error);
    CHECK_THROWS_WITH_AS(PresentedGroup(101, {{100, 2, 0}, {100, 3, 0}}, {{0}}, 20000),
                         doctest::Contains("GroupTooLarge"), Error);
    // Conjugating y_1² = 1 by y_2 gives x^6 = 1 when y_1 is central and y_2 y_1 = y_1 y_2 x.
    CHECK_THROWS_WITH_AS(PresentedGroup(4, {{2, 1, 0}, {2, 3, 0}}, {{1}}), doctest::Contains("InconsistentPresentation"),
                         Error);
}

TEST_CASE("group algorithm examples") {
    auto G = group_of("[1,Q,12,[[2,5,9],[2,7,0]],[[9]]]");
    const auto all = whole_group(G);
    const auto P = sylow(G, all, 2);
    CHECK(P.order() == 16);
    const auto Pd = derived_subgroup(G, P);
    CHECK(Pd.order() == 4);
    CHECK(is_cyclic(G, Pd));
    CHECK(sylow(G, all, 3).order() == 3);

    auto C12 = group_of("[1,CF(12),12,[1,1,0]]");
    CHECK(sylow(C12, whole_group(C12), 3).order() == 3);
    CHECK(derived_subgroup(C12, whole_group(C12)).order() == 1);

    auto Q8 = group_of("[1,Q,4,[2,3,2]]");
    const auto W = whole_group(Q8);
    CHECK(derived_subgroup(Q8, W) == center(Q8, W));
    CHECK(conjugacy_classes(Q8).size() == 5);
    CHECK(conjugacy_classes(G).size() == conjugacy_classes(G).size());
    CHECK(Q8.to_string(Q8.multiply(Q8.x_power(3), Q8.y(0))) == "x^3*y1");
    CHECK(Q8.to_string(0) == "1");
}

TEST_CASE("induced_faithful_character examples") {
    auto Q8 = group_of("[1,Q,4,[2,3,2]]");
    auto chi = induced_faithful_character(Q8);
    CHECK(chi.degree() == Cyclotomic(2L));
    CHECK(chi(Q8.x_power(2)) == Cyclotomic(-2L));
    CHECK(chi(Q8.x_power(1)).is_zero());
    CHECK(chi(Q8.y(0)).is_zero());

    auto C7 = group_of("[1,CF(7),7,[1,1,0]]");
    auto lam = induced_faithful_character(C7);
    CHECK(lam.degree() == Cyclotomic(1L));
    CHECK(lam(C7.x_power(3)) == cyc_root(7, 3));

    auto G = group_of("[1,Q,12,[[2,5,9],[2,7,0]],[[9]]]");
    auto chi48 = induced_faithful_character(G);
    CHECK(chi48.degree() == Cyclotomic(4L));
    CHECK(inner_product(G, chi48, chi48) == Cyclotomic(1L));

    // Ind from ⟨x⟩ of C_2 × C_2 with y acting trivially is reducible.
    PresentedGroup V(2, {{2, 1, 0}}, {});
    CHECK_THROWS_WITH_AS(induced_faithful_character(V), doctest::Contains("InducedNotIrreducible"), Error);
}

TEST_CASE("frobenius_schur examples") {
    auto Q8 = group_of("[1,Q,4,[2,3,2]]");
    CHECK(frobenius_schur(induced_faithful_character(Q8), Q8) == -1);
    CHECK(frobenius_schur(trivial_character(Q8), Q8) == 1);
    auto C4 = group_of("[1,CF(4),4,[1,1,0]]");
    CHECK(frobenius_schur(induced_faithful_character(C4), C4) == 0);
    auto S3 = group_of("[1,Q,3,[2,2,0]]");
    CHECK(frobenius_schur(induced_faithful_character(S3), S3) == 1);

    CharacterValues bogus{std::vector<Cyclotomic>(Q8.order(), Cyclotomic(Rational(1, 3)))};
    CHECK_THROWS_WITH_AS(frobenius_schur(bogus, Q8), doctest::Contains("NonIntegralIndicator"), Error);
}

TEST_CASE("local_index_at_infty_by_character examples") {
    auto cyc = [](const std::string& s) { return std::get<CyclicCyclotomicAlgebra>(parse_algebra(s)); };
    CHECK(local_index_at_infty_by_character(cyc("[1,Q,4,[2,3,2]]")) == 2);
    CHECK(local_index_at_infty_by_character(cyc("[1,CF(4),8,[2,5,4]]")) == 1);
    CHECK(local_index_at_infty_by_character(cyc("[1,Q,3,[2,2,0]]")) == 1);
    auto A = std::get<CyclotomicAlgebra>(parse_algebra("[1,Q,12,[[2,5,3],[2,7,6]],[[3]]]"));
    CHECK(local_index_at_infty_by_character(A) == 2);
}

TEST_CASE("possible_defect_groups examples") {
    auto Q8 = group_of("[1,Q,4,[2,3,2]]");
    auto d = possible_defect_groups(Q8, 2);
    REQUIRE(d.groups.size() == 1);
    CHECK(d.groups[0].order() == 8);
    CHECK_FALSE(d.all_abelian);

    auto G = group_of("[1,Q,12,[[2,5,9],[2,7,0]],[[9]]]");
    auto d3 = possible_defect_groups(G, 3);
    REQUIRE_FALSE(d3.groups.empty());
    for (const auto& D : d3.groups) CHECK(D.order() == 3);
    CHECK(d3.all_cyclic);

    auto C6 = group_of("[1,CF(6),6,[1,1,0]]");
    auto d6 = possible_defect_groups(C6, 3);
    REQUIRE(d6.groups.size() == 1);
    CHECK(d6.groups[0].order() == 3);
}

TEST_CASE("property: one-generator groups match the semidirect product formula") {
    for (const auto& A : testing::cyclic_corpus(30, 150, 21)) {
        const auto G = defining_group(A);
        REQUIRE(G.order() == static_cast<std::size_t>(A.n * A.a));
        for (Elem g = 0; g < G.order(); ++g)
            for (Elem h = 0; h < G.order(); h += 3) {
                const auto gy = G.y_exponents(g), hy = G.y_exponents(h);
                const auto [e, i] =
                    semidirect_product(A, {G.x_exponent(g), gy.empty() ? 0 : gy[0]}, {G.x_exponent(h), hy.empty() ? 0 : hy[0]});
                const Elem r = G.multiply(g, h);
                CHECK(G.x_exponent(r) == e);
                CHECK((G.y_exponents(r).empty() ? 0 : G.y_exponents(r)[0]) == i);
            }
    }
}

TEST_CASE("property: accepted two-generator presentations are groups") {
    int accepted = 0, rejected = 0;
    for (const auto& raw : testing::two_generator_attempts(16, 300, 4)) {
        std::optional<PresentedGroup> G;
        try {
            G.emplace(raw.n, raw.gens, raw.twists);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InconsistentPresentation);
            ++rejected;
            continue;
        }
        ++accepted;
        CHECK(G->order() == static_cast<std::size_t>(raw.n * raw.gens[0].a * raw.gens[1].a));
        check_relations(*G);
        const Elem y1 = G->y(0), y2 = G->y(1);
        CHECK(G->multiply(y2, y1) == G->multiply(G->multiply(y1, y2), G->x_power(raw.twists[0][0])));
        CHECK(closure(*G, G->generators()).order() == G->order());
        if (G->order() <= 64)
            for (Elem a = 0; a < G->order(); ++a)
                for (Elem b = 0; b < G->order(); ++b)
                    for (Elem c = 0; c < G->order(); ++c)
                        REQUIRE(G->multiply(G->multiply(a, b), c) == G->multiply(a, G->multiply(b, c)));
        for (Elem g = 0; g < G->order(); ++g) CHECK(G->multiply(g, G->inverse(g)) == 0);
    }
    CHECK(accepted > 50);
    CHECK(rejected > 0);
}

TEST_CASE("property: cyclic normal subgroup with abelian quotient") {
    for (const auto& text : testing::order48_inputs()) {
        const auto G = group_of(text);
        const auto all = whole_group(G);
        CHECK(is_normal(G, all, closure(G, {G.x_power(1)})));
        for (Elem g : derived_subgroup(G, all).elements) CHECK(G.in_cyclic_part(g));
    }
    for (const auto& A : testing::cyclic_corpus(40, 100, 3)) {
        const auto G = defining_group(A);
        for (Elem g : derived_subgroup(G, whole_group(G)).elements) CHECK(G.in_cyclic_part(g));
    }
}

TEST_CASE("property: characters, indicators and the infinite-place shortcut") {
    for (const auto& A : testing::cyclic_corpus(50, 300, 13)) {
        INFO(to_descriptor(AlgebraPresentation{A}));
        const auto G = defining_group(A);
        const auto chi = induced_faithful_character(G);
        CHECK(chi.degree() == Cyclotomic(static_cast<long>(G.order() / static_cast<std::size_t>(G.n()))));
        if (G.order() <= 200) {
            const int fs = frobenius_schur(chi, G);
            CHECK((fs >= -1 && fs <= 1));
        }
        CHECK(local_index_at_infty_by_character(A) == local_index_at_infty(A));
    }
    for (const auto& text : testing::order48_inputs()) {
        const auto G = group_of(text);
        const auto chi = induced_faithful_character(G);
        for (const auto& cls : conjugacy_classes(G))
            for (Elem g : cls) CHECK(chi(g) == chi(cls.front()));
    }
}

TEST_CASE("kernels: serial and parallel agree") {
    for (const auto& text : testing::order48_inputs()) {
        const auto G = group_of(text);
        CHECK(kernels::square_census_serial(G) == kernels::square_census_parallel(G));
        const auto all = whole_group(G);
        const auto comms = kernels::commutator_set_serial(G, all);
        CHECK(comms == kernels::commutator_set_parallel(G, all));
        CHECK(closure(G, comms) == derived_subgroup(G, all));
    }
    for (const auto& A : testing::cyclic_corpus(30, 60, 8)) {
        const auto G = defining_group(A);
        const auto all = whole_group(G);
        CHECK(kernels::square_census_serial(G) == kernels::square_census_parallel(G));
        CHECK(closure(G, kernels::commutator_set_serial(G, all)) == derived_subgroup(G, all));
    }
}

TEST_CASE("property: Sylow subgroups and conjugacy keys") {
    for (const auto& text : testing::order48_inputs()) {
        const auto G = group_of(text);
        const auto all = whole_group(G);
        for (i64 p : {2, 3}) {
            const auto P = sylow(G, all, p);
            CHECK(static_cast<i64>(P.order()) == arith::split_part(48, p).first);
            for (Elem g = 0; g < G.order(); g += 5) CHECK(conjugacy_key(G, conjugate(G, P, g)) == conjugacy_key(G, P));
        }
    }
}
