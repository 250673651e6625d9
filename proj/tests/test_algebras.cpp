#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "schurdex/errors.hpp"

using namespace schurdex;
using arith::i64;

namespace {

const Place P2{2}, P3{3};
const Place Inf = Place::infinity();

ErrorKind kind_of(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("parse_algebra examples") {
    auto A = parse_algebra("[1,Q,4,[2,3,2]]");
    REQUIRE(std::holds_alternative<CyclicCyclotomicAlgebra>(A));
    CHECK(std::get<CyclicCyclotomicAlgebra>(A) ==
          CyclicCyclotomicAlgebra{1, AbelianNumberField::rationals(), 4, 2, 3, 2});

    auto B = parse_algebra("[1,Q,12,[[2,5,9],[2,7,0]],[[9]]]");
    REQUIRE(std::holds_alternative<CyclotomicAlgebra>(B));
    const auto& cb = std::get<CyclotomicAlgebra>(B);
    CHECK(cb.rank() == 2);
    CHECK(cb.gens[0] == GeneratorTriple{2, 5, 9});
    CHECK(cb.gens[1] == GeneratorTriple{2, 7, 0});
    CHECK(cb.twist(0, 1) == 9);

    auto C = parse_algebra("[3,CF(5)]");
    REQUIRE(std::holds_alternative<MatrixAlgebra>(C));
    CHECK(std::get<MatrixAlgebra>(C).r == 3);
    CHECK(std::get<MatrixAlgebra>(C).F == AbelianNumberField::cyclotomic(5));

    auto D = parse_algebra(" [ 1 , Rationals , 12 , [ [2,5,9] , [2,7,0] ] , [ [ 9 ] ] ] ");
    CHECK(D == B);
    CHECK(std::holds_alternative<CyclicCyclotomicAlgebra>(parse_algebra("[1,NF(63,[1,37,46]),63,[3,37,7]]")));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_algebra("[1,Q,4,[2,3 2]]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 12);
    }
    CHECK(kind_of("[1,Q,4,[2,3,2]") == ErrorKind::ParseError);
    CHECK(kind_of("[1,QQ]") == ErrorKind::ParseError);
    CHECK(kind_of("") == ErrorKind::ParseError);
    CHECK(kind_of("[1,Q,4,[2,3,2]] junk") == ErrorKind::ParseError);
    CHECK(kind_of("[1,Q,12,[[2,5,9],[2,7,0]]]") == ErrorKind::ParseError);
}

TEST_CASE("validation rejects inconsistent presentations") {
    CHECK(kind_of("[1,Q,12,[2,2,0]]") == ErrorKind::InvalidPresentation);   // gcd(b, n) > 1
    CHECK(kind_of("[1,Q,7,[2,3,0]]") == ErrorKind::InvalidPresentation);    // 3^2 ≢ 1 mod 7
    CHECK(kind_of("[1,Q,7,[6,3,1]]") == ErrorKind::InvalidPresentation);    // c(b-1) ≢ 0
    CHECK(kind_of("[1,Q,5,[2,4,0]]") == ErrorKind::InvalidPresentation);    // ⟨σ_4⟩ ≠ Gal(Q(ζ_5)/Q)
    CHECK(kind_of("[1,CF(4),4,[2,3,0]]") == ErrorKind::InvalidPresentation);  // σ_3 moves ζ_4 ∈ F
    CHECK(kind_of("[1,Q,12,[[2,5,9],[2,5,0]],[[9]]]") == ErrorKind::InvalidPresentation);
    CHECK(kind_of("[1,Q,12,[[2,5,9],[2,7,0]],[[9,1]]]") == ErrorKind::InvalidPresentation);
    CHECK(kind_of("[0,Q]") == ErrorKind::InvalidPresentation);
    CHECK(std::holds_alternative<CyclicCyclotomicAlgebra>(parse_algebra("[1,Q,7,[6,3,0]]")));
    CHECK(std::holds_alternative<CyclicCyclotomicAlgebra>(parse_algebra("[1,Q,5,[4,2,0]]")));
}

TEST_CASE("property: parse ∘ serialize is the identity") {
    for (const auto& A : testing::cyclic_corpus(40, 300)) {
        AlgebraPresentation P = A;
        CHECK(parse_algebra(to_descriptor(P)) == P);
        AlgebraPresentation G = as_cyclotomic(A);
        CHECK(parse_algebra(to_descriptor(G)) == G);
    }
    for (const auto& s : testing::order48_inputs()) {
        auto P = parse_algebra(s);
        CHECK(to_descriptor(P) == s);
        CHECK(parse_algebra(to_descriptor(P)) == P);
    }
    for (i64 n = 1; n <= 20; ++n) {
        AlgebraPresentation M = MatrixAlgebra{n, AbelianNumberField::cyclotomic(n)};
        CHECK(parse_algebra(to_descriptor(M)) == M);
    }
    AlgebraPresentation three = parse_algebra("[1,Q,24,[[2,5,0],[2,7,0],[2,13,0]],[[0,0],[0]]]");
    CHECK(parse_algebra(to_descriptor(three)) == three);
}

TEST_CASE("quadratic_to_quaternion examples") {
    auto Q = AbelianNumberField::rationals();
    auto i_alg = make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(4), GaloisAut(4, 3), Cyclotomic(-1L));
    CHECK(quadratic_to_quaternion(i_alg) == QuaternionAlgebraQ{-1, -1});
    auto w_alg = make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(3), GaloisAut(3, 2), Cyclotomic(2L));
    CHECK(quadratic_to_quaternion(w_alg) == QuaternionAlgebraQ{-3, 2});
    auto r5 = make_cyclic_algebra(Q, fixed_field(5, {1, 4}), GaloisAut(5, 2), Cyclotomic(1L));
    CHECK(quadratic_to_quaternion(r5) == QuaternionAlgebraQ{5, 1});
    auto r8 = make_cyclic_algebra(Q, fixed_field(8, {1, 7}), GaloisAut(8, 3), Cyclotomic(Rational(3, 4)));
    CHECK(quadratic_to_quaternion(r8) == QuaternionAlgebraQ{2, 3});
    auto im8 = make_cyclic_algebra(Q, fixed_field(8, {1, 3}), GaloisAut(8, 5), Cyclotomic(-12L));
    CHECK(quadratic_to_quaternion(im8) == QuaternionAlgebraQ{-2, -3});

    auto quartic = make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(5), GaloisAut(5, 2), Cyclotomic(1L));
    CHECK_THROWS_WITH_AS(quadratic_to_quaternion(quartic), doctest::Contains("NotQuadratic"), Error);
    auto K = fixed_field(5, {1, 4});
    auto over_k = make_cyclic_algebra(K, AbelianNumberField::cyclotomic(5), GaloisAut(5, 4), Cyclotomic(-1L));
    CHECK_THROWS_WITH_AS(quadratic_to_quaternion(over_k), doctest::Contains("CenterNotRational"), Error);
}

TEST_CASE("cyclic_to_cyclic_cyclotomic examples") {
    auto Q = AbelianNumberField::rationals();
    auto i_alg = make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(4), GaloisAut(4, 3), Cyclotomic(-1L));
    CHECK(cyclic_to_cyclic_cyclotomic(i_alg) == CyclicCyclotomicAlgebra{1, Q, 4, 2, 3, 2});
    auto w_alg = make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(3), GaloisAut(3, 2), Cyclotomic(2L));
    CHECK_THROWS_WITH_AS(cyclic_to_cyclic_cyclotomic(w_alg), doctest::Contains("NotCyclotomicForm"), Error);
    // ζ_7 does not lie in the center Q, so the cyclic algebra itself is rejected.
    CHECK_THROWS_AS(make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(7), GaloisAut(7, 3), cyc_root(7, 1)),
                    Error);
    auto w_minus = make_cyclic_algebra(Q, AbelianNumberField::cyclotomic(3), GaloisAut(3, 2), Cyclotomic(-1L));
    auto conv = cyclic_to_cyclic_cyclotomic(w_minus);
    CHECK(conv == CyclicCyclotomicAlgebra{1, Q, 6, 2, 5, 3});
    // Over Q(√5), adjoining i.
    auto K = fixed_field(5, {1, 4});
    auto L = adjoin_root_of_unity(K, 4);
    auto over_k = make_cyclic_algebra(K, L, GaloisAut(20, 11), Cyclotomic(-1L));
    auto c2 = cyclic_to_cyclic_cyclotomic(over_k);
    CHECK(c2.n == 4);
    CHECK(c2.a == 2);
    CHECK(c2.b == 3);
    CHECK(c2.c == 2);
}

TEST_CASE("combine_local_indices examples") {
    LocalIndexTable t23{{P2, 2}, {P3, 2}};
    LocalIndexTable t2i{{P2, 2}, {Inf, 2}};
    CHECK(combine_local_indices(t23, {}) == t23);
    CHECK(combine_local_indices(t23, t2i) == LocalIndexTable{{P3, 2}, {Inf, 2}});
    CHECK(combine_local_indices(t2i, t2i).empty());
    LocalIndexTable t7{{Place(7), 3}};
    CHECK_THROWS_WITH_AS(combine_local_indices(t7, {}), doctest::Contains("UnsupportedIndex"), Error);
}

TEST_CASE("property: combine_local_indices is an elementary abelian group law") {
    std::mt19937 rng(3);
    const std::vector<Place> places{P2, P3, Place(5), Place(7), Inf};
    auto draw = [&] {
        LocalIndexTable t;
        for (Place p : places)
            if (rng() % 2) t.set(p, 2);
        return t;
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto a = draw(), b = draw(), c = draw();
        CHECK(combine_local_indices(a, b) == combine_local_indices(b, a));
        CHECK(combine_local_indices(combine_local_indices(a, b), c) ==
              combine_local_indices(a, combine_local_indices(b, c)));
        CHECK(combine_local_indices(a, LocalIndexTable{}) == a);
        CHECK(combine_local_indices(a, a).empty());
    }
}

TEST_CASE("LocalIndexTable basics") {
    LocalIndexTable t;
    t.set(Inf, 2);
    t.set(P3, 2);
    t.set(P2, 1);
    CHECK(t.to_string() == "[[3,2],[infty,2]]");
    CHECK(t.schur_index() == 2);
    CHECK(LocalIndexTable{}.schur_index() == 1);
    CHECK(LocalIndexTable{}.to_string() == "[]");
    LocalIndexTable u{{Place(7), 3}, {P2, 2}};
    CHECK(u.schur_index() == 6);
    CHECK(u.entries().begin()->first == P2);
}
