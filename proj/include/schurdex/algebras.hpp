#pragma once

// Presentations of the simple algebras handled by the library, their
// validation, the descriptor grammar, and conversions between shapes.
//
// Descriptor grammar (whitespace-insensitive):
//   [r,F]                                      matrix algebra M_r(F)
//   [r,F,n,[a,b,c]]                            cyclic cyclotomic algebra
//   [r,F,n,[[a1,b1,c1],...],[[d12,...],...]]   general cyclotomic algebra
// with F one of Q, Rationals, CF(n), NF(n,[b,...]).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schurdex/exactnum.hpp"
#include "schurdex/numfields.hpp"

namespace schurdex {

struct MatrixAlgebra {
    std::int64_t r = 1;
    AbelianNumberField F;

    friend bool operator==(const MatrixAlgebra&, const MatrixAlgebra&) = default;
};

/// M_r((F(ζ_n)/F, σ_b, ζ_n^c)) with u^a = ζ_n^c and u ζ_n u⁻¹ = ζ_n^b.
struct CyclicCyclotomicAlgebra {
    std::int64_t r = 1;
    AbelianNumberField F;
    std::int64_t n = 1;
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t c = 0;

    friend bool operator==(const CyclicCyclotomicAlgebra&, const CyclicCyclotomicAlgebra&) = default;
};

struct GeneratorTriple {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t c = 0;

    friend bool operator==(const GeneratorTriple&, const GeneratorTriple&) = default;
};

/// Crossed product over F(ζ_n) with generators u_i: u_i^{a_i} = ζ_n^{c_i},
/// u_i ζ_n = ζ_n^{b_i} u_i, and u_j u_i = u_i u_j ζ_n^{d_ij} for i < j.
/// twists[i][j - i - 1] holds d_ij, as in the descriptor.
struct CyclotomicAlgebra {
    std::int64_t r = 1;
    AbelianNumberField F;
    std::int64_t n = 1;
    std::vector<GeneratorTriple> gens;
    std::vector<std::vector<std::int64_t>> twists;

    std::size_t rank() const { return gens.size(); }
    std::int64_t twist(std::size_t i, std::size_t j) const { return twists[i][j - i - 1]; }

    friend bool operator==(const CyclotomicAlgebra&, const CyclotomicAlgebra&) = default;
};

/// (L/K, σ, a): L/K cyclic with Gal(L/K) = ⟨σ⟩ and a ∈ K^×.
struct CyclicAlgebra {
    AbelianNumberField K;
    AbelianNumberField L;
    GaloisAut sigma{1, 1};
    Cyclotomic a;

    std::string to_string() const;
    friend bool operator==(const CyclicAlgebra&, const CyclicAlgebra&) = default;
};

/// Validates and builds (L/K, σ, a). Throws InvalidPresentation.
CyclicAlgebra make_cyclic_algebra(const AbelianNumberField& K, const AbelianNumberField& L,
                                  const GaloisAut& sigma, const Cyclotomic& a);

/// (a, b)_Q with both entries squarefree.
struct QuaternionAlgebraQ {
    std::int64_t a = 1;
    std::int64_t b = 1;

    /// Squarefree-normalizes; throws ZeroEntry.
    static QuaternionAlgebraQ normalized(std::int64_t a, std::int64_t b);
    std::string to_string() const;

    friend bool operator==(const QuaternionAlgebraQ&, const QuaternionAlgebraQ&) = default;
};

using AlgebraPresentation =
    std::variant<MatrixAlgebra, CyclicCyclotomicAlgebra, CyclotomicAlgebra, CyclicAlgebra, QuaternionAlgebraQ>;

/// A rational prime or the infinite place.
class Place {
public:
    constexpr explicit Place(std::int64_t p) : p_(p) {}
    static constexpr Place infinity() { return Place(kInfinity); }

    constexpr bool is_infinite() const { return p_ == kInfinity; }
    constexpr std::int64_t prime() const { return p_; }
    /// "infty" or the decimal prime.
    std::string name() const;

    friend constexpr auto operator<=>(const Place&, const Place&) = default;

private:
    static constexpr std::int64_t kInfinity = INT64_MAX;
    std::int64_t p_;
};

/// Local indices m_p ≥ 2, keyed by place (finite primes ascending, ∞ last).
class LocalIndexTable {
public:
    LocalIndexTable() = default;
    LocalIndexTable(std::initializer_list<std::pair<const Place, std::int64_t>> entries);

    /// Records m at p; indices of 1 are dropped.
    void set(Place p, std::int64_t m);
    std::int64_t at(Place p) const;

    const std::map<Place, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::int64_t schur_index() const;

    /// Bracket form, e.g. "[[2,2],[3,2]]" or "[[2,2],[infty,2]]".
    std::string to_string() const;

    friend bool operator==(const LocalIndexTable&, const LocalIndexTable&) = default;

private:
    std::map<Place, std::int64_t> entries_;
};

/// Throws ParseError or InvalidPresentation.
AlgebraPresentation parse_algebra(std::string_view text);

/// Descriptor text for the three grammar shapes; throws std::invalid_argument otherwise.
std::string to_descriptor(const AlgebraPresentation& A);

/// Shape name used in reports: matrix, cyclic_cyclotomic, cyclotomic, cyclic, quaternion.
std::string_view shape_name(const AlgebraPresentation& A);

/// Throws InvalidPresentation naming the failed invariant.
void validate(const CyclicCyclotomicAlgebra& A);
void validate(const CyclotomicAlgebra& A);

/// Image of Gal(F(ζ_n)/F) in (Z/n)*.
std::vector<std::int64_t> galois_residues(const AbelianNumberField& F, std::int64_t n);

/// Center and top field F(ζ_n).
AbelianNumberField top_field(const AbelianNumberField& F, std::int64_t n);

/// One-generator cyclotomic algebra viewed as the cyclic shape and back.
CyclotomicAlgebra as_cyclotomic(const CyclicCyclotomicAlgebra& A);
CyclicCyclotomicAlgebra as_cyclic_cyclotomic(const CyclotomicAlgebra& A);

/// (F(ζ_n)/F, σ_b, ζ_n^c) as a cyclic algebra; the matrix size is dropped.
CyclicAlgebra as_cyclic_algebra(const CyclicCyclotomicAlgebra& A);

/// (K(√d)/K, σ, a) = (d, a)_K with K = Q. Throws NotQuadratic, CenterNotRational.
QuaternionAlgebraQ quadratic_to_quaternion(const CyclicAlgebra& A);

/// (F(ζ_n)/F, σ_b, ζ_n^c) as [1,F,n,[a,b,c]]. Throws NotCyclotomicForm.
CyclicCyclotomicAlgebra cyclic_to_cyclic_cyclotomic(const CyclicAlgebra& A);

/// Brauer sum of tables whose indices are all 2. Throws UnsupportedIndex.
LocalIndexTable combine_local_indices(const LocalIndexTable& t1, const LocalIndexTable& t2);

}  // namespace schurdex
