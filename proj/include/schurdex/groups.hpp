#pragma once

// The cyclic-by-abelian group defined by a cyclotomic algebra presentation,
//
//   ⟨x, y_1..y_k | x^n, y_i^{a_i} = x^{c_i}, y_i x = x^{b_i} y_i,
//                  y_j y_i = y_i y_j x^{d_ij} (i < j)⟩,
//
// so that x ↦ ζ_n, y_i ↦ u_i maps it into the algebra's unit group. Elements
// are kept in the normal form x^e y_1^{e_1} ... y_k^{e_k} and addressed by
// their mixed-radix rank. Everything beyond multiplication is brute force.

#include <cstdint>
#include <string>
#include <vector>

#include "schurdex/algebras.hpp"
#include "schurdex/exactnum.hpp"

namespace schurdex {

class PresentedGroup {
public:
    using Elem = std::uint32_t;
    static constexpr std::size_t kDefaultMaxOrder = 20000;

    /// Throws GroupTooLarge, UnsupportedGeneratorCount or InconsistentPresentation.
    PresentedGroup(std::int64_t n, std::vector<GeneratorTriple> gens, std::vector<std::vector<std::int64_t>> twists,
                   std::size_t max_order = kDefaultMaxOrder);

    std::size_t order() const { return order_; }
    std::int64_t n() const { return n_; }
    std::size_t rank() const { return gens_.size(); }
    const std::vector<GeneratorTriple>& generator_triples() const { return gens_; }

    Elem identity() const { return 0; }
    Elem x_power(std::int64_t e) const;
    Elem y(std::size_t i) const;
    /// x, y_1, ..., y_k.
    std::vector<Elem> generators() const;

    std::int64_t x_exponent(Elem g) const;
    std::vector<std::int64_t> y_exponents(Elem g) const;
    bool in_cyclic_part(Elem g) const { return g < n_; }

    Elem multiply(Elem g, Elem h) const;
    Elem inverse(Elem g) const { return inverse_[g]; }
    Elem power(Elem g, std::int64_t k) const;
    /// h⁻¹ g h.
    Elem conjugate(Elem g, Elem h) const { return multiply(inverse(h), multiply(g, h)); }
    /// g⁻¹ h⁻¹ g h.
    Elem commutator(Elem g, Elem h) const { return multiply(multiply(inverse(g), inverse(h)), multiply(g, h)); }
    std::int64_t element_order(Elem g) const { return orders_[g]; }

    /// "1", "x^3*y1*y2^2", ...
    std::string to_string(Elem g) const;

private:
    Elem encode(std::int64_t e, const std::vector<std::int64_t>& ys) const;
    // β(y-part of g): the exponent by which that y-word conjugates x.
    std::int64_t beta(const std::vector<std::int64_t>& ys, std::size_t upto) const;
    Elem times_y(Elem g, std::size_t i) const;
    Elem times_x(Elem g, std::int64_t s) const;
    void check_consistency() const;

    std::int64_t n_;
    std::vector<GeneratorTriple> gens_;
    std::vector<std::vector<std::int64_t>> twists_;
    std::size_t order_;
    std::vector<std::vector<Elem>> right_y_;  // right_y_[i][g] = g·y_i
    std::vector<std::int64_t> beta_;          // beta_[g] for the y-part of g
    std::vector<Elem> inverse_;
    std::vector<std::int64_t> orders_;
};

/// Throws UnsupportedGeneratorCount beyond three generators.
PresentedGroup defining_group(const CyclotomicAlgebra& A, std::size_t max_order = PresentedGroup::kDefaultMaxOrder);
PresentedGroup defining_group(const CyclicCyclotomicAlgebra& A,
                              std::size_t max_order = PresentedGroup::kDefaultMaxOrder);

/// A subgroup as a sorted element list plus a generating set.
struct Subgroup {
    std::vector<PresentedGroup::Elem> elements;
    std::vector<PresentedGroup::Elem> gens;

    std::size_t order() const { return elements.size(); }
    bool contains(PresentedGroup::Elem g) const;
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup whole_group(const PresentedGroup& G);
Subgroup closure(const PresentedGroup& G, const std::vector<PresentedGroup::Elem>& gens);
/// Builds a subgroup from a multiplicatively closed element set.
Subgroup subgroup_from_elements(const PresentedGroup& G, std::vector<PresentedGroup::Elem> elements);

Subgroup center(const PresentedGroup& G, const Subgroup& S);
/// Elements of S commuting with every element of T.
Subgroup centralizer(const PresentedGroup& G, const Subgroup& S, const Subgroup& T);
Subgroup derived_subgroup(const PresentedGroup& G, const Subgroup& S);
/// A Sylow p-subgroup of S.
Subgroup sylow(const PresentedGroup& G, const Subgroup& S, std::int64_t p);
Subgroup intersection(const PresentedGroup& G, const Subgroup& A, const Subgroup& B);
/// g⁻¹ S g.
Subgroup conjugate(const PresentedGroup& G, const Subgroup& S, PresentedGroup::Elem g);
/// Elements of S of order d.
std::vector<PresentedGroup::Elem> elements_of_order(const PresentedGroup& G, const Subgroup& S, std::int64_t d);

bool is_abelian(const PresentedGroup& G, const Subgroup& S);
bool is_cyclic(const PresentedGroup& G, const Subgroup& S);
/// T normal in S.
bool is_normal(const PresentedGroup& G, const Subgroup& S, const Subgroup& T);
bool is_p_group(const Subgroup& S, std::int64_t p);
bool is_dihedral(const PresentedGroup& G, const Subgroup& S);
bool is_generalized_quaternion(const PresentedGroup& G, const Subgroup& S);
/// Least k ≥ 1 with g^k ∈ N.
std::int64_t order_modulo(const PresentedGroup& G, PresentedGroup::Elem g, const Subgroup& N);

/// Conjugacy classes of G, each sorted, ordered by their least element.
std::vector<std::vector<PresentedGroup::Elem>> conjugacy_classes(const PresentedGroup& G);

/// A class function given by its value at every element.
struct CharacterValues {
    std::vector<Cyclotomic> values;

    const Cyclotomic& operator()(PresentedGroup::Elem g) const { return values[g]; }
    const Cyclotomic& degree() const { return values[0]; }
};

/// Ind_{⟨x⟩}^G λ with λ(x) = ζ_n. Throws InducedNotIrreducible.
CharacterValues induced_faithful_character(const PresentedGroup& G);
CharacterValues trivial_character(const PresentedGroup& G);

/// ⟨χ, ψ⟩ = (1/|G|) Σ χ(g)·conj(ψ(g)).
Cyclotomic inner_product(const PresentedGroup& G, const CharacterValues& chi, const CharacterValues& psi);

/// Q(χ): the fixed field of every σ_u fixing all values of χ.
AbelianNumberField character_field(const CharacterValues& chi);

/// (1/|G|) Σ χ(g²) ∈ {-1, 0, 1}. Throws NonIntegralIndicator.
int frobenius_schur(const CharacterValues& chi, const PresentedGroup& G);

std::int64_t local_index_at_infty_by_character(const CyclotomicAlgebra& A);
std::int64_t local_index_at_infty_by_character(const CyclicCyclotomicAlgebra& A);

struct DefectGroupCandidates {
    std::vector<Subgroup> groups;  // one representative per conjugacy class
    bool all_cyclic = true;
    bool all_abelian = true;
};

/// p-subgroups that are both P ∩ P^g and Sylow in C_G(h) for p-regular g, h.
DefectGroupCandidates possible_defect_groups(const PresentedGroup& G, std::int64_t p);

/// Lexicographically least conjugate of S, as a canonical key.
std::vector<PresentedGroup::Elem> conjugacy_key(const PresentedGroup& G, const Subgroup& S);

}  // namespace schurdex
