#pragma once

// Abelian number fields as fixed fields inside cyclotomic fields.
//
// A field F is stored as (m, B) with F ⊆ Q(ζ_m) and B ≤ (Z/m)* the group of
// exponents b for which σ_b fixes F. The conductor m is kept minimal, so two
// fields are equal exactly when their (m, B) pairs are.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schurdex/exactnum.hpp"

namespace schurdex {

class AbelianNumberField {
public:
    /// Q.
    AbelianNumberField();

    static AbelianNumberField rationals() { return {}; }
    /// Q(ζ_n).
    static AbelianNumberField cyclotomic(std::int64_t n);
    /// Fixed field of ⟨gens⟩ ≤ (Z/n)*. Throws NotCoprime.
    static AbelianNumberField fixed_field(std::int64_t n, const std::vector<std::int64_t>& gens);

    std::int64_t conductor() const { return conductor_; }
    /// Sorted residues mod conductor(); {0} for Q.
    const std::vector<std::int64_t>& stabilizer() const { return stabilizer_; }

    /// [F : Q].
    std::int64_t degree() const;
    bool is_rational() const { return conductor_ == 1; }

    /// The stabilizer pulled back to (Z/N)*. Throws FieldNotContained unless
    /// conductor() | N.
    std::vector<std::int64_t> stabilizer_mod(std::int64_t N) const;

    /// "Q", "CF(n)" or "NF(n,[1,b,...])" with a canonical generating set.
    std::string to_string() const;

    friend bool operator==(const AbelianNumberField&, const AbelianNumberField&) = default;

private:
    AbelianNumberField(std::int64_t n, std::vector<std::int64_t> subgroup);

    std::int64_t conductor_ = 1;
    std::vector<std::int64_t> stabilizer_{0};
};

struct RamificationData {
    std::int64_t e = 1;
    std::int64_t f = 1;
    std::int64_t g = 1;

    std::int64_t degree() const { return e * f * g; }
    friend bool operator==(const RamificationData&, const RamificationData&) = default;
};

AbelianNumberField fixed_field(std::int64_t n, const std::vector<std::int64_t>& gens);

/// Parses `Q`, `Rationals`, `CF(n)` or `NF(n,[b1,...])`, ignoring whitespace.
/// Error positions are reported relative to `offset`.
AbelianNumberField parse_field(std::string_view text, std::size_t offset = 0);

bool field_contains(const AbelianNumberField& F, const Cyclotomic& x);
bool is_real(const AbelianNumberField& F);

/// F ⊆ K.
bool is_subfield(const AbelianNumberField& F, const AbelianNumberField& K);
AbelianNumberField compositum(const AbelianNumberField& F, const AbelianNumberField& K);
AbelianNumberField intersection(const AbelianNumberField& F, const AbelianNumberField& K);
/// F(ζ_n).
AbelianNumberField adjoin_root_of_unity(const AbelianNumberField& F, std::int64_t n);

/// [K : F] for F ⊆ K.
std::int64_t relative_degree(const AbelianNumberField& K, const AbelianNumberField& F);

/// Gal(L/F) is cyclic (F ⊆ L).
bool is_cyclic_extension(const AbelianNumberField& L, const AbelianNumberField& F);

/// (e, f, g) of Q(ζ_n)/F at p.
RamificationData efg_over(const AbelianNumberField& F, std::int64_t n, std::int64_t p);

/// (e, f, g) of K/F at p, for F ⊆ K ⊆ Q(ζ_n).
RamificationData efg_relative(const AbelianNumberField& K, const AbelianNumberField& F,
                              std::int64_t n, std::int64_t p);

/// (e, f, g) of L/F at p for any F ⊆ L.
RamificationData efg(const AbelianNumberField& L, const AbelianNumberField& F, std::int64_t p);

/// Maximal subextension of Q(ζ_n)/F in which p splits completely.
AbelianNumberField p_split_subextension(const AbelianNumberField& F, std::int64_t n, std::int64_t p);

/// Maximal subextension of L/F in which p splits completely.
AbelianNumberField p_split_subextension(const AbelianNumberField& F, const AbelianNumberField& L,
                                        std::int64_t p);

/// e·f of F/F0 at p.
std::int64_t local_degree(const AbelianNumberField& F, const AbelianNumberField& F0, std::int64_t p);

}  // namespace schurdex
