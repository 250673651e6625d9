#pragma once

// The 2-local index by way of the defining group: pass to the odd-index
// subfield K_2 over the 2-split subextension, then either read the index off a
// cyclic presentation, rule it out by abelian defect groups, or recognise a
// dyadic Schur group.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurdex/algebras.hpp"
#include "schurdex/groups.hpp"

namespace schurdex {

struct DyadicVerdict {
    enum class Kind { Q8, TypeQ8q, TypeQDq, NotDyadicSchur };
    Kind kind = Kind::NotDyadicSchur;
    std::optional<std::int64_t> q;

    bool is_dyadic() const { return kind != Kind::NotDyadicSchur; }
    /// "Q8", "(Q8,3)", "(QD,3)" or "not dyadic Schur".
    std::string to_string() const;
    friend bool operator==(const DyadicVerdict&, const DyadicVerdict&) = default;
};

/// P' cyclic of order ≥ 4 and Y/Z cyclic, with Z ≤ P' of order 4 and Y = C_P(Z).
/// Throws NotTwoGroup.
bool is_dyadic_2group(const PresentedGroup& G, const Subgroup& P);

DyadicVerdict is_dyadic_schur_group(const PresentedGroup& H);

/// A over the odd-index subfield K_2, with n minimized where the factor set allows.
struct TwoSplitReduction {
    AbelianNumberField K;   // 2-split subextension of the center in F(ζ_n)
    AbelianNumberField K2;  // [K_2:K] odd, [L:K_2] a power of 2
    std::int64_t minimal_n = 1;
    CyclotomicAlgebra algebra;  // centralizer of K_2, rank 0 when K_2 = L
    std::vector<std::string> warnings;
};

/// Throws NormReductionRequired when Gal(L/K_2) needs three generators.
TwoSplitReduction reduce_to_two_split(const CyclotomicAlgebra& A);

struct TwoLocalReport {
    std::int64_t index = 1;
    // Which step settled it: "split", "no-zeta4", "cyclic", "abelian-defect", "dyadic", "not-dyadic".
    std::string step;
    std::optional<DyadicVerdict> verdict;
    std::vector<std::string> warnings;
};

TwoLocalReport two_local_report(const CyclotomicAlgebra& A);
std::int64_t local_index_at_two_by_character(const CyclotomicAlgebra& A);
std::int64_t local_index_at_two_by_character(const CyclicCyclotomicAlgebra& A);

}  // namespace schurdex
