#pragma once

// Local indices of cyclic cyclotomic algebras (F(ζ_n)/F, σ_b, ζ_n^c) read off
// from reciprocity data, without touching a group or a character.

#include <cstdint>
#include <string>
#include <vector>

#include "schurdex/algebras.hpp"

namespace schurdex {

/// A local index together with caveats about how it was obtained.
struct LocalIndex {
    std::int64_t index = 1;
    std::vector<std::string> warnings;
};

/// Local index table plus the warnings collected while filling it.
struct IndexReport {
    LocalIndexTable table;
    std::vector<std::string> warnings;
};

/// 2 iff F is real, n > 2 and ζ_n^c = -1.
std::int64_t local_index_at_infty(const CyclicCyclotomicAlgebra& A);

/// Index at an odd prime from the prime-to-p part of ζ_n^c.
LocalIndex local_index_at_odd_p(const CyclicCyclotomicAlgebra& A, std::int64_t p);

/// Index at 2 (always 1 or 2).
std::int64_t local_index_at_two(const CyclicCyclotomicAlgebra& A);

/// Smallest divisor m of n with K(ζ_m) = L, for K ⊆ L = K(ζ_n).
std::int64_t minimal_root_order(const AbelianNumberField& K, const AbelianNumberField& L, std::int64_t n);

/// m / gcd(m, d) with d the local degree of F/F0 at p.
std::int64_t adjust_index_for_field(std::int64_t m, const AbelianNumberField& F, const AbelianNumberField& F0,
                                    std::int64_t p);

/// ∞ and every prime dividing 2n.
std::vector<Place> candidate_places(std::int64_t n);

IndexReport local_indices_cyclic(const CyclicCyclotomicAlgebra& A);

}  // namespace schurdex
