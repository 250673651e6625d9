#pragma once

// Splitting a two-generator cyclotomic algebra ⊕ L u^i v^j into a tensor
// product of two cyclic algebras by rescaling u (and, in the ζ_4 table, v) so
// that the generators commute.

#include <cstdint>
#include <string>

#include "schurdex/algebras.hpp"
#include "schurdex/cycliclocal.hpp"

namespace schurdex {

struct TensorPair {
    CyclicAlgebra first;   // over the fixed field of σ_{b_2}
    CyclicAlgebra second;  // over the fixed field of σ_{b_1}
    std::int64_t matrix_size = 1;

    // How the pair was found.
    std::string method;  // "table" or "general"
    bool swapped = false;
    Cyclotomic u_scalar{1L};
    Cyclotomic v_scalar{1L};
};

/// Throws WrongGeneratorCount, DecompositionFailed.
TensorPair decompose(const CyclotomicAlgebra& A);

/// 1 + w + w·σ(w) + ... with w = ζ_m^{t·b1·b2} and σ = σ_{b2}, stopped when the
/// running product returns to 1. Throws NonTerminating.
Cyclotomic scalar_candidate(std::int64_t m, std::int64_t t, std::int64_t b1, std::int64_t b2);

/// Local indices of each factor, combined. Throws UnsolvedNormEquation,
/// UnsupportedGeneratorCount, WrongGeneratorCount, DecompositionFailed.
IndexReport local_indices_noncyclic(const CyclotomicAlgebra& A);
LocalIndexTable schur_index_noncyclic(const CyclotomicAlgebra& A);

/// Local indices of one cyclic factor via the quaternion or cyclic cyclotomic
/// route. Throws UnsolvedNormEquation.
IndexReport local_indices_of_factor(const CyclicAlgebra& A);

}  // namespace schurdex
