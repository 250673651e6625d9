#pragma once

// Rational quaternion algebras (a, b)_Q: ramification via Hilbert symbols.

#include <cstdint>
#include <vector>

#include "schurdex/algebras.hpp"

namespace schurdex {

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(std::int64_t a, std::int64_t p);

/// Hilbert symbol (a, b)_v ∈ {±1} for nonzero integers a, b.
int hilbert_symbol(std::int64_t a, std::int64_t b, Place v);

/// Elementary factors (c, d) with c, d ∈ {-1} ∪ primes, one per pair of
/// sign/prime factors of the squarefree parts of a and b. Throws ZeroEntry.
std::vector<QuaternionAlgebraQ> factor_entries(const QuaternionAlgebraQ& A);

/// Places where (a, b)_Q ramifies, each with local index 2. Throws ZeroEntry.
LocalIndexTable local_indices_quaternion(const QuaternionAlgebraQ& A);

std::int64_t schur_index_quaternion(const QuaternionAlgebraQ& A);

}  // namespace schurdex
