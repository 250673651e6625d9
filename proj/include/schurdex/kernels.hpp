#pragma once

// Whole-group sweeps, each with a serial reference and an OpenMP version that
// must return identical results.

#include <cstdint>
#include <vector>

#include "schurdex/groups.hpp"

namespace schurdex::kernels {

/// counts[h] = #{g ∈ G : g² = h}.
std::vector<std::uint32_t> square_census_serial(const PresentedGroup& G);
std::vector<std::uint32_t> square_census_parallel(const PresentedGroup& G);

/// Every commutator [g, h] with g, h ∈ S, sorted and deduplicated.
std::vector<PresentedGroup::Elem> commutator_set_serial(const PresentedGroup& G, const Subgroup& S);
std::vector<PresentedGroup::Elem> commutator_set_parallel(const PresentedGroup& G, const Subgroup& S);

}  // namespace schurdex::kernels
