#include "schurdex/kernels.hpp"

#include <algorithm>

namespace schurdex::kernels {

using Elem = PresentedGroup::Elem;

std::vector<std::uint32_t> square_census_serial(const PresentedGroup& G) {
    std::vector<std::uint32_t> counts(G.order(), 0);
    for (Elem g = 0; g < G.order(); ++g) ++counts[G.multiply(g, g)];
    return counts;
}

std::vector<std::uint32_t> square_census_parallel(const PresentedGroup& G) {
    const auto N = static_cast<std::int64_t>(G.order());
    std::vector<std::uint32_t> counts(G.order(), 0);
#pragma omp parallel
    {
        std::vector<std::uint32_t> local(G.order(), 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t g = 0; g < N; ++g) {
            const auto e = static_cast<Elem>(g);
            ++local[G.multiply(e, e)];
        }
#pragma omp critical
        for (std::size_t h = 0; h < local.size(); ++h) counts[h] += local[h];
    }
    return counts;
}

std::vector<Elem> commutator_set_serial(const PresentedGroup& G, const Subgroup& S) {
    std::vector<char> seen(G.order(), 0);
    for (Elem g : S.elements)
        for (Elem h : S.elements) seen[G.commutator(g, h)] = 1;
    std::vector<Elem> out;
    for (Elem g = 0; g < G.order(); ++g)
        if (seen[g]) out.push_back(g);
    return out;
}

std::vector<Elem> commutator_set_parallel(const PresentedGroup& G, const Subgroup& S) {
    const auto m = static_cast<std::int64_t>(S.elements.size());
    std::vector<char> seen(G.order(), 0);
#pragma omp parallel
    {
        std::vector<char> local(G.order(), 0);
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < m; ++i)
            for (Elem h : S.elements) local[G.commutator(S.elements[static_cast<std::size_t>(i)], h)] = 1;
#pragma omp critical
        for (std::size_t g = 0; g < local.size(); ++g) seen[g] |= local[g];
    }
    std::vector<Elem> out;
    for (Elem g = 0; g < G.order(); ++g)
        if (seen[g]) out.push_back(g);
    return out;
}

}  // namespace schurdex::kernels
