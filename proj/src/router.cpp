#include "schurdex/router.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "schurdex/arith.hpp"
#include "schurdex/cycliclocal.hpp"
#include "schurdex/decomp.hpp"
#include "schurdex/dyadic.hpp"
#include "schurdex/errors.hpp"
#include "schurdex/groups.hpp"
#include "schurdex/ratquat.hpp"

namespace schurdex {

using arith::i64;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

[[noreturn]] void not_applicable(Route r, std::string_view why) {
    throw Error(ErrorKind::RouteNotApplicable, std::string(route_name(r)) + ": " + std::string(why));
}

std::vector<Place> odd_places(i64 n) {
    std::vector<Place> out;
    for (i64 p : arith::prime_divisors(n))
        if (p != 2) out.emplace_back(p);
    return out;
}

bool quaternion_shape(const CyclicCyclotomicAlgebra& A) {
    return A.F.is_rational() && top_field(A.F, A.n).degree() == 2 && arith::mod(2 * A.c, A.n) == 0;
}

bool quaternion_shape(const CyclotomicAlgebra& A) {
    return A.F.is_rational() && A.rank() == 2 &&
           std::all_of(A.gens.begin(), A.gens.end(), [](const GeneratorTriple& g) { return g.a <= 2; });
}

LocalIndexTable quaternion_factor(const CyclicAlgebra& A) {
    if (A.L == A.K || A.a == Cyclotomic(1L)) return {};
    return local_indices_quaternion(quadratic_to_quaternion(A));
}

RouteResult by_shortcut(const AlgebraPresentation& A) {
    RouteResult out{Route::Shortcut, {}, {}, {}};
    if (std::holds_alternative<MatrixAlgebra>(A)) return out;
    const auto* C = std::get_if<CyclicCyclotomicAlgebra>(&A);
    if (!C) not_applicable(Route::Shortcut, "needs a cyclic cyclotomic algebra");
    auto report = local_indices_cyclic(*C);
    out.table = std::move(report.table);
    out.warnings = std::move(report.warnings);
    return out;
}

RouteResult by_decomposition(const AlgebraPresentation& A) {
    const auto* C = std::get_if<CyclotomicAlgebra>(&A);
    if (!C) not_applicable(Route::Decompose, "needs a cyclotomic algebra with generators");
    auto report = local_indices_noncyclic(*C);
    return {Route::Decompose, std::move(report.table), {}, std::move(report.warnings)};
}

RouteResult by_character(const AlgebraPresentation& A) {
    RouteResult out{Route::Character, {}, {}, {}};
    CyclotomicAlgebra C;
    if (const auto* c = std::get_if<CyclicCyclotomicAlgebra>(&A)) C = as_cyclotomic(*c);
    else if (const auto* g = std::get_if<CyclotomicAlgebra>(&A)) C = *g;
    else not_applicable(Route::Character, "needs a cyclotomic algebra");
    out.table.set(Place::infinity(), local_index_at_infty_by_character(C));
    auto two = two_local_report(C);
    out.table.set(Place(2), two.index);
    out.warnings = std::move(two.warnings);
    out.undetermined = odd_places(C.n);
    if (!out.undetermined.empty())
        out.warnings.push_back("odd places need Brauer characters and are not determined");
    return out;
}

RouteResult by_quaternion(const AlgebraPresentation& A) {
    RouteResult out{Route::Quaternion, {}, {}, {}};
    std::visit(overloaded{
                   [&](const QuaternionAlgebraQ& q) { out.table = local_indices_quaternion(q); },
                   [&](const CyclicCyclotomicAlgebra& c) {
                       if (!quaternion_shape(c)) not_applicable(Route::Quaternion, "not a rational quaternion algebra");
                       out.table = quaternion_factor(as_cyclic_algebra(c));
                   },
                   [&](const CyclotomicAlgebra& c) {
                       if (!quaternion_shape(c)) not_applicable(Route::Quaternion, "factors are not quadratic over Q");
                       const auto pair = decompose(c);
                       out.table = combine_local_indices(quaternion_factor(pair.first), quaternion_factor(pair.second));
                   },
                   [&](const MatrixAlgebra&) {},
                   [&](const CyclicAlgebra& c) { out.table = quaternion_factor(c); },
               },
               A);
    return out;
}

}  // namespace

std::string_view route_name(Route r) {
    switch (r) {
        case Route::Shortcut: return "shortcut";
        case Route::Decompose: return "decompose";
        case Route::Character: return "character";
        case Route::Quaternion: return "quaternion";
    }
    return "unknown";
}

Route parse_route(std::string_view name) {
    for (Route r : {Route::Shortcut, Route::Decompose, Route::Character, Route::Quaternion})
        if (route_name(r) == name) return r;
    throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

AlgebraPresentation normalize(const AlgebraPresentation& A) {
    if (const auto* c = std::get_if<CyclotomicAlgebra>(&A); c && c->rank() == 1) return as_cyclic_cyclotomic(*c);
    return A;
}

std::vector<Route> applicable_routes(const AlgebraPresentation& A) {
    return std::visit(overloaded{
                          [](const MatrixAlgebra&) { return std::vector{Route::Shortcut}; },
                          [](const QuaternionAlgebraQ&) { return std::vector{Route::Quaternion}; },
                          [](const CyclicAlgebra&) { return std::vector{Route::Quaternion}; },
                          [](const CyclicCyclotomicAlgebra& c) {
                              std::vector<Route> out{Route::Shortcut, Route::Character};
                              if (quaternion_shape(c)) out.push_back(Route::Quaternion);
                              return out;
                          },
                          [](const CyclotomicAlgebra& c) {
                              std::vector<Route> out;
                              if (c.rank() == 2) out.push_back(Route::Decompose);
                              out.push_back(Route::Character);
                              if (quaternion_shape(c)) out.push_back(Route::Quaternion);
                              return out;
                          },
                      },
                      normalize(A));
}

RouteResult run_route(const AlgebraPresentation& A, Route r) {
    const auto B = normalize(A);
    switch (r) {
        case Route::Shortcut: return by_shortcut(B);
        case Route::Decompose: return by_decomposition(B);
        case Route::Character: return by_character(B);
        case Route::Quaternion: return by_quaternion(B);
    }
    not_applicable(r, "unknown route");
}

RouteResult compute_local_indices(const AlgebraPresentation& A) {
    const auto B = normalize(A);
    const auto* C = std::get_if<CyclotomicAlgebra>(&B);
    if (!C) return run_route(B, applicable_routes(B).front());
    try {
        if (C->rank() > 2)
            throw Error(ErrorKind::UnsupportedGeneratorCount, std::to_string(C->rank()) + " generators");
        return by_decomposition(B);
    } catch (const Error& e) {
        const bool recoverable = e.kind() == ErrorKind::DecompositionFailed ||
                                 e.kind() == ErrorKind::UnsolvedNormEquation ||
                                 e.kind() == ErrorKind::UnsupportedGeneratorCount;
        if (!recoverable || !odd_places(C->n).empty()) throw;
        auto out = by_character(B);
        out.warnings.insert(out.warnings.begin(), std::string(e.what()) + "; used the character route");
        return out;
    }
}

RouteCheck check_routes(const AlgebraPresentation& A) {
    RouteCheck out;
    for (Route r : applicable_routes(A)) {
        try {
            out.results.push_back(run_route(A, r));
        } catch (const Error& e) {
            out.failures.emplace_back(r, e.what());
        }
    }
    auto blind = [](const RouteResult& x, Place p) {
        return std::find(x.undetermined.begin(), x.undetermined.end(), p) != x.undetermined.end();
    };
    for (std::size_t i = 0; i < out.results.size(); ++i) {
        for (std::size_t j = i + 1; j < out.results.size(); ++j) {
            const auto& x = out.results[i];
            const auto& y = out.results[j];
            std::set<Place> places;
            for (const auto& [p, m] : x.table.entries()) places.insert(p);
            for (const auto& [p, m] : y.table.entries()) places.insert(p);
            for (Place p : places) {
                if (blind(x, p) || blind(y, p) || x.table.at(p) == y.table.at(p)) continue;
                out.conflicts.push_back(std::string(route_name(x.route)) + " and " + std::string(route_name(y.route)) +
                                        " differ at " + p.name() + ": " + std::to_string(x.table.at(p)) + " vs " +
                                        std::to_string(y.table.at(p)));
            }
        }
    }
    return out;
}

}  // namespace schurdex
