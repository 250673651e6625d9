#pragma once

// Chooses how to compute the local indices of a presentation, and runs every
// applicable method side by side for cross-checking.

#include <string>
#include <string_view>
#include <vector>

#include "schurdex/algebras.hpp"

namespace schurdex {

enum class Route { Shortcut, Decompose, Character, Quaternion };

std::string_view route_name(Route r);
/// Throws std::invalid_argument.
Route parse_route(std::string_view name);

struct RouteResult {
    Route route = Route::Shortcut;
    LocalIndexTable table;
    std::vector<Place> undetermined;  // places this route cannot see
    std::vector<std::string> warnings;
};

/// One-generator cyclotomic algebras become the cyclic shape.
AlgebraPresentation normalize(const AlgebraPresentation& A);

std::vector<Route> applicable_routes(const AlgebraPresentation& A);

/// Throws RouteNotApplicable or whatever the route itself raises.
RouteResult run_route(const AlgebraPresentation& A, Route r);

/// Cyclic shapes by shortcut, two generators by decomposition, quaternions by
/// Hilbert symbols. A failed decomposition falls back to the character route
/// when that route determines every place.
RouteResult compute_local_indices(const AlgebraPresentation& A);

struct RouteCheck {
    std::vector<RouteResult> results;
    std::vector<std::pair<Route, std::string>> failures;
    std::vector<std::string> conflicts;

    bool agree() const { return conflicts.empty(); }
};

/// Runs every applicable route and compares them on the places both determine.
RouteCheck check_routes(const AlgebraPresentation& A);

}  // namespace schurdex
