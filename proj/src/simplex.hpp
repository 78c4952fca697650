#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace abelcone::lp {

// Exact phase-1 simplex for the feasibility system A x = b, x >= 0.
// Returns a feasible basic solution, or nullopt when the system is
// infeasible. Bland's rule, so no cycling.
std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& a,
                                               const std::vector<Rat>& b);

// Same system solved in double precision first to guess an active column set,
// then confirmed exactly on that support; falls back to the exact solver.
std::optional<std::vector<Rat>> feasible_point_float_first(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

}  // namespace abelcone::lp
