#ifndef SALEM_MILP_HPP
#define SALEM_MILP_HPP

#include <vector>

#include "salem/search_model.hpp"

namespace salem {

struct SearchSpaceTooLargeError : Error {
    SearchSpaceTooLargeError() : Error("brute-force search space exceeds the cap") {}
};

enum class SolveStatus { Feasible, Infeasible, Exhausted };

struct SolveStats {
    long nodes = 0;
    long lp_pivots = 0;
    double wall_seconds = 0.0;

    nlohmann::json to_json() const {
        return {{"nodes", nodes}, {"lp_pivots", lp_pivots}, {"wall_seconds", wall_seconds}};
    }
};

/// Feasible solutions are always re-verified with exact rational arithmetic
/// before being reported; a float-only fit is never returned as Feasible.
/// Infeasible reflects an exhausted tree under float LP pruning, so it is
/// advisory; Exhausted means a node or time cap cut the search short.
struct SolveOutcome {
    SolveStatus status = SolveStatus::Exhausted;
    std::vector<Int> solution;  // a_0 .. a_(d-2) when Feasible
    SolveStats stats;
};

struct SolveLimits {
    long node_cap = 50000;
    double time_cap_seconds = 5.0;
};

/// Depth-first branch and bound over the integer box, LP relaxation per node,
/// most-fractional branching, nearest-integer child first.
SolveOutcome solve_feasibility(const FeasibilityProblem& problem, const SolveLimits& limits);

/// Exhaustive lattice enumeration with exact checks; the test oracle.
/// Throws SearchSpaceTooLargeError beyond 10^7 lattice points.
SolveOutcome brute_force_feasibility(const FeasibilityProblem& problem);

/// All exact-feasible lattice points, for small toy problems.
std::vector<std::vector<Int>> brute_force_enumerate(const FeasibilityProblem& problem);

}  // namespace salem

#endif
