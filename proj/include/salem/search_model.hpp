#ifndef SALEM_SEARCH_MODEL_HPP
#define SALEM_SEARCH_MODEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "salem/poly.hpp"
#include "salem/rng.hpp"

namespace salem {

struct UnknownDegreeError : Error {
    explicit UnknownDegreeError(int d)
        : Error("no built-in right root bound for degree " + std::to_string(d) +
                "; supply one explicitly") {}
};

struct InsufficientSamplesError : Error {
    InsufficientSamplesError()
        : Error("trace-conditioned rejection accepted too few samples") {}
};

struct SearchConfig {
    int degree = 0;
    Int trace_target;          // sum of roots of the sought polynomial
    Rat right_bound;           // all roots lie in (0, right_bound)
    long bound_trials = 100000;
    double bound_inflation_mult = 1.25;
    long bound_inflation_add = 10;
    std::optional<long> bound_box_override;  // symmetric |a_i| <= value
    double lp_margin = 1e-6;
    long node_cap = 50000;
    double time_cap_seconds = 5.0;
    std::uint64_t rng_seed = 0;

    /// Degree-d search for trace 2d-3 with the built-in right bound.
    static SearchConfig standard(int d, std::uint64_t seed);
};

/// Built-in right root bound for the supported degrees:
/// 17 -> 6.69, 18 -> 7.11, 19 -> 7.50, 20 -> 7.86.
Rat root_interval_for_degree(int d);
Rat root_interval_for_degree(int d, const std::optional<Rat>& override_bound);

/// d+1 strictly increasing rational points: 0, d-2 dyadic interior points of
/// (0,4), then 4 and the right bound. Sign j is (-1)^(d-j), so the candidate
/// must alternate sign across consecutive points; the last sign is +1.
struct SeparatorSet {
    std::vector<Rat> points;
    std::vector<int> signs;

    nlohmann::json to_json() const;
    static SeparatorSet from_json(const nlohmann::json& j);
};

/// Closed integer intervals for the free coefficients a_0 .. a_(d-2).
struct CoefficientBounds {
    std::vector<Int> lo, hi;

    size_t size() const { return lo.size(); }
    nlohmann::json to_json() const;
};

/// Monte-Carlo envelope of coefficients of polynomials with the target root
/// layout, restricted to samples whose root sum is near the trace target,
/// inflated outward.
CoefficientBounds estimate_coefficient_bounds(const SearchConfig& config, Rng& rng);

SeparatorSet draw_separators(const SearchConfig& config, Rng& rng);

/// Linear feasibility system over the free coefficients. Exact rows are kept
/// in denominator-cleared integer form where each strict sign condition is
/// exactly ">= 1"; float rows are row-normalized copies for the LP.
struct FeasibilityProblem {
    struct ExactRow {
        std::vector<Int> coeff;  // multiplies a_0 .. a_(d-2)
        Int constant;            // fixed contribution of a_d and a_(d-1)
    };
    struct FloatRow {
        std::vector<double> coeff;
        double offset;  // row value = coeff . a + offset, required >= margin
    };

    int degree = 0;
    Int trace_target;
    double lp_margin = 1e-6;
    std::vector<ExactRow> exact_rows;
    std::vector<FloatRow> float_rows;
    CoefficientBounds bounds;
    SeparatorSet separators;

    /// Every separator inequality holds with rational arithmetic: the scaled
    /// integer row value is >= 1. This is the only check results rest on.
    bool exact_check(const std::vector<Int>& a) const;
};

FeasibilityProblem build_feasibility_problem(const SeparatorSet& separators,
                                             const CoefficientBounds& bounds,
                                             const SearchConfig& config);

/// Monic polynomial from a solver vector: a_0..a_(d-2) free, a_(d-1) fixed to
/// -trace_target, a_d = 1.
IntPolynomial assemble_candidate(const FeasibilityProblem& problem,
                                 const std::vector<Int>& a);

}  // namespace salem

#endif
