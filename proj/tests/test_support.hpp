#ifndef SALEM_TEST_SUPPORT_HPP
#define SALEM_TEST_SUPPORT_HPP

#include "salem/milp.hpp"
#include "salem/rng.hpp"
#include "salem/search_model.hpp"

namespace salem::testing {

// Hand-built configuration for the degree-2 model problem: trace 5, roots
// separated by {0, 4, 8}. Integer solutions with unit margins are a_0 in
// {1, 2, 3}; the true polynomial z^2 - 5z + 1 sits at a_0 = 1.
inline SearchConfig toy_config_d2() {
    SearchConfig c;
    c.degree = 2;
    c.trace_target = 5;
    c.right_bound = Rat(8);
    return c;
}

inline SeparatorSet toy_separators_d2() {
    SeparatorSet s;
    s.points = {Rat(0), Rat(4), Rat(8)};
    s.signs = {1, -1, 1};
    return s;
}

inline CoefficientBounds symmetric_bounds(size_t n, long width) {
    CoefficientBounds b;
    b.lo.assign(n, Int(-width));
    b.hi.assign(n, Int(width));
    return b;
}

// Degree-3 model problem around z^3 - 6z^2 + 8z - 2 with separators {0,1,4,8}
// interlacing its roots.
inline SearchConfig toy_config_d3() {
    SearchConfig c;
    c.degree = 3;
    c.trace_target = 6;
    c.right_bound = Rat(8);
    return c;
}

inline SeparatorSet toy_separators_d3() {
    SeparatorSet s;
    s.points = {Rat(0), Rat(1), Rat(4), Rat(8)};
    s.signs = {-1, 1, -1, 1};
    return s;
}

// Seeded random small feasibility problem: d in {2,3,4}, box widths <= 30.
inline FeasibilityProblem random_small_problem(Rng& rng) {
    SearchConfig c;
    c.degree = 2 + static_cast<int>(rng.below(3));
    c.trace_target = Int(static_cast<long>(rng.below(static_cast<std::uint64_t>(3 * c.degree))) + 1);
    c.right_bound = Rat(8);
    SeparatorSet seps = draw_separators(c, rng);
    CoefficientBounds b;
    const size_t n = static_cast<size_t>(c.degree - 1);
    for (size_t i = 0; i < n; ++i) {
        const long lo = static_cast<long>(rng.below(41)) - 25;
        const long width = static_cast<long>(rng.below(31));
        b.lo.emplace_back(lo);
        b.hi.emplace_back(lo + width);
    }
    return build_feasibility_problem(seps, b, c);
}

}  // namespace salem::testing

#endif
