#include "salem/milp.hpp"

#include <algorithm>

#include "doctest.h"
#include "salem/roots.hpp"
#include "test_support.hpp"

using namespace salem;

TEST_SUITE_BEGIN("milp");

TEST_CASE("degree-2 model problem is solved") {
    SearchConfig c = testing::toy_config_d2();
    FeasibilityProblem prob = build_feasibility_problem(
        testing::toy_separators_d2(), testing::symmetric_bounds(1, 30), c);

    SolveOutcome out = solve_feasibility(prob, SolveLimits{});
    REQUIRE(out.status == SolveStatus::Feasible);
    REQUIRE(out.solution.size() == 1);
    CHECK(out.solution[0] >= 1);
    CHECK(out.solution[0] <= 3);
    CHECK(prob.exact_check(out.solution));

    auto all = brute_force_enumerate(prob);
    REQUIRE(all.size() == 3);
    CHECK(all[0][0] == 1);
    CHECK(all[1][0] == 2);
    CHECK(all[2][0] == 3);
}

TEST_CASE("clipped box turns the model infeasible") {
    SearchConfig c = testing::toy_config_d2();
    CoefficientBounds tight;
    tight.lo = {Int(5)};
    tight.hi = {Int(30)};
    FeasibilityProblem prob =
        build_feasibility_problem(testing::toy_separators_d2(), tight, c);
    SolveOutcome out = solve_feasibility(prob, SolveLimits{});
    CHECK(out.status == SolveStatus::Infeasible);
    CHECK(brute_force_feasibility(prob).status == SolveStatus::Infeasible);
}

TEST_CASE("degree-3 model problem yields a certifiable polynomial") {
    SearchConfig c = testing::toy_config_d3();
    FeasibilityProblem prob = build_feasibility_problem(
        testing::toy_separators_d3(), testing::symmetric_bounds(2, 40), c);

    SolveOutcome out = solve_feasibility(prob, SolveLimits{});
    REQUIRE(out.status == SolveStatus::Feasible);
    CHECK(prob.exact_check(out.solution));

    IntPolynomial q = assemble_candidate(prob, out.solution);
    ProfileCheck check = certify_profile(q, c.right_bound);
    CHECK(check.ok);

    // the known polynomial is in the feasible set
    auto all = brute_force_enumerate(prob);
    const bool has_known = std::any_of(all.begin(), all.end(), [](const auto& v) {
        return v[0] == -2 && v[1] == 8;
    });
    CHECK(has_known);
}

TEST_CASE("empty box") {
    SearchConfig c = testing::toy_config_d2();
    CoefficientBounds empty;
    empty.lo = {Int(5)};
    empty.hi = {Int(2)};
    FeasibilityProblem prob =
        build_feasibility_problem(testing::toy_separators_d2(), empty, c);
    CHECK(solve_feasibility(prob, SolveLimits{}).status == SolveStatus::Infeasible);
    CHECK(brute_force_feasibility(prob).status == SolveStatus::Infeasible);
}

TEST_CASE("caps produce Exhausted") {
    SearchConfig c = testing::toy_config_d3();
    FeasibilityProblem prob = build_feasibility_problem(
        testing::toy_separators_d3(), testing::symmetric_bounds(2, 40), c);
    SolveLimits limits;
    limits.node_cap = 0;
    CHECK(solve_feasibility(prob, limits).status == SolveStatus::Exhausted);
}

TEST_CASE("brute force refuses oversized boxes") {
    SearchConfig c;
    c.degree = 4;
    c.trace_target = 9;
    c.right_bound = Rat(8);
    Rng rng(3);
    SeparatorSet seps = draw_separators(c, rng);
    FeasibilityProblem prob =
        build_feasibility_problem(seps, testing::symmetric_bounds(3, 3000), c);
    CHECK_THROWS_AS(brute_force_feasibility(prob), SearchSpaceTooLargeError);
}

TEST_CASE("solver agrees with brute force on random small problems") {
    Rng rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        FeasibilityProblem prob = testing::random_small_problem(rng);
        SolveOutcome fast = solve_feasibility(prob, SolveLimits{});
        if (fast.status == SolveStatus::Exhausted) continue;
        SolveOutcome slow = brute_force_feasibility(prob);
        CAPTURE(trial);
        CHECK(fast.status == slow.status);
        if (fast.status == SolveStatus::Feasible) {
            CHECK(prob.exact_check(fast.solution));
        }
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("solver determinism") {
    SearchConfig c = testing::toy_config_d3();
    FeasibilityProblem prob = build_feasibility_problem(
        testing::toy_separators_d3(), testing::symmetric_bounds(2, 40), c);
    SolveOutcome a = solve_feasibility(prob, SolveLimits{});
    SolveOutcome b = solve_feasibility(prob, SolveLimits{});
    CHECK(a.status == b.status);
    CHECK(a.solution == b.solution);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.lp_pivots == b.stats.lp_pivots);
}

TEST_SUITE_END();
