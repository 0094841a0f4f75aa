#include "salem/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace salem {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kIntegralityTol = 1e-7;

struct LpResult {
    bool feasible = false;
    std::vector<double> x;
    long pivots = 0;
};

// Phase-1 dense tableau simplex for: find x, 0 <= x_j <= ub_j,
// sum A_ij x_j >= b_i. Only feasibility matters, so phase 2 never runs.
LpResult lp_feasible(const std::vector<std::vector<double>>& A,
                     const std::vector<double>& b, const std::vector<double>& ub) {
    const size_t n = ub.size();
    const size_t m = A.size();

    struct Row {
        std::vector<double> a;
        double rhs;
        bool needs_artificial;
    };
    std::vector<Row> rows;
    rows.reserve(m + n);
    double scale = 1.0;
    for (size_t i = 0; i < m; ++i) {
        scale = std::max(scale, std::abs(b[i]));
        if (b[i] <= 0) {
            // -A x <= -b with slack
            Row r;
            r.a.resize(n);
            for (size_t j = 0; j < n; ++j) r.a[j] = -A[i][j];
            r.rhs = -b[i];
            r.needs_artificial = false;
            rows.push_back(std::move(r));
        } else {
            Row r;
            r.a = A[i];
            r.rhs = b[i];
            r.needs_artificial = true;
            rows.push_back(std::move(r));
        }
    }
    for (size_t j = 0; j < n; ++j) {
        scale = std::max(scale, ub[j]);
        Row r;
        r.a.assign(n, 0.0);
        r.a[j] = 1.0;
        r.rhs = ub[j];
        r.needs_artificial = false;
        rows.push_back(std::move(r));
    }

    const size_t total = rows.size();
    size_t n_art = 0;
    for (const Row& r : rows) {
        if (r.needs_artificial) ++n_art;
    }
    const size_t cols = n + total + n_art + 1;  // structurals, slack/surplus, artificials, rhs
    const size_t rhs_col = cols - 1;
    const size_t art_base = n + total;

    std::vector<std::vector<double>> T(total, std::vector<double>(cols, 0.0));
    std::vector<size_t> basis(total);
    size_t art_seen = 0;
    for (size_t i = 0; i < total; ++i) {
        for (size_t j = 0; j < n; ++j) T[i][j] = rows[i].a[j];
        T[i][rhs_col] = rows[i].rhs;
        if (rows[i].needs_artificial) {
            T[i][n + i] = -1.0;  // surplus
            T[i][art_base + art_seen] = 1.0;
            basis[i] = art_base + art_seen;
            ++art_seen;
        } else {
            T[i][n + i] = 1.0;  // slack
            basis[i] = n + i;
        }
    }

    // objective row: sum of the artificial rows; drive it to zero
    std::vector<double> obj(cols, 0.0);
    for (size_t i = 0; i < total; ++i) {
        if (!rows[i].needs_artificial) continue;
        for (size_t j = 0; j < cols; ++j) obj[j] += T[i][j];
    }

    LpResult res;
    const long max_iters = 1000 + 30 * static_cast<long>(total + cols);
    const long bland_after = 100 + 10 * static_cast<long>(total);
    for (long iter = 0; iter < max_iters; ++iter) {
        if (obj[rhs_col] <= kPivotTol * (1 + scale)) break;
        // entering column: never re-enter an artificial
        size_t enter = cols;
        if (iter < bland_after) {
            double best = kPivotTol;
            for (size_t j = 0; j < art_base; ++j) {
                if (obj[j] > best) {
                    best = obj[j];
                    enter = j;
                }
            }
        } else {
            for (size_t j = 0; j < art_base; ++j) {
                if (obj[j] > kPivotTol) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter == cols) break;  // optimal
        // ratio test
        size_t leave = total;
        double best_ratio = 0;
        for (size_t i = 0; i < total; ++i) {
            if (T[i][enter] > kPivotTol) {
                const double ratio = T[i][rhs_col] / T[i][enter];
                if (leave == total || ratio < best_ratio - 1e-12 ||
                    (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == total) break;  // numerically stuck; report current state
        // pivot
        const double piv = T[leave][enter];
        for (size_t j = 0; j < cols; ++j) T[leave][j] /= piv;
        for (size_t i = 0; i < total; ++i) {
            if (i == leave) continue;
            const double f = T[i][enter];
            if (f == 0.0) continue;
            for (size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
        }
        const double fo = obj[enter];
        if (fo != 0.0) {
            for (size_t j = 0; j < cols; ++j) obj[j] -= fo * T[leave][j];
        }
        basis[leave] = enter;
        ++res.pivots;
    }

    if (obj[rhs_col] > 1e-7 * (1 + scale)) {
        res.feasible = false;
        return res;
    }
    res.feasible = true;
    res.x.assign(n, 0.0);
    for (size_t i = 0; i < total; ++i) {
        if (basis[i] < n) res.x[basis[i]] = T[i][rhs_col];
    }
    for (size_t j = 0; j < n; ++j) {
        res.x[j] = std::clamp(res.x[j], 0.0, ub[j]);
    }
    return res;
}

struct Node {
    std::vector<Int> lo, hi;
    double margin_scale = 1.0;
};

}  // namespace

SolveOutcome solve_feasibility(const FeasibilityProblem& problem, const SolveLimits& limits) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    SolveOutcome out;
    const size_t n = problem.bounds.size();
    std::vector<Node> stack;
    stack.push_back({problem.bounds.lo, problem.bounds.hi, 1.0});

    while (!stack.empty()) {
        if (out.stats.nodes >= limits.node_cap || elapsed() > limits.time_cap_seconds) {
            out.status = SolveStatus::Exhausted;
            out.stats.wall_seconds = elapsed();
            return out;
        }
        Node node = std::move(stack.back());
        stack.pop_back();
        ++out.stats.nodes;

        bool empty_box = false;
        for (size_t j = 0; j < n; ++j) {
            if (node.lo[j] > node.hi[j]) {
                empty_box = true;
                break;
            }
        }
        if (empty_box) continue;

        // LP over the shifted box x = a - lo
        std::vector<double> ub(n), lo_d(n);
        for (size_t j = 0; j < n; ++j) {
            lo_d[j] = node.lo[j].get_d();
            ub[j] = Int(node.hi[j] - node.lo[j]).get_d();
        }
        const double margin = problem.lp_margin * node.margin_scale;
        std::vector<std::vector<double>> A;
        std::vector<double> b;
        A.reserve(problem.float_rows.size());
        for (const auto& row : problem.float_rows) {
            double shift = 0;
            for (size_t j = 0; j < n; ++j) shift += row.coeff[j] * lo_d[j];
            A.push_back(row.coeff);
            b.push_back(margin - row.offset - shift);
        }
        LpResult lp = lp_feasible(A, b, ub);
        out.stats.lp_pivots += lp.pivots;
        if (!lp.feasible) continue;

        // back to original coordinates
        std::vector<double> a(n);
        for (size_t j = 0; j < n; ++j) a[j] = lp.x[j] + lo_d[j];

        size_t frac_var = n;
        double frac_dist = kIntegralityTol;
        for (size_t j = 0; j < n; ++j) {
            const double dist = std::abs(a[j] - std::round(a[j]));
            if (dist > frac_dist) {
                frac_dist = dist;
                frac_var = j;
            }
        }

        if (frac_var == n) {
            std::vector<Int> cand(n);
            for (size_t j = 0; j < n; ++j) {
                Int v(std::round(a[j]));
                if (v < node.lo[j]) v = node.lo[j];
                if (v > node.hi[j]) v = node.hi[j];
                cand[j] = std::move(v);
            }
            if (problem.exact_check(cand)) {
                out.status = SolveStatus::Feasible;
                out.solution = std::move(cand);
                out.stats.wall_seconds = elapsed();
                return out;
            }
            // float fit failed the exact test: demand more slack and retry
            if (node.margin_scale < 1e4) {
                node.margin_scale *= 100;
                stack.push_back(std::move(node));
            }
            continue;
        }

        // branch on the most fractional variable, nearest child first
        const double v = a[frac_var];
        const Int fl(std::floor(v));
        Node down = node, up = node;
        down.hi[frac_var] = fl;
        down.margin_scale = 1.0;
        up.lo[frac_var] = fl + 1;
        up.margin_scale = 1.0;
        const bool down_first = (v - std::floor(v)) <= 0.5;
        if (down_first) {
            stack.push_back(std::move(up));
            stack.push_back(std::move(down));
        } else {
            stack.push_back(std::move(down));
            stack.push_back(std::move(up));
        }
    }

    out.status = SolveStatus::Infeasible;
    out.stats.wall_seconds = elapsed();
    return out;
}

namespace {

Int box_volume(const FeasibilityProblem& problem) {
    Int vol = 1;
    for (size_t j = 0; j < problem.bounds.size(); ++j) {
        Int w = problem.bounds.hi[j] - problem.bounds.lo[j] + 1;
        if (w <= 0) return Int(0);
        vol *= w;
        if (vol > 10000000) return vol;
    }
    return vol;
}

template <typename Visit>
void enumerate_box(const FeasibilityProblem& problem, Visit&& visit) {
    const size_t n = problem.bounds.size();
    std::vector<Int> point = problem.bounds.lo;
    if (n == 0) return;
    for (;;) {
        if (!visit(point)) return;
        size_t j = 0;
        while (j < n) {
            point[j] += 1;
            if (point[j] <= problem.bounds.hi[j]) break;
            point[j] = problem.bounds.lo[j];
            ++j;
        }
        if (j == n) return;
    }
}

}  // namespace

SolveOutcome brute_force_feasibility(const FeasibilityProblem& problem) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;
    Int vol = box_volume(problem);
    if (vol > 10000000) throw SearchSpaceTooLargeError();
    if (vol == 0) {
        out.status = SolveStatus::Infeasible;
        return out;
    }
    out.status = SolveStatus::Infeasible;
    enumerate_box(problem, [&](const std::vector<Int>& point) {
        ++out.stats.nodes;
        if (problem.exact_check(point)) {
            out.status = SolveStatus::Feasible;
            out.solution = point;
            return false;
        }
        return true;
    });
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<std::vector<Int>> brute_force_enumerate(const FeasibilityProblem& problem) {
    Int vol = box_volume(problem);
    if (vol > 10000000) throw SearchSpaceTooLargeError();
    std::vector<std::vector<Int>> all;
    enumerate_box(problem, [&](const std::vector<Int>& point) {
        if (problem.exact_check(point)) all.push_back(point);
        return true;
    });
    return all;
}

}  // namespace salem
