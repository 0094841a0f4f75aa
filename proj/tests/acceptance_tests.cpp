// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// gate fails. Criterion 9 is stochastic by nature and asserts soundness of
// whatever a short unattended run emits, not that it finds anything.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <vector>

#include "salem/irreducibility.hpp"
#include "salem/milp.hpp"
#include "salem/pipeline.hpp"
#include "salem/roots.hpp"
#include "salem/transform.hpp"
#include "test_support.hpp"

using namespace salem;

namespace {

const std::filesystem::path kDataDir{SALEM_DATA_DIR};
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — "
              << detail << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: exact verification of the 65 trace-form rows -------------

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    int rows = 0, failures = 0;
    std::map<int, int> trace_by_degree;
    for (const char* file : {"table2.csv", "table3.csv"}) {
        TableKind kind;  // per-row degree detection, built-in right bounds
        VerificationReport rep = verify_table(kDataDir / file, kind);
        for (const auto& item : rep.items) {
            ++rows;
            if (!item.pass) {
                ++failures;
                std::cout << "  " << file << " " << item.check << ": " << item.detail << "\n";
            }
        }
        for (const auto& row : load_tp_table(kDataDir / file)) {
            trace_by_degree[row.degree] = static_cast<int>(row.Q.trace().get_si());
        }
    }
    const bool traces_ok = trace_by_degree[17] == 31 && trace_by_degree[18] == 33 &&
                           trace_by_degree[19] == 35 && trace_by_degree[20] == 37;
    report(1, rows == 65 && failures == 0 && traces_ok,
           std::to_string(rows) + " rows, " + std::to_string(failures) +
               " failures, traces {31,33,35,37}, " +
               std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 2: expansion matches the printed reciprocal tables ----------

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::tuple<std::string, std::string, int>> pairs = {
        {"table2.csv", "table4.csv", 17},
        {"table2.csv", "table5.csv", 18},
        {"table2.csv", "table6.csv", 19},
        {"table3.csv", "table7.csv", 20},
    };
    int rows = 0, failures = 0;
    for (const auto& [tp_file, salem_file, d] : pairs) {
        VerificationReport rep =
            verify_correspondence(kDataDir / tp_file, kDataDir / salem_file, d);
        for (const auto& item : rep.items) {
            ++rows;
            if (!item.pass) {
                ++failures;
                std::cout << "  " << salem_file << " " << item.check << ": " << item.detail
                          << "\n";
            }
        }
    }
    // reciprocity, trace -3 and irreducibility of every printed row
    int salem_rows = 0, salem_failures = 0;
    for (const char* file : {"table4.csv", "table5.csv", "table6.csv", "table7.csv"}) {
        for (const auto& row : load_salem_table(kDataDir / file)) {
            ++salem_rows;
            bool ok = row.P.is_monic() && row.P.is_self_reciprocal() &&
                      row.P.trace() == Int(-3);
            if (ok) {
                try {
                    ok = is_irreducible(row.P).verdict == Verdict::Irreducible;
                } catch (const NotSquarefreeError&) {
                    ok = false;
                }
            }
            if (ok) {
                ok = contract_to_trace_form(row.P).degree() * 2 == row.degree;
            }
            if (!ok) ++salem_failures;
        }
    }
    report(2, rows == 65 && failures == 0 && salem_rows == 65 && salem_failures == 0,
           std::to_string(rows) + " expansion matches bit-exact, " +
               std::to_string(salem_rows) + " reciprocal rows certified, " +
               std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 3: the 65 printed 10-decimal values -------------------------

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    int rows = 0, failures = 0;
    const Rat tolerance(1, 1000000000);
    for (const char* file : {"table4.csv", "table5.csv", "table6.csv", "table7.csv"}) {
        for (const auto& row : load_salem_table(kDataDir / file)) {
            ++rows;
            Int bound(1);
            for (const Int& c : row.P.coeffs()) {
                Int a = abs(c);
                if (a > bound) bound = a;
            }
            const std::string direct =
                refine_largest_root(row.P, Rat(1), Rat(bound + 1), 10);
            // same value through the z-route
            const IntPolynomial Q = contract_to_trace_form(row.P);
            ProfileCheck check =
                certify_profile(Q, root_interval_for_degree(row.degree / 2));
            std::string via_z;
            if (check.ok) {
                via_z = salem_from_z(check.profile.isolator_lo, check.profile.isolator_hi,
                                     Q, 10);
            }
            Rat diff = rat_from_decimal(direct) - rat_from_decimal(row.printed_value);
            if (diff < 0) diff = -diff;
            if (!(diff <= tolerance) || via_z != direct) {
                ++failures;
                std::cout << "  " << file << ": printed " << row.printed_value
                          << " recomputed " << direct << " via-z " << via_z << "\n";
            }
        }
    }
    report(3, rows == 65 && failures == 0,
           std::to_string(rows) + " values within 1e-9 (both routes agree), " +
               std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 4: contraction round trip ------------------------------------

void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0, failures = 0;
    for (const char* file : {"table2.csv", "table3.csv"}) {
        for (const auto& row : load_tp_table(kDataDir / file)) {
            ++checked;
            if (contract_to_trace_form(expand_to_salem(row.Q)) != row.Q) ++failures;
        }
    }
    Rng rng(404);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(20));
        std::vector<Int> c;
        for (int i = 0; i < d; ++i) {
            c.emplace_back(static_cast<long>(rng.below(2000001)) - 1000000);
        }
        c.emplace_back(1);
        IntPolynomial q(std::move(c));
        ++checked;
        if (contract_to_trace_form(expand_to_salem(q)) != q) ++failures;
    }
    report(4, checked == 565 && failures == 0,
           std::to_string(checked) + " round trips exact, " +
               std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 5: solver vs brute force -------------------------------------

void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(5050);
    int agreements = 0, exhausted = 0, failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FeasibilityProblem prob = testing::random_small_problem(rng);
        SolveOutcome fast = solve_feasibility(prob, SolveLimits{});
        if (fast.status == SolveStatus::Exhausted) {
            ++exhausted;
            continue;
        }
        SolveOutcome slow = brute_force_feasibility(prob);
        bool ok = (fast.status == slow.status);
        if (fast.status == SolveStatus::Feasible && !prob.exact_check(fast.solution)) {
            ok = false;
        }
        if (ok) {
            ++agreements;
        } else {
            ++failures;
        }
    }
    report(5, failures == 0,
           std::to_string(agreements) + " agreements, " + std::to_string(exhausted) +
               " exhausted (excluded), " + std::to_string(failures) + " disagreements, " +
               std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 6: irreducibility against exhaustive factor search -----------

// Independent oracle over monic quartics: rational-root scan plus Vieta
// enumeration of quadratic splits through divisor pairs of the constant term.
bool quartic_reducible_oracle(long A, long B, long C, long D) {
    if (D == 0) return true;  // x divides
    const long aD = std::labs(D);
    // linear factor: any integer root divides D
    for (long r = 1; r <= aD; ++r) {
        if (D % r != 0) continue;
        for (long s : {r, -r}) {
            const long long v =
                (((static_cast<long long>(s) + A) * s + B) * s + C) * s + D;
            if (v == 0) return true;
        }
    }
    // quadratic split (x^2+bx+c)(x^2+ex+f): cf = D, b+e = A, be = B-c-f,
    // bf+ce = C; both orders of (c,f) are enumerated, so one (b,e) assignment
    // per pair suffices
    for (long c = 1; c <= aD; ++c) {
        if (D % c != 0) continue;
        for (long cc : {c, -c}) {
            const long f = D / cc;
            const long be = B - cc - f;
            const long long disc = static_cast<long long>(A) * A - 4LL * be;
            if (disc < 0) continue;
            long long root = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
            while (root > 0 && root * root > disc) --root;
            while ((root + 1) * (root + 1) <= disc) ++root;
            if (root * root != disc) continue;
            if ((A - root) % 2 != 0) continue;
            const long long b = (A - root) / 2;
            const long long e = A - b;
            if (b * f + e * cc == C) return true;
        }
    }
    return false;
}

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    long checked = 0, failures = 0;
    for (long A = -5; A <= 5; ++A) {
        for (long B = -5; B <= 5; ++B) {
            for (long C = -5; C <= 5; ++C) {
                for (long D = -5; D <= 5; ++D) {
                    ++checked;
                    IntPolynomial p{D, C, B, A, 1};
                    const bool oracle_reducible = quartic_reducible_oracle(A, B, C, D);
                    bool ours_reducible = false;
                    try {
                        auto cert = is_irreducible(p);
                        ours_reducible = (cert.verdict == Verdict::Reducible);
                        if (ours_reducible &&
                            !(divides_exactly(cert.factor, p) && cert.factor.degree() > 0 &&
                              cert.factor.degree() < 4)) {
                            ++failures;
                            continue;
                        }
                    } catch (const NotSquarefreeError&) {
                        ours_reducible = true;  // repeated factor is a proper factor
                    }
                    if (ours_reducible != oracle_reducible) {
                        ++failures;
                        std::cout << "  disagreement at " << p.to_string() << "\n";
                    }
                }
            }
        }
    }

    // the two classic blind spots carry genuine factors
    auto c1 = is_irreducible(IntPolynomial{1, 0, 1, 0, 1});
    auto c2 = is_irreducible(IntPolynomial{6, 0, -5, 0, 1});
    const bool blind_ok = c1.verdict == Verdict::Reducible &&
                          divides_exactly(c1.factor, IntPolynomial{1, 0, 1, 0, 1}) &&
                          c2.verdict == Verdict::Reducible &&
                          divides_exactly(c2.factor, IntPolynomial{6, 0, -5, 0, 1});

    // all 130 published polynomials are irreducible
    int table_rows = 0, table_failures = 0;
    for (const char* file : {"table2.csv", "table3.csv"}) {
        for (const auto& row : load_tp_table(kDataDir / file)) {
            ++table_rows;
            if (is_irreducible(row.Q).verdict != Verdict::Irreducible) ++table_failures;
        }
    }
    for (const char* file : {"table4.csv", "table5.csv", "table6.csv", "table7.csv"}) {
        for (const auto& row : load_salem_table(kDataDir / file)) {
            ++table_rows;
            if (is_irreducible(row.P).verdict != Verdict::Irreducible) ++table_failures;
        }
    }

    report(6,
           failures == 0 && blind_ok && table_rows == 130 && table_failures == 0,
           std::to_string(checked) + " quartics vs oracle, " + std::to_string(table_rows) +
               " table rows irreducible, " + std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 7: rediscovery of the zero-trace sextic source ---------------

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const IntPolynomial target{-2, 8, -6, 1};
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SearchConfig config;
        config.degree = 3;
        config.trace_target = 6;
        config.right_bound = Rat(8);
        config.rng_seed = seed;
        SearchLimits limits;
        limits.budget_seconds = 60;
        limits.workers = 1;
        bool found = false;
        limits.should_stop = [&found]() { return found; };
        search(config, limits, [&](const CandidateRecord& rec) {
            if (rec.Q == target && rec.P == IntPolynomial{1, 0, -1, -2, -1, 0, 1}) {
                found = true;
            }
        });
        if (found) ++hits;
    }
    report(7, hits >= 9,
           std::to_string(hits) + "/10 seeds rediscovered the sextic source within 60s, " +
               std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 8: negative control ------------------------------------------

void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    SearchConfig config;
    config.degree = 4;
    config.trace_target = 5;
    config.right_bound = Rat(8);
    config.rng_seed = 8;
    SearchLimits limits;
    limits.budget_seconds = 60;
    limits.workers = 2;
    long emissions = 0;
    SearchStats stats = search(config, limits, [&](const CandidateRecord&) { ++emissions; });
    report(8, emissions == 0,
           std::to_string(stats.attempts) + " attempts, " + std::to_string(emissions) +
               " certified emissions, " + std::to_string(seconds_since(t0)) + "s");
}

// ---- criterion 9: short unattended run at the working scale -----------------

void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    SearchConfig config = SearchConfig::standard(17, 1);
    config.bound_trials = 50000;
    SearchLimits limits;
    limits.budget_seconds = 20;
    limits.workers = 2;
    limits.verbose = true;  // examine rejected attempts too
    long certified = 0, rejected = 0, unsound = 0;
    std::vector<CandidateRecord> emitted;
    search(config, limits, [&](const CandidateRecord& rec) { emitted.push_back(rec); });
    for (const auto& rec : emitted) {
        if (rec.status == CandidateRecord::Status::Certified) {
            ++certified;
            if (!verify_record(rec).all_pass()) ++unsound;
            if (rec.trace_Q != Int(31)) ++unsound;
        } else {
            ++rejected;
        }
    }
    report(9, unsound == 0,
           "degree-17 run: " + std::to_string(certified) + " certified, " +
               std::to_string(rejected) + " rejected attempts, all emissions sound (" +
               "not a completeness gate), " + std::to_string(seconds_since(t0)) + "s");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
}
