// Command-line front end: search for trace-form polynomials and their
// reciprocal counterparts, verify shipped tables, convert between the two
// forms, and report estimated coefficient bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "salem/milp.hpp"
#include "salem/pipeline.hpp"
#include "salem/transform.hpp"

namespace {

using salem::Int;
using salem::IntPolynomial;
using salem::Rat;

// "90", "90s", "5m", "2h"
double parse_budget(const std::string& text) {
    if (text.empty()) throw CLI::ValidationError("budget", "empty duration");
    double mult = 1.0;
    std::string num = text;
    switch (text.back()) {
        case 's': mult = 1; num.pop_back(); break;
        case 'm': mult = 60; num.pop_back(); break;
        case 'h': mult = 3600; num.pop_back(); break;
        default: break;
    }
    try {
        return std::stod(num) * mult;
    } catch (const std::exception&) {
        throw CLI::ValidationError("budget", "cannot parse duration '" + text + "'");
    }
}

// CLI coefficient lists are highest degree first, matching the printed tables.
IntPolynomial poly_from_cli(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw salem::Error("cannot open " + arg.substr(1));
        nlohmann::json j;
        in >> j;
        return IntPolynomial::from_json(j);  // files are lowest degree first
    }
    std::vector<Int> highest_first;
    std::string cell;
    std::stringstream ss(arg);
    while (std::getline(ss, cell, ',')) {
        if (cell.empty()) throw salem::Error("empty coefficient in '" + arg + "'");
        highest_first.emplace_back(cell);
    }
    if (highest_first.empty()) throw salem::Error("no coefficients in '" + arg + "'");
    std::vector<Int> coeffs(highest_first.rbegin(), highest_first.rend());
    IntPolynomial p(std::move(coeffs));
    if (p.degree() != static_cast<int>(highest_first.size()) - 1) {
        throw salem::Error("leading coefficient must be nonzero");
    }
    return p;
}

std::string poly_to_cli(const IntPolynomial& p) {
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        out += p.coeff(i).get_str();
        if (i) out += ",";
    }
    return out;
}

int run_search(const salem::SearchConfig& config, const salem::SearchLimits& limits,
               const std::string& out_path, bool resume, bool json_output) {
    salem::SearchLimits effective = limits;
    std::optional<salem::RecordStore> store;
    if (!out_path.empty()) {
        if (resume) {
            auto loaded = salem::RecordStore::load(out_path);
            if (loaded.corrupt_lines > 0) {
                std::cerr << "warning: skipped " << loaded.corrupt_lines
                          << " corrupt line(s) in " << out_path << "\n";
            }
            for (const auto& rec : loaded.records) {
                if (rec.status == salem::CandidateRecord::Status::Certified) {
                    effective.dedup_preload.push_back(rec.Q.canonical_key());
                }
            }
        }
        store.emplace(out_path);
    }

    salem::SearchStats stats = salem::search(config, effective, [&](const salem::CandidateRecord& rec) {
        if (store) store->append(rec);
        if (rec.status != salem::CandidateRecord::Status::Certified) {
            if (json_output) std::cout << rec.to_json().dump() << "\n";
            return;
        }
        if (json_output) {
            std::cout << rec.to_json().dump() << std::endl;
        } else {
            std::cout << "certified d=" << rec.Q.degree() << "  Q = " << poly_to_cli(rec.Q)
                      << "\n          P = " << poly_to_cli(rec.P)
                      << "\n          salem value = " << rec.salem_value << std::endl;
        }
    });

    if (json_output) {
        nlohmann::json j = {{"attempts", stats.attempts},
                            {"solver_feasible", stats.solver_feasible},
                            {"certified", stats.certified},
                            {"rejected", stats.rejected},
                            {"rediscoveries", stats.rediscoveries}};
        std::cout << j.dump() << "\n";
    } else {
        std::cerr << "attempts " << stats.attempts << ", feasible " << stats.solver_feasible
                  << ", certified " << stats.certified << ", rejected " << stats.rejected
                  << ", rediscoveries " << stats.rediscoveries << "\n";
    }
    return 0;
}

int print_report(const salem::VerificationReport& rep, bool json_output) {
    if (json_output) {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& it : rep.items) {
            items.push_back({{"check", it.check}, {"pass", it.pass}, {"detail", it.detail}});
        }
        nlohmann::json j = {{"all_pass", rep.all_pass()}, {"items", items}};
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& it : rep.items) {
            std::cout << (it.pass ? "PASS" : "FAIL") << "  " << it.check;
            if (!it.detail.empty()) std::cout << "  [" << it.detail << "]";
            std::cout << "\n";
        }
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search and certification for trace-form polynomials and their Salem counterparts"};
    app.require_subcommand(1);
    app.set_config("--config");
    bool json_output = false;
    app.add_flag("--json", json_output, "machine-readable output");

    // --- search ---
    auto* cmd_search = app.add_subcommand("search", "run the randomized search loop");
    int degree = 0;
    std::string trace_str, right_bound_str, budget_str, out_path;
    std::uint64_t seed = 0;
    int workers = 1;
    long attempts = 0, first_k = 0, trials = 100000;
    double inflation_mult = 1.25;
    long inflation_add = 10;
    std::optional<long> box;
    long node_cap = 50000;
    double time_cap = 5.0;
    double lp_margin = 1e-6;
    bool verbose = false, resume = false;
    cmd_search->add_option("--degree", degree, "degree of the trace-form polynomial")->required();
    cmd_search->add_option("--trace", trace_str, "target trace (default 2d-3)");
    cmd_search->add_option("--right-bound", right_bound_str,
                           "right root bound, e.g. 6.69 (default built-in for d=17..20)");
    cmd_search->add_option("--seed", seed, "rng seed");
    cmd_search->add_option("--workers", workers, "parallel restart workers");
    cmd_search->add_option("--budget", budget_str, "wall-clock budget, e.g. 60s, 5m, 2h");
    cmd_search->add_option("--attempts", attempts, "stop after this many attempts");
    cmd_search->add_option("--first-k", first_k, "stop after k certified results");
    cmd_search->add_option("--out", out_path, "append certified records to this JSONL file");
    cmd_search->add_flag("--resume", resume, "preload dedup keys from --out before searching");
    cmd_search->add_flag("--verbose", verbose, "emit rejected attempts too");
    cmd_search->add_option("--trials", trials, "bound estimation sample count");
    cmd_search->add_option("--inflation-mult", inflation_mult, "bound envelope multiplier");
    cmd_search->add_option("--inflation-add", inflation_add, "bound envelope additive slack");
    cmd_search->add_option("--box", box, "skip estimation; use symmetric bounds |a_i| <= box");
    cmd_search->add_option("--node-cap", node_cap, "branch-and-bound node cap per attempt");
    cmd_search->add_option("--time-cap", time_cap, "solver time cap per attempt, seconds");
    cmd_search->add_option("--lp-margin", lp_margin, "LP margin on normalized rows");

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "re-check a shipped table fixture");
    std::string table_path, kind_str, cross_path;
    std::optional<int> verify_degree;
    std::string verify_right_bound;
    cmd_verify->add_option("--table", table_path, "CSV fixture path")->required();
    cmd_verify->add_option("--kind", kind_str, "tp (trace-form) or salem")
        ->required()
        ->check(CLI::IsMember({"tp", "salem"}));
    cmd_verify->add_option("--degree", verify_degree, "restrict to rows of this degree");
    cmd_verify->add_option("--right-bound", verify_right_bound,
                           "override right root bound for tp rows");
    cmd_verify->add_option("--cross", cross_path,
                           "salem CSV that must match row-by-row (tp kind, needs --degree)");

    // --- transform ---
    auto* cmd_transform = app.add_subcommand("transform", "expand or contract a polynomial");
    std::string expand_arg, contract_arg;
    cmd_transform->add_option("--expand", expand_arg,
                              "coefficients highest degree first, or @file.json");
    cmd_transform->add_option("--contract", contract_arg,
                              "coefficients highest degree first, or @file.json");

    // --- bounds ---
    auto* cmd_bounds = app.add_subcommand("bounds", "print estimated coefficient bounds");
    int bounds_degree = 0;
    std::string bounds_trace, bounds_right;
    long bounds_trials = 100000;
    std::uint64_t bounds_seed = 0;
    cmd_bounds->add_option("--degree", bounds_degree, "degree")->required();
    cmd_bounds->add_option("--trace", bounds_trace, "target trace (default 2d-3)");
    cmd_bounds->add_option("--right-bound", bounds_right, "right root bound");
    cmd_bounds->add_option("--trials", bounds_trials, "sample count");
    cmd_bounds->add_option("--seed", bounds_seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_search->parsed()) {
            salem::SearchConfig config;
            config.degree = degree;
            config.trace_target = trace_str.empty() ? Int(2 * degree - 3) : Int(trace_str);
            try {
                std::optional<Rat> rb;
                if (!right_bound_str.empty()) rb = salem::rat_from_decimal(right_bound_str);
                config.right_bound = salem::root_interval_for_degree(degree, rb);
            } catch (const salem::UnknownDegreeError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 3;
            }
            config.bound_trials = trials;
            config.bound_inflation_mult = inflation_mult;
            config.bound_inflation_add = inflation_add;
            config.bound_box_override = box;
            config.lp_margin = lp_margin;
            config.node_cap = node_cap;
            config.time_cap_seconds = time_cap;
            config.rng_seed = seed;

            salem::SearchLimits limits;
            if (!budget_str.empty()) limits.budget_seconds = parse_budget(budget_str);
            limits.max_attempts = attempts;
            limits.stop_after_certified = first_k;
            limits.workers = workers;
            limits.verbose = verbose;
            if (limits.budget_seconds == 0 && limits.max_attempts == 0 &&
                limits.stop_after_certified == 0) {
                std::cerr << "note: no stop condition given; running until interrupted\n";
            }
            return run_search(config, limits, out_path, resume, json_output);
        }

        if (cmd_verify->parsed()) {
            if (!cross_path.empty()) {
                if (kind_str != "tp" || !verify_degree) {
                    std::cerr << "error: --cross needs --kind tp and --degree\n";
                    return 2;
                }
                auto rep = salem::verify_correspondence(table_path, cross_path, *verify_degree);
                return print_report(rep, json_output);
            }
            salem::TableKind kind;
            kind.salem = (kind_str == "salem");
            kind.degree_filter = verify_degree;
            if (!verify_right_bound.empty()) {
                kind.right_bound_override = salem::rat_from_decimal(verify_right_bound);
            }
            auto rep = salem::verify_table(table_path, kind);
            return print_report(rep, json_output);
        }

        if (cmd_transform->parsed()) {
            if (expand_arg.empty() == contract_arg.empty()) {
                std::cerr << "error: give exactly one of --expand or --contract\n";
                return 2;
            }
            IntPolynomial input = poly_from_cli(expand_arg.empty() ? contract_arg : expand_arg);
            IntPolynomial output;
            try {
                output = expand_arg.empty() ? salem::contract_to_trace_form(input)
                                            : salem::expand_to_salem(input);
            } catch (const salem::Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
            if (json_output) {
                nlohmann::json j = {{"input", input.to_json()},
                                    {"output", output.to_json()},
                                    {"trace_input", input.trace().get_str()},
                                    {"trace_output", output.trace().get_str()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "input  (degree " << input.degree() << "): " << poly_to_cli(input)
                          << "   trace " << input.trace().get_str() << "\n";
                std::cout << "output (degree " << output.degree() << "): " << poly_to_cli(output)
                          << "   trace " << output.trace().get_str() << "\n";
            }
            return 0;
        }

        if (cmd_bounds->parsed()) {
            salem::SearchConfig config;
            config.degree = bounds_degree;
            config.trace_target =
                bounds_trace.empty() ? Int(2 * bounds_degree - 3) : Int(bounds_trace);
            std::optional<Rat> rb;
            if (!bounds_right.empty()) rb = salem::rat_from_decimal(bounds_right);
            try {
                config.right_bound = salem::root_interval_for_degree(bounds_degree, rb);
            } catch (const salem::UnknownDegreeError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 3;
            }
            config.bound_trials = bounds_trials;
            config.rng_seed = bounds_seed;
            salem::Rng rng(config.rng_seed);
            salem::CoefficientBounds bounds = salem::estimate_coefficient_bounds(config, rng);
            std::cout << bounds.to_json().dump() << "\n";
            return 0;
        }
    } catch (const salem::MalformedTableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const salem::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
