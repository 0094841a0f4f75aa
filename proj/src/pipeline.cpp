#include "salem/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "salem/transform.hpp"

namespace salem {

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

nlohmann::json CandidateRecord::to_json() const {
    nlohmann::json j;
    j["status"] = (status == Status::Certified) ? "certified" : "rejected";
    if (status == Status::Rejected) j["rejected_at"] = rejected_at;
    j["degree"] = Q.degree();
    j["Q"] = Q.to_json();
    if (!P.is_zero()) j["P"] = P.to_json();
    if (!salem_value.empty()) j["salem_value"] = salem_value;
    j["trace_Q"] = trace_Q.get_str();
    j["trace_P"] = trace_P.get_str();
    j["cert_Q"] = cert_Q.to_json();
    j["cert_P"] = cert_P.to_json();
    j["profile"] = {{"in_0_4", profile.count_in_0_4},
                    {"above_4", profile.count_above_4},
                    {"isolator_lo", rat_to_string(profile.isolator_lo)},
                    {"isolator_hi", rat_to_string(profile.isolator_hi)}};
    j["provenance"] = {{"rng_seed", rng_seed},
                       {"worker_id", worker_id},
                       {"separators", separators.to_json()},
                       {"solver", solver_stats.to_json()},
                       {"timestamp", timestamp}};
    return j;
}

CandidateRecord CandidateRecord::from_json(const nlohmann::json& j) {
    CandidateRecord rec;
    rec.status = (j.at("status").get<std::string>() == "certified") ? Status::Certified
                                                                    : Status::Rejected;
    if (j.contains("rejected_at")) rec.rejected_at = j.at("rejected_at").get<std::string>();
    rec.Q = IntPolynomial::from_json(j.at("Q"));
    if (j.contains("P")) rec.P = IntPolynomial::from_json(j.at("P"));
    if (j.contains("salem_value")) rec.salem_value = j.at("salem_value").get<std::string>();
    rec.trace_Q = Int(j.at("trace_Q").get<std::string>());
    rec.trace_P = Int(j.at("trace_P").get<std::string>());
    rec.cert_Q = IrreducibilityCertificate::from_json(j.at("cert_Q"));
    rec.cert_P = IrreducibilityCertificate::from_json(j.at("cert_P"));
    const auto& prof = j.at("profile");
    rec.profile.count_in_0_4 = prof.at("in_0_4").get<int>();
    rec.profile.count_above_4 = prof.at("above_4").get<int>();
    rec.profile.isolator_lo = rat_from_decimal(prof.at("isolator_lo").get<std::string>());
    rec.profile.isolator_hi = rat_from_decimal(prof.at("isolator_hi").get<std::string>());
    const auto& prov = j.at("provenance");
    rec.rng_seed = prov.at("rng_seed").get<std::uint64_t>();
    rec.worker_id = prov.at("worker_id").get<int>();
    rec.separators = SeparatorSet::from_json(prov.at("separators"));
    rec.timestamp = prov.at("timestamp").get<std::string>();
    const auto& solver = prov.at("solver");
    rec.solver_stats.nodes = solver.at("nodes").get<long>();
    rec.solver_stats.lp_pivots = solver.at("lp_pivots").get<long>();
    rec.solver_stats.wall_seconds = solver.at("wall_seconds").get<double>();
    return rec;
}

namespace {

// Certification chain for one solver hit. Returns a record that is either
// Certified or Rejected at a named stage.
CandidateRecord certify_candidate(const FeasibilityProblem& problem,
                                  const std::vector<Int>& solution,
                                  const SearchConfig& config, int worker_id,
                                  const SolveStats& stats) {
    CandidateRecord rec;
    rec.rng_seed = config.rng_seed;
    rec.worker_id = worker_id;
    rec.separators = problem.separators;
    rec.solver_stats = stats;
    rec.timestamp = iso_timestamp();

    rec.Q = assemble_candidate(problem, solution);
    rec.trace_Q = rec.Q.trace();
    rec.trace_P = rec.trace_Q - Int(2 * rec.Q.degree());

    // Exactly verified sign alternation forces the root layout; a failure
    // here is a bug, not a bad candidate.
    ProfileCheck check = certify_profile(rec.Q, config.right_bound);
    if (!check.ok) {
        throw std::logic_error("exact solver output failed profile certification: " +
                               check.violation);
    }
    rec.profile = check.profile;

    try {
        rec.cert_Q = is_irreducible(rec.Q);
    } catch (const NotSquarefreeError&) {
        rec.rejected_at = "squarefree_Q";
        return rec;
    }
    if (rec.cert_Q.verdict != Verdict::Irreducible) {
        rec.rejected_at = "irreducibility_Q";
        return rec;
    }

    rec.P = expand_to_salem(rec.Q);

    try {
        rec.cert_P = is_irreducible(rec.P);
    } catch (const NotSquarefreeError&) {
        rec.rejected_at = "squarefree_P";
        return rec;
    }
    if (rec.cert_P.verdict != Verdict::Irreducible) {
        rec.rejected_at = "irreducibility_P";
        return rec;
    }

    rec.salem_value = salem_from_z(rec.profile.isolator_lo, rec.profile.isolator_hi,
                                   rec.Q, 10);
    rec.status = CandidateRecord::Status::Certified;
    return rec;
}

}  // namespace

SearchStats search(const SearchConfig& config, const SearchLimits& limits,
                   const RecordSink& sink) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    // Bounds come from one estimation pass shared by all workers.
    Rng bounds_rng(config.rng_seed);
    const CoefficientBounds bounds = estimate_coefficient_bounds(config, bounds_rng);

    SearchStats stats;
    std::mutex mu;
    std::unordered_set<std::string> seen(limits.dedup_preload.begin(),
                                         limits.dedup_preload.end());
    std::atomic<bool> stop{false};

    auto worker = [&](int worker_id) {
        Rng rng(config.rng_seed ^ static_cast<std::uint64_t>(worker_id));
        SolveLimits solve_limits{config.node_cap, config.time_cap_seconds};
        while (!stop.load(std::memory_order_relaxed)) {
            {
                std::lock_guard<std::mutex> lock(mu);
                if (limits.max_attempts > 0 && stats.attempts >= limits.max_attempts) {
                    stop.store(true);
                    break;
                }
                ++stats.attempts;
            }
            if (limits.budget_seconds > 0 && elapsed() > limits.budget_seconds) {
                stop.store(true);
                break;
            }
            if (limits.should_stop && limits.should_stop()) {
                stop.store(true);
                break;
            }

            SeparatorSet separators = draw_separators(config, rng);
            FeasibilityProblem problem = build_feasibility_problem(separators, bounds, config);
            SolveOutcome outcome = solve_feasibility(problem, solve_limits);
            if (outcome.status != SolveStatus::Feasible) continue;

            CandidateRecord rec = certify_candidate(problem, outcome.solution, config,
                                                    worker_id, outcome.stats);

            std::lock_guard<std::mutex> lock(mu);
            ++stats.solver_feasible;
            if (rec.status == CandidateRecord::Status::Certified) {
                const std::string key = rec.Q.canonical_key();
                if (seen.count(key)) {
                    ++stats.rediscoveries;
                    continue;
                }
                seen.insert(key);
                ++stats.certified;
                if (sink) sink(rec);
                if (limits.stop_after_certified > 0 &&
                    stats.certified >= limits.stop_after_certified) {
                    stop.store(true);
                }
            } else {
                ++stats.rejected;
                if (limits.verbose && sink) sink(rec);
            }
        }
    };

    const int nworkers = std::max(1, limits.workers);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
    return stats;
}

VerificationReport verify_record(const CandidateRecord& rec) {
    VerificationReport rep;
    const int d = rec.Q.degree();

    rep.add("monic", rec.Q.is_monic());
    bool trace_ok = false;
    try {
        trace_ok = (rec.Q.trace() == rec.trace_Q);
    } catch (const Error&) {
    }
    rep.add("trace_Q", trace_ok, "stored " + rec.trace_Q.get_str());

    // right bound is the last separator point by construction
    if (rec.separators.points.empty()) {
        rep.add("profile", false, "no separators stored");
        return rep;
    }
    const Rat R = rec.separators.points.back();
    ProfileCheck check = certify_profile(rec.Q, R);
    rep.add("profile", check.ok && check.profile.count_in_0_4 == d - 1 &&
                           check.profile.count_above_4 == 1,
            check.violation);
    if (!check.ok) return rep;

    rep.add("cert_Q_replay", replay_certificate(rec.Q, rec.cert_Q));
    bool irr_Q = false;
    try {
        irr_Q = is_irreducible(rec.Q).verdict == Verdict::Irreducible;
    } catch (const NotSquarefreeError&) {
    }
    rep.add("irreducible_Q", irr_Q);

    const IntPolynomial P = expand_to_salem(rec.Q);
    rep.add("expansion", P == rec.P);
    rep.add("self_reciprocal_P", P.is_self_reciprocal());
    rep.add("trace_P", P.trace() == rec.trace_P && rec.trace_P == rec.trace_Q - Int(2 * d));

    rep.add("cert_P_replay", replay_certificate(rec.P, rec.cert_P));
    bool irr_P = false;
    try {
        irr_P = is_irreducible(P).verdict == Verdict::Irreducible;
    } catch (const NotSquarefreeError&) {
    }
    rep.add("irreducible_P", irr_P);

    const std::string value =
        salem_from_z(check.profile.isolator_lo, check.profile.isolator_hi, rec.Q, 10);
    rep.add("salem_value", value == rec.salem_value,
            "recomputed " + value + ", stored " + rec.salem_value);
    return rep;
}

// --- table fixtures --------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& csv) {
    std::ifstream in(csv);
    if (!in) throw MalformedTableError("cannot open " + csv.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(std::move(cells));
    }
    return rows;
}

Int parse_int_cell(const std::string& cell, const std::filesystem::path& csv) {
    for (size_t i = 0; i < cell.size(); ++i) {
        const char c = cell[i];
        if (i == 0 && (c == '-' || c == '+')) continue;
        if (!isdigit(static_cast<unsigned char>(c))) {
            throw MalformedTableError("bad integer cell '" + cell + "' in " + csv.string());
        }
    }
    if (cell.empty() || cell == "-" || cell == "+") {
        throw MalformedTableError("bad integer cell '" + cell + "' in " + csv.string());
    }
    return Int(cell);
}

}  // namespace

std::vector<TpRow> load_tp_table(const std::filesystem::path& csv) {
    std::vector<TpRow> out;
    for (const auto& cells : read_csv(csv)) {
        size_t first = 0;
        while (first < cells.size() && cells[first].empty()) ++first;
        if (first == cells.size()) {
            throw MalformedTableError("blank row in " + csv.string());
        }
        std::vector<Int> highest_first;
        for (size_t i = first; i < cells.size(); ++i) {
            highest_first.push_back(parse_int_cell(cells[i], csv));
        }
        std::vector<Int> coeffs(highest_first.rbegin(), highest_first.rend());
        TpRow row;
        row.degree = static_cast<int>(coeffs.size()) - 1;
        row.Q = IntPolynomial(std::move(coeffs));
        if (row.Q.degree() != row.degree) {
            throw MalformedTableError("leading zero coefficient in " + csv.string());
        }
        out.push_back(std::move(row));
    }
    if (out.empty()) throw MalformedTableError("no rows in " + csv.string());
    return out;
}

std::vector<SalemRow> load_salem_table(const std::filesystem::path& csv) {
    std::vector<SalemRow> out;
    for (const auto& cells : read_csv(csv)) {
        if (cells.size() < 3) throw MalformedTableError("short row in " + csv.string());
        // printed half x^(2d) .. x^d, then the root value
        const size_t half_len = cells.size() - 1;
        const int d = static_cast<int>(half_len) - 1;
        const int deg = 2 * d;
        std::vector<Int> coeffs(static_cast<size_t>(deg) + 1, Int(0));
        for (size_t i = 0; i < half_len; ++i) {
            Int v = parse_int_cell(cells[i], csv);
            coeffs[static_cast<size_t>(deg) - i] = v;
            coeffs[i] = std::move(v);  // reciprocity completes the lower half
        }
        SalemRow row;
        row.degree = deg;
        row.P = IntPolynomial(std::move(coeffs));
        row.printed_value = cells.back();
        if (row.P.degree() != deg) {
            throw MalformedTableError("leading zero coefficient in " + csv.string());
        }
        out.push_back(std::move(row));
    }
    if (out.empty()) throw MalformedTableError("no rows in " + csv.string());
    return out;
}

VerificationReport verify_table(const std::filesystem::path& csv, const TableKind& kind) {
    VerificationReport rep;
    if (!kind.salem) {
        std::vector<TpRow> rows = load_tp_table(csv);
        int index = 0;
        for (const auto& row : rows) {
            ++index;
            if (kind.degree_filter && row.degree != *kind.degree_filter) continue;
            const std::string tag = "row " + std::to_string(index) + " (d=" +
                                    std::to_string(row.degree) + ")";
            if (!row.Q.is_monic()) {
                rep.add(tag, false, "not monic");
                continue;
            }
            const Int expected_trace(2 * row.degree - 3);
            if (row.Q.trace() != expected_trace) {
                rep.add(tag, false, "trace " + row.Q.trace().get_str() + " != " +
                                        expected_trace.get_str());
                continue;
            }
            Rat R;
            try {
                R = root_interval_for_degree(row.degree, kind.right_bound_override);
            } catch (const UnknownDegreeError& e) {
                rep.add(tag, false, e.what());
                continue;
            }
            ProfileCheck check = certify_profile(row.Q, R);
            if (!check.ok) {
                rep.add(tag, false, "profile: " + check.violation);
                continue;
            }
            bool irr = false;
            try {
                irr = is_irreducible(row.Q).verdict == Verdict::Irreducible;
            } catch (const NotSquarefreeError&) {
            }
            if (!irr) {
                rep.add(tag, false, "not irreducible");
                continue;
            }
            rep.add(tag, true);
        }
    } else {
        std::vector<SalemRow> rows = load_salem_table(csv);
        int index = 0;
        for (const auto& row : rows) {
            ++index;
            if (kind.degree_filter && row.degree != *kind.degree_filter) continue;
            const std::string tag = "row " + std::to_string(index) + " (deg=" +
                                    std::to_string(row.degree) + ")";
            if (!row.P.is_monic()) {
                rep.add(tag, false, "not monic");
                continue;
            }
            if (!row.P.is_self_reciprocal()) {
                rep.add(tag, false, "not self-reciprocal");
                continue;
            }
            if (row.P.trace() != Int(-3)) {
                rep.add(tag, false, "trace " + row.P.trace().get_str() + " != -3");
                continue;
            }
            IntPolynomial Q;
            try {
                Q = contract_to_trace_form(row.P);
            } catch (const Error& e) {
                rep.add(tag, false, std::string("contraction: ") + e.what());
                continue;
            }
            bool irr = false;
            try {
                irr = is_irreducible(row.P).verdict == Verdict::Irreducible;
            } catch (const NotSquarefreeError&) {
            }
            if (!irr) {
                rep.add(tag, false, "not irreducible");
                continue;
            }
            // recompute the root value from the reciprocal polynomial itself
            Int bound(1);
            for (const Int& c : row.P.coeffs()) {
                Int a = abs(c);
                if (a > bound) bound = a;
            }
            const std::string value =
                refine_largest_root(row.P, Rat(1), Rat(bound + 1), 10);
            Rat printed, computed;
            try {
                printed = rat_from_decimal(row.printed_value);
                computed = rat_from_decimal(value);
            } catch (const Error&) {
                rep.add(tag, false, "bad value cell '" + row.printed_value + "'");
                continue;
            }
            Rat diff = computed - printed;
            if (diff < 0) diff = -diff;
            if (diff > Rat(1, 1000000000)) {
                rep.add(tag, false,
                        "value " + value + " differs from printed " + row.printed_value);
                continue;
            }
            rep.add(tag, true);
        }
    }
    if (rep.items.empty()) {
        rep.add("rows", false, "no rows matched the requested degree");
    }
    return rep;
}

VerificationReport verify_correspondence(const std::filesystem::path& tp_csv,
                                         const std::filesystem::path& salem_csv, int d) {
    VerificationReport rep;
    std::vector<TpRow> tp_all = load_tp_table(tp_csv);
    std::vector<TpRow> tp;
    for (auto& row : tp_all) {
        if (row.degree == d) tp.push_back(std::move(row));
    }
    std::vector<SalemRow> sal = load_salem_table(salem_csv);
    if (tp.size() != sal.size()) {
        rep.add("row count", false,
                std::to_string(tp.size()) + " trace-form rows vs " +
                    std::to_string(sal.size()) + " reciprocal rows");
        return rep;
    }
    for (size_t k = 0; k < tp.size(); ++k) {
        const IntPolynomial P = expand_to_salem(tp[k].Q);
        const bool match = (P == sal[k].P);
        rep.add("row " + std::to_string(k + 1), match,
                match ? "" : "expansion differs from printed row");
    }
    return rep;
}

// --- persistence ------------------------------------------------------------

RecordStore::RecordStore(const std::filesystem::path& path) : path_(path) {
    if (path_.has_parent_path()) {
        std::filesystem::create_directories(path_.parent_path());
    }
}

void RecordStore::append(const CandidateRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open record store " + path_.string());
    out << rec.to_json().dump() << "\n";
    out.flush();
}

RecordStore::LoadResult RecordStore::load(const std::filesystem::path& path) {
    LoadResult result;
    std::ifstream in(path);
    if (!in) return result;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            result.records.push_back(
                CandidateRecord::from_json(nlohmann::json::parse(line)));
        } catch (const std::exception&) {
            ++result.corrupt_lines;
        }
    }
    return result;
}

}  // namespace salem
