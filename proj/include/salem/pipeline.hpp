#ifndef SALEM_PIPELINE_HPP
#define SALEM_PIPELINE_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "salem/irreducibility.hpp"
#include "salem/milp.hpp"
#include "salem/roots.hpp"
#include "salem/search_model.hpp"

namespace salem {

struct MalformedTableError : Error {
    using Error::Error;
};

/// One certified (or rejected) search result with everything needed to
/// re-derive it from Q alone.
struct CandidateRecord {
    enum class Status { Certified, Rejected };

    Status status = Status::Rejected;
    std::string rejected_at;  // stage name when Rejected

    IntPolynomial Q;
    IntPolynomial P;              // expansion of Q (empty when rejected early)
    std::string salem_value;      // 10-decimal string
    Int trace_Q, trace_P;
    IrreducibilityCertificate cert_Q, cert_P;
    RootProfile profile;

    std::uint64_t rng_seed = 0;
    int worker_id = 0;
    SeparatorSet separators;
    SolveStats solver_stats;
    std::string timestamp;

    nlohmann::json to_json() const;
    static CandidateRecord from_json(const nlohmann::json& j);
};

struct SearchLimits {
    double budget_seconds = 0;  // 0 = unlimited
    long max_attempts = 0;      // 0 = unlimited
    long stop_after_certified = 0;
    int workers = 1;
    bool verbose = false;  // emit rejected records too
    std::vector<std::string> dedup_preload;  // canonical keys from a resumed store
    std::function<bool()> should_stop;       // polled between attempts
};

struct SearchStats {
    long attempts = 0;
    long solver_feasible = 0;
    long certified = 0;
    long rejected = 0;
    long rediscoveries = 0;  // feasible hits deduplicated away
};

using RecordSink = std::function<void(const CandidateRecord&)>;

/// The search loop: draw separators, solve, certify, transform, dedup, emit.
/// The sink receives certified records (and rejected ones when verbose);
/// it is called under a lock, one record at a time.
SearchStats search(const SearchConfig& config, const SearchLimits& limits,
                   const RecordSink& sink);

struct VerificationReport {
    struct Item {
        std::string check;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const auto& it : items) {
            if (!it.pass) return false;
        }
        return true;
    }
    void add(const std::string& check, bool pass, const std::string& detail = "") {
        items.push_back({check, pass, detail});
    }
};

/// Recomputes every certified field of the record from Q alone.
VerificationReport verify_record(const CandidateRecord& rec);

// --- table fixtures ------------------------------------------------------

/// CSV rows as printed: coefficients highest degree first, leading blanks for
/// absent terms; Salem tables carry the decimal root value in the last cell.
struct TpRow {
    IntPolynomial Q;
    int degree = 0;
};
struct SalemRow {
    IntPolynomial P;          // completed by reciprocity from the printed half
    std::string printed_value;
    int degree = 0;
};

std::vector<TpRow> load_tp_table(const std::filesystem::path& csv);
std::vector<SalemRow> load_salem_table(const std::filesystem::path& csv);

struct TableKind {
    bool salem = false;
    std::optional<int> degree_filter;        // restrict to rows of this degree
    std::optional<Rat> right_bound_override;  // for degrees outside the table
};

VerificationReport verify_table(const std::filesystem::path& csv, const TableKind& kind);

/// Row k of the trace-form table must expand bit-exactly to row k of the
/// Salem table (tp rows filtered to degree d when the file mixes degrees).
VerificationReport verify_correspondence(const std::filesystem::path& tp_csv,
                                         const std::filesystem::path& salem_csv, int d);

// --- persistence ----------------------------------------------------------

/// Append-only JSONL store; one record per line, flushed per append.
class RecordStore {
public:
    explicit RecordStore(const std::filesystem::path& path);
    void append(const CandidateRecord& rec);

    struct LoadResult {
        std::vector<CandidateRecord> records;
        int corrupt_lines = 0;
    };
    static LoadResult load(const std::filesystem::path& path);

private:
    std::filesystem::path path_;
};

}  // namespace salem

#endif
