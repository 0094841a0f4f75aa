#include "salem/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "salem/transform.hpp"
#include "test_support.hpp"

using namespace salem;

namespace {

const std::filesystem::path kDataDir{SALEM_DATA_DIR};

SearchConfig quick_d3_config(std::uint64_t seed) {
    SearchConfig c = testing::toy_config_d3();
    c.bound_box_override = 40;
    c.rng_seed = seed;
    return c;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name) {
        path = std::filesystem::temp_directory_path() / name;
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("degree-3 search rediscovers the known polynomial") {
    SearchConfig config = quick_d3_config(42);
    SearchLimits limits;
    limits.budget_seconds = 60;
    limits.workers = 1;

    const IntPolynomial target{-2, 8, -6, 1};
    bool found = false;
    std::vector<CandidateRecord> certified;
    limits.should_stop = [&found]() { return found; };
    search(config, limits, [&](const CandidateRecord& rec) {
        certified.push_back(rec);
        if (rec.Q == target) found = true;
    });
    REQUIRE(found);

    for (const auto& rec : certified) {
        CHECK(rec.status == CandidateRecord::Status::Certified);
        VerificationReport rep = verify_record(rec);
        CAPTURE(rec.Q.to_string("z"));
        CHECK(rep.all_pass());
        CHECK(rec.trace_P == rec.trace_Q - Int(2 * rec.Q.degree()));
    }

    // the known pair comes out attached to the right expansion and value
    for (const auto& rec : certified) {
        if (rec.Q == target) {
            CHECK(rec.P == IntPolynomial{1, 0, -1, -2, -1, 0, 1});
            CHECK(rec.trace_Q == 6);
            CHECK(rec.trace_P == 0);
        }
    }
}

TEST_CASE("no duplicate emissions") {
    SearchConfig config = quick_d3_config(7);
    SearchLimits limits;
    limits.max_attempts = 400;
    limits.workers = 2;
    std::vector<std::string> keys;
    search(config, limits, [&](const CandidateRecord& rec) {
        keys.push_back(rec.Q.canonical_key());
    });
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("verify_record flags tampering") {
    SearchConfig config = quick_d3_config(42);
    SearchLimits limits;
    limits.stop_after_certified = 1;
    limits.budget_seconds = 60;
    std::vector<CandidateRecord> got;
    search(config, limits, [&](const CandidateRecord& rec) { got.push_back(rec); });
    REQUIRE_FALSE(got.empty());
    CandidateRecord rec = got.front();
    REQUIRE(verify_record(rec).all_pass());

    SUBCASE("expansion mismatch") {
        std::vector<Int> coeffs = rec.P.coeffs();
        coeffs[2] += 1;
        rec.P = IntPolynomial(std::move(coeffs));
        VerificationReport rep = verify_record(rec);
        CHECK_FALSE(rep.all_pass());
        bool expansion_failed = false;
        for (const auto& it : rep.items) {
            if (it.check == "expansion" && !it.pass) expansion_failed = true;
        }
        CHECK(expansion_failed);
    }

    SUBCASE("salem value altered in the last decimal") {
        REQUIRE_FALSE(rec.salem_value.empty());
        char& last = rec.salem_value.back();
        last = (last == '9') ? '8' : static_cast<char>(last + 1);
        VerificationReport rep = verify_record(rec);
        bool value_failed = false;
        for (const auto& it : rep.items) {
            if (it.check == "salem_value" && !it.pass) value_failed = true;
        }
        CHECK(value_failed);
    }
}

TEST_CASE("negative control: no totally positive quartic of trace 5") {
    SearchConfig config;
    config.degree = 4;
    config.trace_target = 5;
    config.right_bound = Rat(8);
    config.bound_box_override = 30;
    config.rng_seed = 11;
    SearchLimits limits;
    limits.budget_seconds = 3;
    long emissions = 0;
    search(config, limits, [&](const CandidateRecord&) { ++emissions; });
    CHECK(emissions == 0);
}

TEST_CASE("record store round trip and corruption handling") {
    SearchConfig config = quick_d3_config(42);
    SearchLimits limits;
    limits.stop_after_certified = 1;
    limits.budget_seconds = 60;
    std::vector<CandidateRecord> got;
    search(config, limits, [&](const CandidateRecord& rec) { got.push_back(rec); });
    REQUIRE_FALSE(got.empty());

    TempFile tmp("salem_store_test.jsonl");
    RecordStore store(tmp.path);
    store.append(got.front());
    store.append(got.front());
    {
        std::ofstream out(tmp.path, std::ios::app);
        out << "{not json}\n";
    }

    auto loaded = RecordStore::load(tmp.path);
    CHECK(loaded.records.size() == 2);
    CHECK(loaded.corrupt_lines == 1);
    CHECK(loaded.records[0].Q == got.front().Q);
    CHECK(loaded.records[0].salem_value == got.front().salem_value);
    CHECK(verify_record(loaded.records[0]).all_pass());

    // resume path: preloaded keys suppress re-emission
    SearchLimits resume;
    resume.budget_seconds = 5;
    resume.dedup_preload.push_back(got.front().Q.canonical_key());
    bool re_emitted = false;
    resume.should_stop = [&re_emitted]() { return re_emitted; };
    SearchConfig config2 = quick_d3_config(42);
    search(config2, resume, [&](const CandidateRecord& rec) {
        if (rec.Q == got.front().Q) re_emitted = true;
    });
    CHECK_FALSE(re_emitted);
}

TEST_CASE("record json round trip") {
    SearchConfig config = quick_d3_config(42);
    SearchLimits limits;
    limits.stop_after_certified = 1;
    limits.budget_seconds = 60;
    std::vector<CandidateRecord> got;
    search(config, limits, [&](const CandidateRecord& rec) { got.push_back(rec); });
    REQUIRE_FALSE(got.empty());
    const CandidateRecord& rec = got.front();
    CandidateRecord back = CandidateRecord::from_json(rec.to_json());
    CHECK(back.Q == rec.Q);
    CHECK(back.P == rec.P);
    CHECK(back.salem_value == rec.salem_value);
    CHECK(back.trace_Q == rec.trace_Q);
    CHECK(back.trace_P == rec.trace_P);
    CHECK(back.separators.points == rec.separators.points);
    CHECK(back.separators.signs == rec.separators.signs);
}

TEST_CASE("table fixtures load with the published shapes") {
    auto t2 = load_tp_table(kDataDir / "table2.csv");
    CHECK(t2.size() == 20);
    int d17 = 0, d18 = 0, d19 = 0;
    for (const auto& row : t2) {
        if (row.degree == 17) ++d17;
        if (row.degree == 18) ++d18;
        if (row.degree == 19) ++d19;
    }
    CHECK(d17 == 2);
    CHECK(d18 == 4);
    CHECK(d19 == 14);

    auto t3 = load_tp_table(kDataDir / "table3.csv");
    CHECK(t3.size() == 45);

    auto t4 = load_salem_table(kDataDir / "table4.csv");
    REQUIRE(t4.size() == 2);
    CHECK(t4[0].degree == 34);
    CHECK(t4[0].P.is_self_reciprocal());
    CHECK(t4[0].printed_value == "2.9718375039");

    auto t7 = load_salem_table(kDataDir / "table7.csv");
    CHECK(t7.size() == 45);
    CHECK(t7[0].printed_value == "3.8007708538");
}

TEST_CASE("salem table verification catches corruption") {
    // clean copy passes
    TableKind salem_kind;
    salem_kind.salem = true;
    VerificationReport clean = verify_table(kDataDir / "table4.csv", salem_kind);
    CHECK(clean.all_pass());

    // corrupt one coefficient of row 1: -693 -> -694
    std::ifstream in(kDataDir / "table4.csv");
    std::string line1, line2;
    std::getline(in, line1);
    std::getline(in, line2);
    const size_t pos = line1.find("-693");
    REQUIRE(pos != std::string::npos);
    line1.replace(pos, 4, "-694");

    TempFile tmp("salem_table4_corrupt.csv");
    {
        std::ofstream out(tmp.path);
        out << line1 << "\n" << line2 << "\n";
    }
    VerificationReport rep = verify_table(tmp.path, salem_kind);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("malformed fixtures raise table errors") {
    TempFile tmp("salem_bad_table.csv");
    {
        std::ofstream out(tmp.path);
        out << "1,2,xyz\n";
    }
    TableKind kind;
    CHECK_THROWS_AS(load_tp_table(tmp.path), MalformedTableError);
    CHECK_THROWS_AS(verify_table(tmp.path, kind), MalformedTableError);
    CHECK_THROWS_AS(load_tp_table(kDataDir / "does_not_exist.csv"), MalformedTableError);
}

TEST_SUITE_END();
