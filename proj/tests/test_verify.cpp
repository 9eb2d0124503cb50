#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "toeplitz/verify.hpp"

using namespace toeplitz;
using verify::Record;
using verify::RecordVerdict;
using verify::SweepConfig;
using verify::TheoremId;

namespace {

struct Scrubbed {
    std::string spec, theorem, verdict, closed, oracle, reason;

    bool operator==(const Scrubbed&) const = default;
};

Scrubbed scrub(const Record& r) {
    return {r.spec_text, verify::theorem_name(r.theorem), verify::verdict_name(r.verdict),
            r.closed_form, r.oracle_value, r.reason};
}

}  // namespace

TEST_CASE("theorem catalogue names are unique and stable") {
    std::set<std::string> names;
    for (int i = 0; i < verify::theorem_count; ++i)
        names.insert(verify::theorem_name(static_cast<TheoremId>(i)));
    CHECK(names.size() == static_cast<std::size_t>(verify::theorem_count));
    CHECK(names.count("clique-theta-e-arith") == 1);
    CHECK(names.count("structure-perfect-k2") == 1);
}

TEST_CASE("check_spec emits one record per theorem in catalogue order") {
    auto records = verify::check_spec(Spec::make(7, {2, 4}), oracle::Budget{});
    REQUIRE(records.size() == static_cast<std::size_t>(verify::theorem_count));
    for (int i = 0; i < verify::theorem_count; ++i)
        CHECK(records[i].theorem == static_cast<TheoremId>(i));
    for (const auto& r : records) CHECK(r.spec_text == "7: 2,4");
}

TEST_CASE("skipped records name the unmet precondition") {
    auto records = verify::check_spec(Spec::make(6, {1, 3}), oracle::Budget{});
    for (const auto& r : records) {
        if (r.verdict != RecordVerdict::skipped_precondition) continue;
        CHECK_FALSE(r.reason.empty());
    }
    // k=2 spec under its threshold: perfect-k2 must skip with the reason
    auto sub = verify::check_spec(Spec::make(4, {2, 3}), oracle::Budget{});
    auto& perfect = sub[static_cast<int>(TheoremId::structure_perfect_k2)];
    CHECK(perfect.verdict == RecordVerdict::skipped_precondition);
    CHECK(perfect.reason.find("t1 + t2") != std::string::npos);
}

TEST_CASE("enumeration order is n ascending then offset bitmask ascending") {
    auto specs = verify::enumerate_specs(3);
    REQUIRE(specs.size() == 3);
    CHECK(specs[0] == Spec::make(3, {1}));
    CHECK(specs[1] == Spec::make(3, {2}));
    CHECK(specs[2] == Spec::make(3, {1, 2}));

    CHECK(verify::enumerate_specs(5, 1).size() == 4);  // k_max = 1
    CHECK(verify::enumerate_specs(5, 0, verify::Family::k2).size() == 6);
    for (const Spec& s : verify::enumerate_specs(8, 0, verify::Family::arithmetic))
        CHECK(s.arithmetic_step().has_value());
    for (const Spec& s : verify::enumerate_specs(8, 0, verify::Family::threshold)) {
        int k = s.offset_count();
        REQUIRE(k >= 2);
        CHECK(s.order() >= s.offsets()[k - 2] + s.offsets()[k - 1]);
    }
    // k=2 threshold members of n=5: {1,2},{1,3},{1,4},{2,3}
    CHECK(verify::enumerate_specs(5, 2, verify::Family::threshold).size() == 4);
}

TEST_CASE("small sweep is clean") {
    SweepConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 7;
    std::size_t seen = 0;
    auto summary = verify::run_sweep(cfg, [&](const Record& r) {
        ++seen;
        REQUIRE(r.verdict != RecordVerdict::mismatch);
    });
    CHECK(summary.mismatches == 0);
    CHECK(summary.records == seen);
    CHECK(summary.specs == (2 - 1) + (4 - 1) + (8 - 1) + (16 - 1) + (32 - 1) + (64 - 1));
    CHECK(summary.records == summary.specs * verify::theorem_count);
}

TEST_CASE("sweep output is independent of the worker count") {
    SweepConfig serial;
    serial.n_min = 2;
    serial.n_max = 6;
    std::vector<Scrubbed> a, b;
    verify::run_sweep(serial, [&](const Record& r) { a.push_back(scrub(r)); });
    SweepConfig wide = serial;
    wide.jobs = 4;
    verify::run_sweep(wide, [&](const Record& r) { b.push_back(scrub(r)); });
    REQUIRE(a.size() == b.size());
    CHECK(a == b);
}

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.n_min = 5;
    cfg.n_max = 4;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.n_max = 20;  // above the default vertex cap
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.jobs = 0;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("record serialization") {
    Record r{"7: 2,4", TheoremId::clique_number, RecordVerdict::match, "omega=3", "omega=3", "",
             0.25};
    auto line = nlohmann::json::parse(verify::record_to_jsonl(r));
    CHECK(line["spec"] == "7: 2,4");
    CHECK(line["theorem"] == "clique-number");
    CHECK(line["verdict"] == "match");

    CHECK(verify::record_to_csv(r).rfind("\"7: 2,4\",clique-number,match,", 0) == 0);
    CHECK(verify::csv_header() == "spec,theorem,verdict,closed_form,oracle,reason,elapsed_ms");
}
