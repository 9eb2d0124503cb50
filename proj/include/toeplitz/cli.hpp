// Command-line front end: analyze | realize | verify | export. Commands write
// to caller-supplied streams and return the process exit code, so tests can
// drive them in-process. Exit codes: 0 success / all match, 1 sweep found a
// mismatch, 2 usage, parse or I/O error.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toeplitz/io.hpp"
#include "toeplitz/verify.hpp"

namespace toeplitz::cli {

namespace detail {

using nlohmann::json;

// Spec argument: either the text line "n: t1,t2,..." or the JSON object shape
// emitted by `export ... json`.
inline Spec parse_spec_argument(const std::string& raw) {
    std::size_t first = raw.find_first_not_of(" \t");
    if (first != std::string::npos && raw[first] == '{') {
        json j;
        try {
            j = json::parse(raw);
        } catch (const json::exception& e) {
            throw ValidationError(std::string("spec json: ") + e.what());
        }
        return io::spec_from_json(j, /*allow_edgeless=*/true);
    }
    return Spec::parse(raw, /*allow_edgeless=*/true);
}

inline int default_cap() {
    if (const char* env = std::getenv("TOEPLITZ_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
    }
    return oracle::Budget{}.max_vertices;
}

inline oracle::Budget budget_for_cap(int cap) {
    oracle::Budget b;
    b.max_vertices = cap;
    b.max_cover_vertices = std::min(b.max_cover_vertices, cap);
    return b;
}

// Perfectness for an arbitrary spec, composed from the closed forms that
// apply (k <= 1 and arithmetic specs are chordal hence perfect; k = 2 and
// k = n-3 have their theorems) with a Berge-oracle fallback.
inline json perfectness_field(const Spec& spec, const oracle::Budget& budget) {
    int k = spec.offset_count();
    if (k <= 1 || spec.arithmetic_step())
        return io::verdict_to_json({true, Provenance::closed_form}, "perfect", "not-perfect");
    if (k == 2)
        return io::verdict_to_json(perfectness_verdict_k2(spec, budget), "perfect", "not-perfect");
    if (k == spec.order() - 3) {
        auto verdict = perfectness_verdict_complement_form(spec);
        if (verdict)
            return io::verdict_to_json({*verdict, Provenance::closed_form}, "perfect",
                                       "not-perfect");
    }
    bool berge = oracle::is_berge(to_dense(spec, budget.max_vertices), budget);
    return io::verdict_to_json({berge, Provenance::oracle}, "perfect", "not-perfect");
}

inline json analyze_report(const Spec& spec, const oracle::Budget& budget) {
    json report;
    report["spec"] = spec.to_text();
    report["n"] = spec.order();
    report["offsets"] = spec.offsets();
    report["degrees"] = degree_profile(spec).values;
    auto reg = regular_degree(spec);
    report["regular"] = reg ? json(*reg) : json(nullptr);
    report["circulant"] = is_circulant(spec);
    auto step = spec.arithmetic_step();
    report["arithmetic_step"] = step ? json(*step) : json(nullptr);
    report["clique_number"] = clique_number(spec);
    report["triangle_free"] = spec.edgeless() ? true : is_triangle_free(spec);
    report["components"] = io::partition_to_json(spec.components());

    try {
        report["chordal"] = io::verdict_to_json(chordality_verdict(spec, budget), "chordal",
                                                "not-chordal");
    } catch (const CapError&) {
        report["chordal"] = "capped";
    }
    try {
        report["interval"] = io::verdict_to_json(interval_verdict(spec, budget), "interval",
                                                 "not-interval");
    } catch (const CapError&) {
        report["interval"] = "capped";
    }
    try {
        report["perfect"] = perfectness_field(spec, budget);
    } catch (const CapError&) {
        report["perfect"] = "capped";
    }

    if (step) {
        report["edge_clique_cover"] = {
            {"count", edge_clique_cover_number_arithmetic(spec)},
            {"cover", io::cover_to_json(edge_clique_cover_arithmetic(spec))}};
        CliqueCover vcover = vertex_clique_cover_arithmetic(spec);
        json vfield{{"cover", io::cover_to_json(vcover)}};
        if (spec.order() > (2 * spec.offset_count() - 1) * *step) {
            vfield["count"] = vertex_clique_cover_number_arithmetic(spec);
        } else {
            vfield["upper_bound"] = vcover.size();
            vfield["tag"] = "bound-only";
        }
        report["vertex_clique_cover"] = vfield;
    }

    if (spec.offset_count() == 2) {
        int t1 = spec.offsets()[0], t2 = spec.offsets()[1];
        if (t2 != 2 * t1 && spec.order() >= t1 + t2)
            report["hole"] = io::hole_to_json(construct_hole_k2(spec));
    }
    return report;
}

inline int cmd_analyze(const std::string& spec_text, int cap, std::ostream& out,
                       std::ostream& err) {
    Spec spec = parse_spec_argument(spec_text);
    (void)err;
    out << analyze_report(spec, budget_for_cap(cap)).dump(2) << '\n';
    return 0;
}

inline int cmd_realize(const std::string& sequence_json, std::ostream& out, std::ostream& err) {
    json j;
    try {
        j = json::parse(sequence_json);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("sequence: ") + e.what());
    }
    if (!j.is_array()) throw ValidationError("sequence: expected a JSON array of integers");
    std::vector<int> seq;
    for (const auto& item : j) {
        if (!item.is_number_integer()) throw ValidationError("sequence: entries must be integers");
        seq.push_back(item.get<int>());
    }
    (void)err;
    std::set<ProfileCondition> pruned;
    auto result = realize_sequence(seq, &pruned);
    if (result) {
        out << result->spec.to_text() << '\n';
        return 0;
    }
    std::string conditions;
    for (auto c : pruned) {
        if (!conditions.empty()) conditions += ",";
        conditions += condition_name(c);
    }
    out << "non-realizable: exhausted all arrangements";
    if (!conditions.empty()) out << " (pruned by conditions: " << conditions << ")";
    out << '\n';
    return 0;
}

inline int cmd_export(const std::string& spec_text, const std::string& format,
                      const std::string& out_path, std::ostream& out, std::ostream& err) {
    Spec spec = parse_spec_argument(spec_text);
    std::string payload;
    if (format == "matrix") {
        payload = io::format_matrix(spec);
    } else if (format == "dot") {
        payload = io::format_dot(spec);
    } else if (format == "json") {
        payload = io::spec_to_json(spec).dump() + "\n";
    } else {
        throw ValidationError("export format must be dot, matrix or json");
    }
    if (out_path.empty()) {
        out << payload;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "cannot open " << out_path << '\n';
            return 2;
        }
        file << payload;
        if (!file.good()) {
            err << "write failed: " << out_path << '\n';
            return 2;
        }
    }
    return 0;
}

struct VerifyOptions {
    int n_min = 2;
    int n_max = 10;
    int k_max = 0;
    std::string family = "all";
    int cap = default_cap();
    int jobs = 1;
    std::string out_path;
    std::string format = "jsonl";
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    verify::SweepConfig cfg;
    cfg.n_min = opt.n_min;
    cfg.n_max = opt.n_max;
    cfg.k_max = opt.k_max;
    if (opt.family == "all") cfg.family = verify::Family::all;
    else if (opt.family == "arithmetic") cfg.family = verify::Family::arithmetic;
    else if (opt.family == "k2") cfg.family = verify::Family::k2;
    else if (opt.family == "threshold") cfg.family = verify::Family::threshold;
    else throw ValidationError("family must be all, arithmetic, k2 or threshold");
    cfg.budget = budget_for_cap(opt.cap);
    cfg.jobs = opt.jobs;
    if (opt.format != "jsonl" && opt.format != "csv")
        throw ValidationError("format must be csv or jsonl");

    std::ofstream file;
    bool to_file = !opt.out_path.empty();
    if (to_file) {
        file.open(opt.out_path, std::ios::binary);
        if (!file) {
            err << "cannot open " << opt.out_path << '\n';
            return 2;
        }
    }
    std::ostream& records = to_file ? static_cast<std::ostream&>(file) : out;
    std::ostream& summary_stream = to_file ? out : err;

    if (opt.format == "csv") records << verify::csv_header() << '\n';
    auto sink = [&](const verify::Record& r) {
        records << (opt.format == "csv" ? verify::record_to_csv(r) : verify::record_to_jsonl(r))
                << '\n';
    };
    verify::Summary summary = verify::run_sweep(cfg, sink);
    if (to_file && !file.good()) {
        err << "write failed: " << opt.out_path << '\n';
        return 2;
    }

    summary_stream << "specs: " << summary.specs << "  records: " << summary.records
                   << "  match: " << summary.matches << "  mismatch: " << summary.mismatches
                   << "  skipped: " << summary.skipped << "  elapsed_ms: " << summary.elapsed_ms
                   << '\n';
    return summary.clean() ? 0 : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toeplitz graph closed forms, oracles and verification sweeps"};
    app.require_subcommand(1);

    std::string spec_text, sequence_json, export_format, export_out;
    int analyze_cap = detail::default_cap();

    auto* analyze = app.add_subcommand("analyze", "Closed-form analysis of one spec");
    analyze->add_option("spec", spec_text, "spec line, e.g. \"5: 1,2,4\"")->required();
    analyze->add_option("--cap", analyze_cap, "oracle vertex cap for fallback verdicts");

    auto* realize = app.add_subcommand("realize", "Realize a nonincreasing degree sequence");
    realize->add_option("sequence", sequence_json, "JSON array, e.g. \"[4,3,3,3,3]\"")->required();

    detail::VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "Closed-form vs oracle sweep");
    verify_cmd->add_option("--n-min", vopt.n_min, "smallest vertex count (default 2)");
    verify_cmd->add_option("--n-max", vopt.n_max, "largest vertex count (default 10)");
    verify_cmd->add_option("--k-max", vopt.k_max, "offset count limit, 0 = none");
    verify_cmd->add_option("--family", vopt.family, "all | arithmetic | k2 | threshold");
    verify_cmd->add_option("--cap", vopt.cap, "oracle vertex cap");
    verify_cmd->add_option("--jobs", vopt.jobs, "worker threads");
    verify_cmd->add_option("--out", vopt.out_path, "record file (default: stdout)");
    verify_cmd->add_option("--format", vopt.format, "csv | jsonl (default jsonl)");

    auto* export_cmd = app.add_subcommand("export", "Write the graph as dot, matrix or json");
    export_cmd->add_option("spec", spec_text, "spec line")->required();
    export_cmd->add_option("format", export_format, "dot | matrix | json")->required();
    export_cmd->add_option("--out", export_out, "output file (default: stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (analyze->parsed()) return detail::cmd_analyze(spec_text, analyze_cap, out, err);
        if (realize->parsed()) return detail::cmd_realize(sequence_json, out, err);
        if (verify_cmd->parsed()) return detail::cmd_verify(vopt, out, err);
        if (export_cmd->parsed()) return detail::cmd_export(spec_text, export_format, export_out, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace toeplitz::cli
