// Serialization: the spec text line, the matrix/dot/json export formats, and
// the JSON shapes for covers, holes, verdicts and realizability reports.
#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "toeplitz/cliques.hpp"
#include "toeplitz/degrees.hpp"
#include "toeplitz/hole.hpp"
#include "toeplitz/spec.hpp"
#include "toeplitz/structure.hpp"

namespace toeplitz::io {

using nlohmann::json;

// n lines of space-separated 0/1; row i is vertex i's adjacency row.
inline std::string format_matrix(const Spec& spec) {
    std::ostringstream os;
    for (int i = 1; i <= spec.order(); ++i) {
        for (int j = 1; j <= spec.order(); ++j) {
            if (j > 1) os << ' ';
            os << (spec.adjacent(i, j) ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

inline std::string format_dot(const Spec& spec) {
    std::ostringstream os;
    os << "graph toeplitz {\n";
    for (int v = 1; v <= spec.order(); ++v) os << "  " << v << ";\n";
    for (int i = 1; i <= spec.order(); ++i)
        for (int j = i + 1; j <= spec.order(); ++j)
            if (spec.adjacent(i, j)) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

inline json spec_to_json(const Spec& spec) {
    json edges = json::array();
    for (int i = 1; i <= spec.order(); ++i)
        for (int j = i + 1; j <= spec.order(); ++j)
            if (spec.adjacent(i, j)) edges.push_back({i, j});
    return json{{"n", spec.order()}, {"offsets", spec.offsets()}, {"edges", edges}};
}

inline Spec spec_from_json(const json& j, bool allow_edgeless = false) {
    if (!j.is_object() || !j.contains("n") || !j.contains("offsets"))
        throw ValidationError("spec json: need object with \"n\" and \"offsets\"");
    std::vector<int> offsets = j.at("offsets").get<std::vector<int>>();
    if (offsets.empty() && !allow_edgeless)
        throw ValidationError("spec json: empty offset list");
    return Spec::make_allow_edgeless(j.at("n").get<int>(), std::move(offsets));
}

inline json cover_to_json(const CliqueCover& cover) {
    return json{{"kind", cover.kind == CoverKind::edge ? "edge" : "vertex"},
                {"cliques", cover.cliques}};
}

inline json hole_to_json(const Hole& hole) { return json(hole.vertices); }

inline json verdict_to_json(const Verdict& v, const char* positive, const char* negative) {
    return json{{"verdict", v.value ? positive : negative},
                {"source", v.source == Provenance::closed_form ? "closed-form" : "oracle"}};
}

inline json report_to_json(const RealizabilityReport& report) {
    json j{{"realizable", report.realizable}, {"s", report.s}};
    j["offsets"] = report.realizable ? json(report.offsets) : json(nullptr);
    j["failed_condition"] =
        report.failed_condition ? json(condition_name(*report.failed_condition)) : json(nullptr);
    j["chosen_b3_star"] = report.chosen_b3_star;
    return j;
}

inline json partition_to_json(const ComponentPartition& part) { return json(part.blocks); }

inline json interval_model_to_json(const IntervalModel& model) {
    json j = json::array();
    for (auto [lo, hi] : model.intervals) j.push_back({lo, hi});
    return j;
}

}  // namespace toeplitz::io
