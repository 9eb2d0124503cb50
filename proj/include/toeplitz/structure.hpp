// Chordality / interval / perfectness verdicts. Above the n >= t_{k-1}+t_k
// threshold the chordal question collapses to "offsets arithmetic?"; below it
// (non-arithmetic only) the oracle answers and the verdict says so. Every
// verdict carries its provenance so reports can separate theorem coverage
// from brute-force fallback.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "toeplitz/cliques.hpp"
#include "toeplitz/dense_graph.hpp"
#include "toeplitz/hole.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/spec.hpp"

namespace toeplitz {

enum class Provenance { closed_form, oracle };

struct Verdict {
    bool value;
    Provenance source;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

// n >= t_{k-1} + t_k, the hypothesis of the chordal equivalence theorem.
inline bool chordal_threshold_met(const Spec& spec) {
    int k = spec.offset_count();
    return spec.order() >= spec.offsets()[k - 2] + spec.offsets()[k - 1];
}

}  // namespace detail

inline Verdict chordality_verdict(const Spec& spec, const oracle::Budget& budget = {}) {
    if (spec.offset_count() <= 1) return {true, Provenance::closed_form};  // disjoint paths
    if (spec.arithmetic_step()) return {true, Provenance::closed_form};
    if (detail::chordal_threshold_met(spec)) return {false, Provenance::closed_form};
    return {oracle::is_chordal(to_dense(spec, budget.max_vertices), budget), Provenance::oracle};
}

inline Verdict interval_verdict(const Spec& spec, const oracle::Budget& budget = {}) {
    if (spec.offset_count() <= 1) return {true, Provenance::closed_form};
    if (spec.arithmetic_step()) return {true, Provenance::closed_form};  // no threshold needed
    if (detail::chordal_threshold_met(spec)) return {false, Provenance::closed_form};
    return {oracle::is_interval(to_dense(spec, budget.max_vertices), budget), Provenance::oracle};
}

// The hole the proof of the k=2 lemma walks: from each current path start,
// jump +t2, then descend the step-t1 path back to its start; after t1/gcd
// sections the walk closes into a chordless cycle of length (t1+t2)/gcd.
inline Hole construct_hole_k2(const Spec& spec) {
    if (spec.offset_count() != 2)
        throw PreconditionError("construct_hole_k2: spec must have exactly two offsets");
    int t1 = spec.offsets()[0], t2 = spec.offsets()[1];
    if (t2 == 2 * t1)
        throw PreconditionError("construct_hole_k2: t2 = 2*t1 is the chordal case");
    if (spec.order() < t1 + t2)
        throw PreconditionError("construct_hole_k2: requires n >= t1 + t2");

    int d = std::gcd(t1, t2);
    int sections = t1 / d;
    Hole hole;
    int cur = 1;
    for (int j = 0; j < sections; ++j) {
        hole.vertices.push_back(cur);
        int v = cur + t2;
        int next_start = (v - 1) % t1 + 1;
        for (int w = v; w > next_start; w -= t1) hole.vertices.push_back(w);
        cur = next_start;
    }
    return hole;  // length (t1+t2)/d, closing edge cur(=1) .. back of list
}

struct IntervalModel {
    // intervals[v-1] = [lo, hi] assigned to vertex v; 64-bit because the
    // per-component shift grows like n^2/t
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
};

// Interval model for an arithmetic spec: the s-th vertex of each residue
// class gets [s, s+k], components separated by a stride of n+k so their
// ranges cannot touch.
inline IntervalModel interval_model(const Spec& spec) {
    int t = detail::require_arithmetic(spec, "interval_model");
    int k = spec.offset_count();
    int n = spec.order();
    IntervalModel model;
    model.intervals.resize(n);
    std::int64_t stride = std::int64_t(n) + k;
    for (int i = 1; i <= t; ++i) {
        std::int64_t shift = (i - 1) * stride;
        std::int64_t s = 0;
        for (int v = i; v <= n; v += t) {
            ++s;
            model.intervals[v - 1] = {shift + s, shift + s + k};
        }
    }
    return model;
}

// intersection <=> adjacency, pairwise.
inline bool model_is_valid(const IntervalModel& model, const Spec& spec) {
    int n = spec.order();
    if (static_cast<int>(model.intervals.size()) != n) return false;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            auto [alo, ahi] = model.intervals[u - 1];
            auto [blo, bhi] = model.intervals[v - 1];
            bool meet = alo <= bhi && blo <= ahi;
            if (meet != spec.adjacent(u, v)) return false;
        }
    return true;
}

// k=2 perfectness: with n >= t1+t2, perfect <=> (t1+t2)/gcd even or = 3.
// The same condition answers odd-hole-freeness and weak perfectness. Below
// the threshold the Berge oracle decides.
inline Verdict perfectness_verdict_k2(const Spec& spec, const oracle::Budget& budget = {}) {
    if (spec.offset_count() != 2)
        throw PreconditionError("perfectness_verdict_k2: spec must have exactly two offsets");
    int t1 = spec.offsets()[0], t2 = spec.offsets()[1];
    if (spec.order() >= t1 + t2) {
        int quotient = (t1 + t2) / std::gcd(t1, t2);
        return {quotient % 2 == 0 || quotient == 3, Provenance::closed_form};
    }
    return {oracle::is_berge(to_dense(spec, budget.max_vertices), budget), Provenance::oracle};
}

// Items (ii) and (iv) of the same theorem: for two offsets, odd-hole-freeness
// and weak perfectness are decided by the identical condition.
inline Verdict odd_hole_free_verdict_k2(const Spec& spec, const oracle::Budget& budget = {}) {
    if (spec.offset_count() != 2)
        throw PreconditionError("odd_hole_free_verdict_k2: spec must have exactly two offsets");
    int t1 = spec.offsets()[0], t2 = spec.offsets()[1];
    if (spec.order() >= t1 + t2) return perfectness_verdict_k2(spec, budget);
    return {!oracle::find_hole(to_dense(spec, budget.max_vertices), oracle::HoleParity::odd,
                               budget),
            Provenance::oracle};
}

inline Verdict weakly_perfect_verdict_k2(const Spec& spec, const oracle::Budget& budget = {}) {
    if (spec.offset_count() != 2)
        throw PreconditionError("weakly_perfect_verdict_k2: spec must have exactly two offsets");
    int t1 = spec.offsets()[0], t2 = spec.offsets()[1];
    if (spec.order() >= t1 + t2) return perfectness_verdict_k2(spec, budget);
    DenseGraph g = to_dense(spec, budget.max_vertices);
    return {oracle::max_clique(g, budget).size == oracle::chromatic_number(g, budget),
            Provenance::oracle};
}

// Complement-side corollary for k = n-3: the two missing offsets {s1, s2}
// define the complement G_n<s1,s2>; when s1+s2 <= n its perfectness condition
// transfers. nullopt when s1+s2 > n (hypothesis fails).
inline std::optional<bool> perfectness_verdict_complement_form(const Spec& spec) {
    if (spec.offset_count() != spec.order() - 3)
        throw PreconditionError("perfectness_verdict_complement_form: requires k = n-3");
    Spec comp = spec.complement();
    int s1 = comp.offsets()[0], s2 = comp.offsets()[1];
    if (s1 + s2 > spec.order()) return std::nullopt;
    int quotient = (s1 + s2) / std::gcd(s1, s2);
    return quotient % 2 == 0 || quotient == 3;
}

}  // namespace toeplitz
