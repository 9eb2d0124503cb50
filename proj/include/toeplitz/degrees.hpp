// Degree machinery: position-indexed profiles via the offset-counting
// formula, the +-1 step trichotomy, the palindrome/step/parity realizability
// conditions with the explicit offset-set construction, and the
// regular <=> circulant equivalence.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toeplitz/spec.hpp"

namespace toeplitz {

struct DegreeProfile {
    std::vector<int> values;  // values[i-1] = deg(i)

    static DegreeProfile make(std::vector<int> values) {
        if (values.empty()) throw ValidationError("degree profile must be nonempty");
        int n = static_cast<int>(values.size());
        for (int v : values)
            if (v < 0 || v >= n) throw ValidationError("degree profile entry outside [0, n-1]");
        return DegreeProfile{std::move(values)};
    }

    int order() const { return static_cast<int>(values.size()); }

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline DegreeProfile degree_profile(const Spec& spec) {
    std::vector<int> vals;
    vals.reserve(spec.order());
    for (int i = 1; i <= spec.order(); ++i) vals.push_back(spec.degree(i));
    return DegreeProfile{std::move(vals)};
}

enum class StepClass { equal, up, down };

// deg(j+1) vs deg(j) from offset membership alone: up iff j in B and n-j not,
// down iff the reverse, equal iff both or neither.
inline StepClass profile_step_classification(const Spec& spec, int j) {
    if (j < 1 || j > spec.order() - 1)
        throw ValidationError("profile_step_classification: position outside [1, n-1]");
    bool low = spec.has_offset(j);
    bool high = spec.has_offset(spec.order() - j);
    if (low == high) return StepClass::equal;
    return low ? StepClass::up : StepClass::down;
}

// The four realizability conditions, named as they are checked.
enum class ProfileCondition { step, palindrome, range, parity };

inline const char* condition_name(ProfileCondition c) {
    switch (c) {
        case ProfileCondition::step: return "a";
        case ProfileCondition::palindrome: return "b";
        case ProfileCondition::range: return "c";
        case ProfileCondition::parity: return "d";
    }
    return "?";
}

struct RealizabilityReport {
    bool realizable = false;
    int s = 0;  // count of nonzero steps among positions 1..floor((n-1)/2)
    std::vector<int> offsets;         // witness, when realizable
    std::vector<int> chosen_b3_star;  // the equal-step positions promoted to offsets
    std::optional<ProfileCondition> failed_condition;
};

// Conditions only, no witness: steps stay within +-1, the profile is a
// palindrome, s <= d(1) <= n-1-s, and d(1) has the parity of s when n is odd.
inline RealizabilityReport check_profile(const DegreeProfile& profile) {
    const auto& d = profile.values;
    int n = profile.order();
    int m = (n - 1) / 2;

    RealizabilityReport report;
    for (int i = 0; i + 1 < n; ++i)
        if (std::abs(d[i + 1] - d[i]) > 1) {
            report.failed_condition = ProfileCondition::step;
            return report;
        }
    for (int i = 0; i < n; ++i)
        if (d[i] != d[n - 1 - i]) {
            report.failed_condition = ProfileCondition::palindrome;
            return report;
        }
    int s = 0;
    for (int i = 1; i <= m; ++i)
        if (d[i] != d[i - 1]) ++s;
    report.s = s;
    if (d[0] < s || d[0] > n - 1 - s) {
        report.failed_condition = ProfileCondition::range;
        return report;
    }
    if (n % 2 == 1 && (d[0] - s) % 2 != 0) {
        report.failed_condition = ProfileCondition::parity;
        return report;
    }
    report.realizable = true;
    return report;
}

namespace detail {

// Offset construction from a profile that passed the checks: up-steps become
// low offsets, down-steps become mirrored high offsets, and floor((d1-s)/2)
// of the equal-step positions are promoted to offset pairs {i, n-i}; a lone
// leftover becomes n/2. We take the smallest equal-step positions so the
// witness is deterministic.
inline std::pair<std::vector<int>, std::vector<int>> construct_offsets(
    const std::vector<int>& d, int n) {
    int m = (n - 1) / 2;
    std::vector<int> b3;
    std::set<int> offsets;
    int s = 0;
    for (int i = 1; i <= m; ++i) {
        int step = d[i] - d[i - 1];
        if (step == 1) {
            offsets.insert(i);
            ++s;
        } else if (step == -1) {
            offsets.insert(n - i);
            ++s;
        } else {
            b3.push_back(i);
        }
    }
    int promote = (d[0] - s) / 2;
    std::vector<int> b3_star(b3.begin(), b3.begin() + promote);
    for (int i : b3_star) {
        offsets.insert(i);
        offsets.insert(n - i);
    }
    if ((d[0] - s) % 2 != 0) offsets.insert(n / 2);
    return {std::vector<int>(offsets.begin(), offsets.end()), std::move(b3_star)};
}

}  // namespace detail

// Realize the profile as written (position i keeps degree d(i)), or throw
// naming the first failed condition.
inline Spec realize_profile(const DegreeProfile& profile) {
    RealizabilityReport report = check_profile(profile);
    if (!report.realizable)
        throw PreconditionError(std::string("realize_profile: condition (") +
                                condition_name(*report.failed_condition) + ") failed");
    auto [offsets, b3_star] = detail::construct_offsets(profile.values, profile.order());
    return Spec::make_allow_edgeless(profile.order(), std::move(offsets));
}

// check_profile plus the witness, for reporting.
inline RealizabilityReport realizability_report(const DegreeProfile& profile) {
    RealizabilityReport report = check_profile(profile);
    if (report.realizable) {
        auto [offsets, b3_star] = detail::construct_offsets(profile.values, profile.order());
        report.offsets = std::move(offsets);
        report.chosen_b3_star = std::move(b3_star);
    }
    return report;
}

struct SequenceRealization {
    std::vector<int> arrangement;  // the profile the spec realizes
    Spec spec;
    std::set<ProfileCondition> pruned_by;  // conditions that cut branches
};

// Search result when no arrangement works: the certificate is exhaustion,
// plus which conditions did the pruning.
struct SequenceExhausted {
    std::set<ProfileCondition> pruned_by;
};

namespace detail {

struct ArrangementSearch {
    int n;
    std::map<int, int> remaining;  // value -> count
    std::vector<int> half;         // positions 1..ceil(n/2)
    std::set<ProfileCondition> pruned;

    bool search() {
        int half_len = (n + 1) / 2;
        if (static_cast<int>(half.size()) == half_len) return finish();
        bool center = n % 2 == 1 && static_cast<int>(half.size()) == half_len - 1;
        int need = center ? 1 : 2;
        // values by descending multiplicity, ties by descending value
        std::vector<std::pair<int, int>> order;
        for (auto [value, count] : remaining)
            if (count >= need) order.emplace_back(count, value);
        std::sort(order.begin(), order.end(), std::greater<>());
        for (auto [count, value] : order) {
            if (!half.empty() && std::abs(value - half.back()) > 1) {
                pruned.insert(ProfileCondition::step);
                continue;
            }
            half.push_back(value);
            remaining[value] -= need;
            if (search()) return true;
            remaining[value] += need;
            half.pop_back();
        }
        return false;
    }

    bool finish() {
        // Everything must have been consumed (palindrome feasibility).
        for (auto [value, count] : remaining)
            if (count != 0) {
                pruned.insert(ProfileCondition::palindrome);
                return false;
            }
        int m = (n - 1) / 2;
        int s = 0;
        for (int i = 1; i <= m; ++i)
            if (half[i] != half[i - 1]) ++s;
        if (half[0] < s || half[0] > n - 1 - s) {
            pruned.insert(ProfileCondition::range);
            return false;
        }
        if (n % 2 == 1 && (half[0] - s) % 2 != 0) {
            pruned.insert(ProfileCondition::parity);
            return false;
        }
        return true;
    }

    std::vector<int> arrangement() const {
        std::vector<int> full(half.begin(), half.end());
        for (int i = n / 2 - 1; i >= 0; --i) full.push_back(half[i]);
        return full;
    }
};

}  // namespace detail

// Backtracking over palindromic arrangements of the multiset; positions fill
// ascending, candidate values in descending multiplicity. Exhaustion is a
// valid non-realizability certificate because the realizability theorem is an
// equivalence.
inline std::optional<SequenceRealization> realize_sequence(const std::vector<int>& seq,
                                                           std::set<ProfileCondition>* pruned_by = nullptr) {
    if (seq.empty()) throw ValidationError("realize_sequence: empty sequence");
    if (!std::is_sorted(seq.begin(), seq.end(), std::greater<>()))
        throw ValidationError("realize_sequence: sequence must be nonincreasing");
    int n = static_cast<int>(seq.size());
    for (int v : seq)
        if (v < 0 || v >= n) throw ValidationError("realize_sequence: entry outside [0, n-1]");

    detail::ArrangementSearch search;
    search.n = n;
    for (int v : seq) ++search.remaining[v];
    bool found = search.search();
    if (pruned_by) *pruned_by = search.pruned;
    if (!found) return std::nullopt;
    auto arrangement = search.arrangement();
    Spec spec = realize_profile(DegreeProfile::make(arrangement));
    return SequenceRealization{std::move(arrangement), std::move(spec), search.pruned};
}

// B(G) symmetric under t -> n-t. The empty offset set is vacuously symmetric
// (the edgeless graph's adjacency matrix is the zero circulant).
inline bool is_circulant(const Spec& spec) {
    for (int t : spec.offsets())
        if (!spec.has_offset(spec.order() - t)) return false;
    return true;
}

// The common degree when the profile is constant; empty otherwise. Present
// exactly when is_circulant holds.
inline std::optional<int> regular_degree(const Spec& spec) {
    int d = spec.degree(1);
    for (int i = 2; i <= spec.order(); ++i)
        if (spec.degree(i) != d) return std::nullopt;
    return d;
}

}  // namespace toeplitz
