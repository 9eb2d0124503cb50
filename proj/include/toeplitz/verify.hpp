// The theorem catalogue: one entry per library invariant, each pairing a
// closed-form result with an independent oracle result. The sweep enumerates
// offset sets (n ascending, offset bitmask ascending), runs every applicable
// pair per spec, and streams one record per (spec, theorem). Output order is
// fixed regardless of worker count.
#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "toeplitz/cliques.hpp"
#include "toeplitz/degrees.hpp"
#include "toeplitz/dense_graph.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/spec.hpp"
#include "toeplitz/structure.hpp"

namespace toeplitz::verify {

enum class TheoremId : int {
    core_degree_formula,
    core_ell_step,
    core_degree_symmetry,
    core_center_parity,
    core_degree_lipschitz,
    core_components,
    core_complement_dense,
    clique_number,
    clique_kq_free,
    clique_theta_e_arith,
    clique_theta_e_monotone,
    clique_theta_v_arith,
    clique_cover_validity,
    structure_chordal_equivalence,
    structure_arithmetic_interval,
    structure_hole_k2,
    structure_perfect_k2,
    structure_perfect_complement,
    degree_step_classification,
    degree_regular_circulant,
    degree_profile_roundtrip,
    degree_realize_sequence,
    degree_circulant_parity,
    oracle_omega_le_chi,
    oracle_chordal_hole_agree,
    oracle_berge_direct,
    oracle_thetav_direct,
    count_
};

inline constexpr int theorem_count = static_cast<int>(TheoremId::count_);

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::core_degree_formula: return "core-degree-formula";
        case TheoremId::core_ell_step: return "core-ell-step";
        case TheoremId::core_degree_symmetry: return "core-degree-symmetry";
        case TheoremId::core_center_parity: return "core-center-parity";
        case TheoremId::core_degree_lipschitz: return "core-degree-lipschitz";
        case TheoremId::core_components: return "core-components";
        case TheoremId::core_complement_dense: return "core-complement-dense";
        case TheoremId::clique_number: return "clique-number";
        case TheoremId::clique_kq_free: return "clique-kq-free";
        case TheoremId::clique_theta_e_arith: return "clique-theta-e-arith";
        case TheoremId::clique_theta_e_monotone: return "clique-theta-e-monotone";
        case TheoremId::clique_theta_v_arith: return "clique-theta-v-arith";
        case TheoremId::clique_cover_validity: return "clique-cover-validity";
        case TheoremId::structure_chordal_equivalence: return "structure-chordal-equivalence";
        case TheoremId::structure_arithmetic_interval: return "structure-arithmetic-interval";
        case TheoremId::structure_hole_k2: return "structure-hole-k2";
        case TheoremId::structure_perfect_k2: return "structure-perfect-k2";
        case TheoremId::structure_perfect_complement: return "structure-perfect-complement";
        case TheoremId::degree_step_classification: return "degree-step-classification";
        case TheoremId::degree_regular_circulant: return "degree-regular-circulant";
        case TheoremId::degree_profile_roundtrip: return "degree-profile-roundtrip";
        case TheoremId::degree_realize_sequence: return "degree-realize-sequence";
        case TheoremId::degree_circulant_parity: return "degree-circulant-parity";
        case TheoremId::oracle_omega_le_chi: return "oracle-omega-le-chi";
        case TheoremId::oracle_chordal_hole_agree: return "oracle-chordal-hole-agree";
        case TheoremId::oracle_berge_direct: return "oracle-berge-direct";
        case TheoremId::oracle_thetav_direct: return "oracle-thetav-direct";
        case TheoremId::count_: break;
    }
    return "?";
}

enum class RecordVerdict { match, mismatch, skipped_precondition };

inline const char* verdict_name(RecordVerdict v) {
    switch (v) {
        case RecordVerdict::match: return "match";
        case RecordVerdict::mismatch: return "mismatch";
        case RecordVerdict::skipped_precondition: return "skipped-precondition";
    }
    return "?";
}

struct Record {
    std::string spec_text;
    TheoremId theorem;
    RecordVerdict verdict;
    std::string closed_form;
    std::string oracle_value;
    std::string reason;  // unmet precondition, for skips
    double elapsed_ms = 0.0;
};

// threshold = k >= 2 specs meeting the chordal-theorem hypothesis
// n >= t_{k-1} + t_k.
enum class Family { all, arithmetic, k2, threshold };

struct SweepConfig {
    int n_min = 2;
    int n_max = 10;
    int k_max = 0;  // 0 = no constraint
    Family family = Family::all;
    oracle::Budget budget;
    int jobs = 1;

    void validate() const {
        budget.validate();
        if (n_min < 1 || n_min > n_max) throw ValidationError("sweep: empty n range");
        if (n_max > budget.max_vertices)
            throw ValidationError("sweep: n_max exceeds oracle vertex cap");
        if (jobs < 1) throw ValidationError("sweep: jobs must be >= 1");
    }
};

namespace detail {

inline std::string ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

inline std::string blocks(const std::vector<std::vector<int>>& bs) {
    std::ostringstream os;
    for (const auto& b : bs) os << '[' << ints(b) << ']';
    return os.str();
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string graph_fingerprint(const DenseGraph& g) {
    std::ostringstream os;
    os << std::hex;
    for (int v = 1; v <= g.order(); ++v) os << g.neighbor_mask(v) << '.';
    return os.str();
}

struct Outcome {
    RecordVerdict verdict;
    std::string closed_form, oracle_value, reason;

    static Outcome compare(std::string closed, std::string oracle, bool match) {
        return {match ? RecordVerdict::match : RecordVerdict::mismatch, std::move(closed),
                std::move(oracle), {}};
    }
    static Outcome skip(std::string reason) {
        return {RecordVerdict::skipped_precondition, {}, {}, std::move(reason)};
    }
};

struct Ctx {
    const Spec& spec;
    const DenseGraph& dense;
    const oracle::Budget& budget;

    int n() const { return spec.order(); }
    int k() const { return spec.offset_count(); }
};

inline std::vector<int> dense_profile(const DenseGraph& g) {
    std::vector<int> d;
    for (int v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
    return d;
}

inline Outcome check_degree_formula(const Ctx& c) {
    auto formula = degree_profile(c.spec).values;
    auto direct = dense_profile(c.dense);
    return Outcome::compare(ints(formula), ints(direct), formula == direct);
}

inline Outcome check_ell_step(const Ctx& c) {
    std::string steps, members;
    bool ok = true;
    for (int j = 1; j <= c.n() - 1; ++j) {
        int diff = c.spec.ell(j + 1) - c.spec.ell(j);
        bool in_b = c.spec.has_offset(j);
        steps += std::to_string(diff);
        members += in_b ? '1' : '0';
        if (diff < 0 || diff > 1 || (diff == 1) != in_b) ok = false;
    }
    return Outcome::compare(steps, members, ok);
}

inline Outcome check_degree_symmetry(const Ctx& c) {
    bool formula_ok = true, dense_ok = true;
    for (int j = 1; j <= c.n(); ++j) {
        if (c.spec.degree(j) != c.spec.degree(c.n() - j + 1)) formula_ok = false;
        if (c.dense.degree(j) != c.dense.degree(c.n() - j + 1)) dense_ok = false;
    }
    return Outcome::compare(bool_str(formula_ok), bool_str(dense_ok), formula_ok && dense_ok);
}

inline Outcome check_center_parity(const Ctx& c) {
    if (c.n() % 2 == 0) return Outcome::skip("n is even");
    int center = (c.n() + 1) / 2;
    int f = c.spec.degree(center), d = c.dense.degree(center);
    return Outcome::compare("deg=" + std::to_string(f), "deg=" + std::to_string(d),
                            f % 2 == 0 && d % 2 == 0 && f == d);
}

inline Outcome check_degree_lipschitz(const Ctx& c) {
    int worst_f = 0, worst_d = 0;
    for (int j = 1; j <= c.n() - 1; ++j) {
        worst_f = std::max(worst_f, std::abs(c.spec.degree(j + 1) - c.spec.degree(j)));
        worst_d = std::max(worst_d, std::abs(c.dense.degree(j + 1) - c.dense.degree(j)));
    }
    return Outcome::compare("max-step=" + std::to_string(worst_f),
                            "max-step=" + std::to_string(worst_d), worst_f <= 1 && worst_d <= 1);
}

inline Outcome check_components(const Ctx& c) {
    auto part = c.spec.components().blocks;
    auto dense_part = c.dense.bfs_components();
    bool ok = part == dense_part;
    std::string note;
    if (auto t = c.spec.arithmetic_step()) {
        // residue classes mod t, block i of size floor((n-i)/t)+1
        std::vector<std::vector<int>> residue(*t);
        for (int v = 1; v <= c.n(); ++v) residue[(v - 1) % *t].push_back(v);
        for (int i = 1; i <= *t; ++i)
            if (static_cast<int>(residue[i - 1].size()) != (c.n() - i) / *t + 1) ok = false;
        if (part != residue) ok = false;
        note = ",residue-classes=" + bool_str(part == residue);
    }
    return Outcome::compare(blocks(part) + note, blocks(dense_part), ok);
}

inline Outcome check_complement_dense(const Ctx& c) {
    Spec comp = c.spec.complement();
    DenseGraph lhs = to_dense(comp, c.budget.max_vertices);
    DenseGraph rhs = c.dense.complement();
    bool involution = comp.complement() == c.spec ||
                      (c.spec.edgeless() && comp.complement().offsets().empty());
    return Outcome::compare(graph_fingerprint(lhs) + ",involution=" + bool_str(involution),
                            graph_fingerprint(rhs), lhs == rhs && involution);
}

inline Outcome check_clique_number(const Ctx& c) {
    int closed = clique_number(c.spec);
    int omega = oracle::max_clique(c.dense, c.budget).size;
    bool arithmetic = c.spec.arithmetic_step().has_value();
    bool ok = closed == omega && closed <= c.k() + 1 && (closed == c.k() + 1) == arithmetic;
    return Outcome::compare("omega=" + std::to_string(closed) +
                                ",arith=" + bool_str(arithmetic),
                            "omega=" + std::to_string(omega), ok);
}

inline Outcome check_kq_free(const Ctx& c) {
    int omega = oracle::max_clique(c.dense, c.budget).size;
    std::string closed, oracle_s;
    bool ok = true;
    for (int q = 3; q <= c.k() + 2; ++q) {
        bool free_closed = is_kq_free(c.spec, q);
        bool free_oracle = omega < q;
        closed += (q > 3 ? "," : "") + std::to_string(q) + ":" + bool_str(free_closed);
        oracle_s += (q > 3 ? "," : "") + std::to_string(q) + ":" + bool_str(free_oracle);
        if (free_closed != free_oracle) ok = false;
    }
    return Outcome::compare(closed, oracle_s, ok);
}

inline Outcome check_theta_e_arith(const Ctx& c) {
    if (!c.spec.arithmetic_step()) return Outcome::skip("offsets not arithmetic");
    if (c.n() > c.budget.max_cover_vertices) return Outcome::skip("n exceeds cover cap");
    int closed = edge_clique_cover_number_arithmetic(c.spec);
    CliqueCover cover = edge_clique_cover_arithmetic(c.spec);
    int exact = oracle::edge_clique_cover_number(c.dense, c.budget);
    bool ok = closed == exact && cover.size() == closed && cover_is_valid(cover, c.dense);
    return Outcome::compare("theta_e=" + std::to_string(closed) +
                                ",cover-size=" + std::to_string(cover.size()),
                            "theta_e=" + std::to_string(exact), ok);
}

inline Outcome check_theta_e_monotone(const Ctx& c) {
    int t = c.spec.offsets().front();
    if (c.spec.offsets().back() != c.k() * t)
        return Outcome::skip("offsets lack s_k = k*s_1");
    if (c.n() > c.budget.max_cover_vertices) return Outcome::skip("n exceeds cover cap");
    std::vector<int> arith;
    for (int i = 1; i <= c.k(); ++i) arith.push_back(i * t);
    int base = edge_clique_cover_number_arithmetic(Spec::make(c.n(), arith));
    int mine = oracle::edge_clique_cover_number(c.dense, c.budget);
    return Outcome::compare("theta_e(arithmetic)=" + std::to_string(base),
                            "theta_e(spec)=" + std::to_string(mine), mine >= base);
}

inline Outcome check_theta_v_arith(const Ctx& c) {
    auto t = c.spec.arithmetic_step();
    if (!t) return Outcome::skip("offsets not arithmetic");
    if (c.n() <= (2 * c.k() - 1) * *t) return Outcome::skip("n <= (2k-1)t");
    int closed = vertex_clique_cover_number_arithmetic(c.spec);
    int exact = oracle::vertex_clique_cover_number(c.dense, c.budget);
    return Outcome::compare(std::to_string(closed), std::to_string(exact), closed == exact);
}

inline Outcome check_cover_validity(const Ctx& c) {
    auto t = c.spec.arithmetic_step();
    if (!t) return Outcome::skip("offsets not arithmetic");
    CliqueCover edge = edge_clique_cover_arithmetic(c.spec);
    CliqueCover vertex = vertex_clique_cover_arithmetic(c.spec);
    bool edge_ok = cover_is_valid(edge, c.dense);
    bool vertex_ok = cover_is_valid(vertex, c.dense);
    bool sizes_ok = edge.size() == edge_clique_cover_number_arithmetic(c.spec);
    if (c.n() > (2 * c.k() - 1) * *t)
        sizes_ok = sizes_ok && vertex.size() == vertex_clique_cover_number_arithmetic(c.spec);
    return Outcome::compare("edge-size=" + std::to_string(edge.size()) +
                                ",vertex-size=" + std::to_string(vertex.size()),
                            "edge-valid=" + bool_str(edge_ok) + ",vertex-valid=" + bool_str(vertex_ok),
                            edge_ok && vertex_ok && sizes_ok);
}

inline bool structure_threshold(const Spec& spec) {
    int k = spec.offset_count();
    return k >= 2 && spec.order() >= spec.offsets()[k - 2] + spec.offsets()[k - 1];
}

inline Outcome check_chordal_equivalence(const Ctx& c) {
    if (c.k() < 2) return Outcome::skip("k < 2");
    if (!structure_threshold(c.spec)) return Outcome::skip("n < t_{k-1} + t_k");
    bool chordal_cf = chordality_verdict(c.spec, c.budget).value;
    bool interval_cf = interval_verdict(c.spec, c.budget).value;
    bool arithmetic = c.spec.arithmetic_step().has_value();
    bool omega_eq = clique_number(c.spec) == c.k() + 1;
    bool chordal_or = oracle::is_chordal(c.dense, c.budget);
    bool interval_or = oracle::is_interval(c.dense, c.budget);
    bool omega_or = oracle::max_clique(c.dense, c.budget).size == c.k() + 1;
    bool all_equal = chordal_cf == interval_cf && chordal_cf == arithmetic &&
                     chordal_cf == omega_eq && chordal_cf == chordal_or &&
                     chordal_cf == interval_or && chordal_cf == omega_or;
    return Outcome::compare("chordal=" + bool_str(chordal_cf) + ",interval=" + bool_str(interval_cf) +
                                ",arith=" + bool_str(arithmetic) + ",omega-eq=" + bool_str(omega_eq),
                            "chordal=" + bool_str(chordal_or) + ",interval=" + bool_str(interval_or) +
                                ",omega-eq=" + bool_str(omega_or),
                            all_equal);
}

inline Outcome check_arithmetic_interval(const Ctx& c) {
    if (!c.spec.arithmetic_step()) return Outcome::skip("offsets not arithmetic");
    IntervalModel model = interval_model(c.spec);
    bool model_ok = model_is_valid(model, c.spec);
    bool chordal = oracle::is_chordal(c.dense, c.budget);
    bool interval = oracle::is_interval(c.dense, c.budget);
    return Outcome::compare("interval-model-valid=" + bool_str(model_ok),
                            "chordal=" + bool_str(chordal) + ",interval=" + bool_str(interval),
                            model_ok && chordal && interval);
}

inline Outcome check_hole_k2(const Ctx& c) {
    if (c.k() != 2) return Outcome::skip("k != 2");
    int t1 = c.spec.offsets()[0], t2 = c.spec.offsets()[1];
    if (t2 == 2 * t1) return Outcome::skip("t2 = 2*t1");
    if (c.n() < t1 + t2) return Outcome::skip("n < t1 + t2");
    Hole hole = construct_hole_k2(c.spec);
    int expected = (t1 + t2) / std::gcd(t1, t2);
    bool valid = is_valid_hole(hole, c.dense);
    return Outcome::compare("hole=[" + ints(hole.vertices) + "],len=" + std::to_string(hole.length()),
                            "chordless=" + bool_str(valid) + ",expected-len=" + std::to_string(expected),
                            valid && hole.length() == expected);
}

inline Outcome check_perfect_k2(const Ctx& c) {
    if (c.k() != 2) return Outcome::skip("k != 2");
    int t1 = c.spec.offsets()[0], t2 = c.spec.offsets()[1];
    if (c.n() < t1 + t2) return Outcome::skip("n < t1 + t2 (verdict is oracle-sourced)");
    bool closed = perfectness_verdict_k2(c.spec, c.budget).value;
    bool berge = oracle::is_berge(c.dense, c.budget);
    bool odd_hole_free = !oracle::find_hole(c.dense, oracle::HoleParity::odd, c.budget);
    bool weakly = oracle::max_clique(c.dense, c.budget).size ==
                  oracle::chromatic_number(c.dense, c.budget);
    bool ok = closed == berge && closed == odd_hole_free && closed == weakly;
    return Outcome::compare("perfect=" + bool_str(closed),
                            "berge=" + bool_str(berge) + ",odd-hole-free=" + bool_str(odd_hole_free) +
                                ",weakly-perfect=" + bool_str(weakly),
                            ok);
}

inline Outcome check_perfect_complement(const Ctx& c) {
    if (c.k() != c.n() - 3) return Outcome::skip("k != n-3");
    auto closed = perfectness_verdict_complement_form(c.spec);
    if (!closed) return Outcome::skip("s1 + s2 > n");
    bool berge = oracle::is_berge(c.dense, c.budget);
    return Outcome::compare("perfect=" + bool_str(*closed), "berge=" + bool_str(berge),
                            *closed == berge);
}

inline Outcome check_step_classification(const Ctx& c) {
    std::string closed, oracle_s;
    bool ok = true;
    auto d = dense_profile(c.dense);
    for (int j = 1; j <= c.n() - 1; ++j) {
        StepClass cls = profile_step_classification(c.spec, j);
        int diff = d[j] - d[j - 1];
        char want = diff == 0 ? '=' : (diff == 1 ? '+' : (diff == -1 ? '-' : '!'));
        char got = cls == StepClass::equal ? '=' : (cls == StepClass::up ? '+' : '-');
        closed += got;
        oracle_s += want;
        if (want != got) ok = false;
    }
    return Outcome::compare(closed, oracle_s, ok);
}

inline Outcome check_regular_circulant(const Ctx& c) {
    auto reg = regular_degree(c.spec);
    bool circ = is_circulant(c.spec);
    auto d = dense_profile(c.dense);
    bool dense_regular = std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
    bool ok = reg.has_value() == circ && reg.has_value() == dense_regular &&
              (!reg || *reg == d.front());
    return Outcome::compare("regular=" + (reg ? std::to_string(*reg) : std::string("no")) +
                                ",circulant=" + bool_str(circ),
                            "regular=" + bool_str(dense_regular), ok);
}

inline Outcome check_profile_roundtrip(const Ctx& c) {
    DegreeProfile profile = degree_profile(c.spec);
    try {
        Spec realized = realize_profile(profile);
        auto realized_dense = dense_profile(to_dense(realized, c.budget.max_vertices));
        bool ok = realized_dense == dense_profile(c.dense);
        return Outcome::compare("offsets=[" + ints(realized.offsets()) + "]",
                                "profile-match=" + bool_str(ok), ok);
    } catch (const PreconditionError& e) {
        return Outcome::compare(std::string("failed: ") + e.what(), "realizable", false);
    }
}

inline Outcome check_realize_sequence(const Ctx& c) {
    std::vector<int> seq = dense_profile(c.dense);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    auto result = realize_sequence(seq);
    if (!result) return Outcome::compare("exhausted", "realizable (spec itself)", false);
    std::vector<int> got = dense_profile(to_dense(result->spec, c.budget.max_vertices));
    std::sort(got.begin(), got.end(), std::greater<>());
    return Outcome::compare("arrangement=[" + ints(result->arrangement) + "]",
                            "multiset-match=" + bool_str(got == seq), got == seq);
}

inline Outcome check_circulant_parity(const Ctx& c) {
    if (!is_circulant(c.spec)) return Outcome::skip("not circulant");
    if (c.spec.edgeless()) return Outcome::skip("edgeless");
    bool has_half = c.n() % 2 == 0 && c.spec.has_offset(c.n() / 2);
    bool ok = has_half ? c.k() % 2 == 1 : c.k() % 2 == 0;
    return Outcome::compare("k=" + std::to_string(c.k()) + ",has-n/2=" + bool_str(has_half),
                            has_half ? "k odd" : "k even", ok);
}

inline Outcome check_omega_le_chi(const Ctx& c) {
    int omega = oracle::max_clique(c.dense, c.budget).size;
    int chi = oracle::chromatic_number(c.dense, c.budget);
    return Outcome::compare("omega=" + std::to_string(omega), "chi=" + std::to_string(chi),
                            omega <= chi);
}

inline Outcome check_chordal_hole_agree(const Ctx& c) {
    bool mcs = oracle::is_chordal(c.dense, c.budget);
    auto hole = oracle::find_hole(c.dense, oracle::HoleParity::any, c.budget);
    bool hole_ok = !hole || is_valid_hole(*hole, c.dense);
    return Outcome::compare("mcs-chordal=" + bool_str(mcs),
                            "hole=" + (hole ? "[" + ints(hole->vertices) + "]" : std::string("none")),
                            mcs == !hole && hole_ok);
}

inline Outcome check_berge_direct(const Ctx& c) {
    if (c.n() > 9) return Outcome::skip("n > 9 (induced-subgraph enumeration)");
    bool berge = oracle::is_berge(c.dense, c.budget);
    bool direct = oracle::is_perfect_by_definition(c.dense, c.budget);
    return Outcome::compare("berge=" + bool_str(berge), "omega=chi-everywhere=" + bool_str(direct),
                            berge == direct);
}

inline Outcome check_thetav_direct(const Ctx& c) {
    if (c.n() > 9) return Outcome::skip("n > 9 (partition enumeration)");
    int via_chi = oracle::vertex_clique_cover_number(c.dense, c.budget);
    int direct = oracle::min_clique_partition(c.dense, c.budget);
    return Outcome::compare("chi-complement=" + std::to_string(via_chi),
                            "min-partition=" + std::to_string(direct), via_chi == direct);
}

inline Outcome run_check(TheoremId id, const Ctx& c) {
    try {
        switch (id) {
            case TheoremId::core_degree_formula: return check_degree_formula(c);
            case TheoremId::core_ell_step: return check_ell_step(c);
            case TheoremId::core_degree_symmetry: return check_degree_symmetry(c);
            case TheoremId::core_center_parity: return check_center_parity(c);
            case TheoremId::core_degree_lipschitz: return check_degree_lipschitz(c);
            case TheoremId::core_components: return check_components(c);
            case TheoremId::core_complement_dense: return check_complement_dense(c);
            case TheoremId::clique_number: return check_clique_number(c);
            case TheoremId::clique_kq_free: return check_kq_free(c);
            case TheoremId::clique_theta_e_arith: return check_theta_e_arith(c);
            case TheoremId::clique_theta_e_monotone: return check_theta_e_monotone(c);
            case TheoremId::clique_theta_v_arith: return check_theta_v_arith(c);
            case TheoremId::clique_cover_validity: return check_cover_validity(c);
            case TheoremId::structure_chordal_equivalence: return check_chordal_equivalence(c);
            case TheoremId::structure_arithmetic_interval: return check_arithmetic_interval(c);
            case TheoremId::structure_hole_k2: return check_hole_k2(c);
            case TheoremId::structure_perfect_k2: return check_perfect_k2(c);
            case TheoremId::structure_perfect_complement: return check_perfect_complement(c);
            case TheoremId::degree_step_classification: return check_step_classification(c);
            case TheoremId::degree_regular_circulant: return check_regular_circulant(c);
            case TheoremId::degree_profile_roundtrip: return check_profile_roundtrip(c);
            case TheoremId::degree_realize_sequence: return check_realize_sequence(c);
            case TheoremId::degree_circulant_parity: return check_circulant_parity(c);
            case TheoremId::oracle_omega_le_chi: return check_omega_le_chi(c);
            case TheoremId::oracle_chordal_hole_agree: return check_chordal_hole_agree(c);
            case TheoremId::oracle_berge_direct: return check_berge_direct(c);
            case TheoremId::oracle_thetav_direct: return check_thetav_direct(c);
            case TheoremId::count_: break;
        }
    } catch (const CapError& e) {
        return Outcome::skip(std::string("oracle cap: ") + e.what());
    }
    return Outcome::skip("unknown theorem");
}

}  // namespace detail

// All theorem records for one spec, in catalogue order.
inline std::vector<Record> check_spec(const Spec& spec, const oracle::Budget& budget) {
    DenseGraph dense = to_dense(spec, budget.max_vertices);
    detail::Ctx ctx{spec, dense, budget};
    std::vector<Record> records;
    records.reserve(theorem_count);
    for (int i = 0; i < theorem_count; ++i) {
        auto id = static_cast<TheoremId>(i);
        auto start = std::chrono::steady_clock::now();
        detail::Outcome outcome = detail::run_check(id, ctx);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        records.push_back({spec.to_text(), id, outcome.verdict, std::move(outcome.closed_form),
                           std::move(outcome.oracle_value), std::move(outcome.reason), ms});
    }
    return records;
}

// Offset sets for one n: bitmask ascending, bit i-1 <=> offset i.
inline std::vector<Spec> enumerate_specs(int n, int k_max = 0, Family family = Family::all) {
    std::vector<Spec> specs;
    if (n < 2) return specs;
    for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
        if (k_max > 0 && std::popcount(mask) > k_max) continue;
        std::vector<int> offsets;
        for (int t = 1; t <= n - 1; ++t)
            if (mask & (1ULL << (t - 1))) offsets.push_back(t);
        Spec spec = Spec::make(n, std::move(offsets));
        if (family == Family::arithmetic && !spec.arithmetic_step()) continue;
        if (family == Family::k2 && spec.offset_count() != 2) continue;
        if (family == Family::threshold && !detail::structure_threshold(spec)) continue;
        specs.push_back(std::move(spec));
    }
    return specs;
}

struct Summary {
    std::size_t specs = 0, records = 0, matches = 0, mismatches = 0, skipped = 0;
    double elapsed_ms = 0.0;

    bool clean() const { return mismatches == 0; }
};

// Runs the sweep, streaming records to the sink in enumeration order. Workers
// process whole specs; blocks are emitted in order so output is identical for
// any job count.
inline Summary run_sweep(const SweepConfig& cfg, const std::function<void(const Record&)>& sink) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    Summary summary;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto specs = enumerate_specs(n, cfg.k_max, cfg.family);
        const std::size_t block = std::max<std::size_t>(std::size_t(cfg.jobs) * 16, 64);
        for (std::size_t base = 0; base < specs.size(); base += block) {
            std::size_t count = std::min(block, specs.size() - base);
            std::vector<std::vector<Record>> slots(count);
            if (cfg.jobs == 1) {
                for (std::size_t i = 0; i < count; ++i)
                    slots[i] = check_spec(specs[base + i], cfg.budget);
            } else {
                std::atomic<std::size_t> next{0};
                std::vector<std::thread> pool;
                std::size_t width = std::min(static_cast<std::size_t>(cfg.jobs), count);
                pool.reserve(width);
                for (std::size_t w = 0; w < width; ++w)
                    pool.emplace_back([&] {
                        for (;;) {
                            std::size_t i = next.fetch_add(1);
                            if (i >= count) return;
                            slots[i] = check_spec(specs[base + i], cfg.budget);
                        }
                    });
                for (auto& th : pool) th.join();
            }
            for (auto& records : slots) {
                ++summary.specs;
                for (auto& r : records) {
                    ++summary.records;
                    switch (r.verdict) {
                        case RecordVerdict::match: ++summary.matches; break;
                        case RecordVerdict::mismatch: ++summary.mismatches; break;
                        case RecordVerdict::skipped_precondition: ++summary.skipped; break;
                    }
                    sink(r);
                }
            }
        }
    }
    summary.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

inline std::string record_to_jsonl(const Record& r) {
    nlohmann::json j{{"spec", r.spec_text},
                     {"theorem", theorem_name(r.theorem)},
                     {"verdict", verdict_name(r.verdict)},
                     {"closed_form", r.closed_form},
                     {"oracle", r.oracle_value},
                     {"reason", r.reason},
                     {"elapsed_ms", r.elapsed_ms}};
    return j.dump();
}

inline std::string csv_header() {
    return "spec,theorem,verdict,closed_form,oracle,reason,elapsed_ms";
}

inline std::string record_to_csv(const Record& r) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += "\"\"";
            else out += ch;
        }
        out += '"';
        return out;
    };
    std::ostringstream os;
    os << quote(r.spec_text) << ',' << theorem_name(r.theorem) << ',' << verdict_name(r.verdict)
       << ',' << quote(r.closed_form) << ',' << quote(r.oracle_value) << ',' << quote(r.reason)
       << ',' << r.elapsed_ms;
    return os.str();
}

}  // namespace toeplitz::verify
