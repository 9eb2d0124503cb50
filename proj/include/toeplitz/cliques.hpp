// Closed-form clique results: K_q-freeness from offset differences, the
// clique number bound omega <= k+1 with equality exactly for arithmetic
// offset sets, and explicit edge/vertex clique covers for the arithmetic
// family G_n<t,2t,...,kt>.
#pragma once

#include <string>
#include <vector>

#include "toeplitz/dense_graph.hpp"
#include "toeplitz/spec.hpp"

namespace toeplitz {

enum class CoverKind { vertex, edge };

struct CliqueCover {
    CoverKind kind;
    std::vector<std::vector<int>> cliques;

    int size() const { return static_cast<int>(cliques.size()); }
};

// True iff every (q-1)-subset of the offsets contains a pair whose difference
// is not itself an offset. Vacuously true when k < q-1.
inline bool is_kq_free(const Spec& spec, int q) {
    if (q < 3) throw PreconditionError("is_kq_free: q must be >= 3");
    const auto& offs = spec.offsets();
    int k = spec.offset_count();
    int want = q - 1;
    if (k < want) return true;

    // Enumerate (q-1)-subsets of the offset indices; bail out of a subset as
    // soon as a witnessing pair appears.
    std::vector<int> pick(want);
    for (int i = 0; i < want; ++i) pick[i] = i;
    while (true) {
        bool has_witness = false;
        for (int a = 0; a < want && !has_witness; ++a)
            for (int b = a + 1; b < want && !has_witness; ++b)
                if (!spec.has_offset(offs[pick[b]] - offs[pick[a]])) has_witness = true;
        if (!has_witness) return false;  // this subset yields a K_q with vertex 1

        int i = want - 1;
        while (i >= 0 && pick[i] == k - want + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

inline bool is_triangle_free(const Spec& spec) { return is_kq_free(spec, 3); }

// omega(G). Always <= k+1; equals k+1 iff the offsets are arithmetic.
// Validation guarantees t_k <= n-1, so vertex 1 has its full neighbor set and
// the K_q-free characterization applies to every constructible spec.
inline int clique_number(const Spec& spec) {
    if (spec.edgeless()) return 1;
    for (int q = spec.offset_count() + 1; q >= 3; --q)
        if (!is_kq_free(spec, q)) return q;
    return 2;  // k >= 1 guarantees the edge {1, 1+t_1}
}

namespace detail {

inline int require_arithmetic(const Spec& spec, const char* what) {
    auto t = spec.arithmetic_step();
    if (!t)
        throw PreconditionError(std::string(what) + ": offsets are not arithmetic (t,2t,...,kt)");
    return *t;
}

// Sizes of the residue-class components of G_n<t,...,kt>, i = 1..t.
inline std::vector<int> arithmetic_component_sizes(int n, int t) {
    std::vector<int> sizes;
    sizes.reserve(t);
    for (int i = 1; i <= t; ++i) sizes.push_back((n - i) / t + 1);
    return sizes;
}

}  // namespace detail

// theta_E of an arithmetic spec. Components are complete when they have at
// most k+1 vertices and need |H|-k cliques otherwise; components without an
// edge need none. The sum equals max{t, n-kt} whenever n >= 2t (always the
// case for k >= 2); for k=1 with t < n < 2t the singleton components make the
// true value n-kt.
inline int edge_clique_cover_number_arithmetic(const Spec& spec) {
    int t = detail::require_arithmetic(spec, "edge_clique_cover_number_arithmetic");
    int k = spec.offset_count();
    int total = 0;
    for (int m : detail::arithmetic_component_sizes(spec.order(), t))
        if (m >= 2) total += std::max(1, m - k);
    return total;
}

// The cover behind the count: consecutive runs C_i = {i, i+t, ..., i+kt} when
// n > (k+1)t, otherwise one clique per component that has an edge.
inline CliqueCover edge_clique_cover_arithmetic(const Spec& spec) {
    int t = detail::require_arithmetic(spec, "edge_clique_cover_arithmetic");
    int k = spec.offset_count();
    int n = spec.order();
    CliqueCover cover{CoverKind::edge, {}};
    if (n > (k + 1) * t) {
        for (int i = 1; i <= n - k * t; ++i) {
            std::vector<int> clique;
            clique.reserve(k + 1);
            for (int j = 0; j <= k; ++j) clique.push_back(i + j * t);
            cover.cliques.push_back(std::move(clique));
        }
    } else {
        for (int i = 1; i <= t; ++i) {
            std::vector<int> block;
            for (int v = i; v <= n; v += t) block.push_back(v);
            if (block.size() >= 2) cover.cliques.push_back(std::move(block));
        }
    }
    return cover;
}

// theta_v formula for arithmetic specs:
//   s*ceil(ceil(n/t)/(k+1)) + (t-s)*ceil(floor(n/t)/(k+1)),  s = n mod t in [1,t].
// Established only for n > (2k-1)t; below that threshold the block cover is
// just an upper bound, so this errors (distinctly from the non-arithmetic
// error).
inline int vertex_clique_cover_number_arithmetic(const Spec& spec) {
    int t = detail::require_arithmetic(spec, "vertex_clique_cover_number_arithmetic");
    int k = spec.offset_count();
    int n = spec.order();
    if (n <= (2 * k - 1) * t)
        throw PreconditionError(
            "vertex_clique_cover_number_arithmetic: n <= (2k-1)t, formula not established");
    int s = n % t;
    if (s == 0) s = t;
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    int hi = ceil_div(n, t), lo = n / t;
    return s * ceil_div(hi, k + 1) + (t - s) * ceil_div(lo, k + 1);
}

// Blocks of at most k+1 consecutive vertices along each residue class. Valid
// cover for every arithmetic spec; its size equals the theta_v formula.
inline CliqueCover vertex_clique_cover_arithmetic(const Spec& spec) {
    int t = detail::require_arithmetic(spec, "vertex_clique_cover_arithmetic");
    int k = spec.offset_count();
    int n = spec.order();
    CliqueCover cover{CoverKind::vertex, {}};
    for (int i = 1; i <= t; ++i) {
        std::vector<int> block;
        for (int v = i; v <= n; v += t) {
            block.push_back(v);
            if (static_cast<int>(block.size()) == k + 1) {
                cover.cliques.push_back(block);
                block.clear();
            }
        }
        if (!block.empty()) cover.cliques.push_back(std::move(block));
    }
    return cover;
}

// Checks clique-ness of every listed set plus the coverage its kind promises,
// against the given adjacency.
template <typename AdjacentFn>
bool cover_is_valid_with(const CliqueCover& cover, int n, AdjacentFn&& adjacent) {
    std::vector<char> vertex_hit(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<char>> edge_hit;
    if (cover.kind == CoverKind::edge)
        edge_hit.assign(n + 1, std::vector<char>(n + 1, 0));

    for (const auto& clique : cover.cliques) {
        for (std::size_t a = 0; a < clique.size(); ++a) {
            int u = clique[a];
            if (u < 1 || u > n) return false;
            vertex_hit[u] = 1;
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                int v = clique[b];
                if (u == v || !adjacent(u, v)) return false;
                if (cover.kind == CoverKind::edge) edge_hit[u][v] = edge_hit[v][u] = 1;
            }
        }
    }
    if (cover.kind == CoverKind::vertex) {
        for (int v = 1; v <= n; ++v)
            if (!vertex_hit[v]) return false;
    } else {
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (adjacent(u, v) && !edge_hit[u][v]) return false;
    }
    return true;
}

inline bool cover_is_valid(const CliqueCover& cover, const Spec& spec) {
    return cover_is_valid_with(cover, spec.order(),
                               [&](int u, int v) { return spec.adjacent(u, v); });
}

inline bool cover_is_valid(const CliqueCover& cover, const DenseGraph& g) {
    return cover_is_valid_with(cover, g.order(),
                               [&](int u, int v) { return g.adjacent(u, v); });
}

}  // namespace toeplitz
