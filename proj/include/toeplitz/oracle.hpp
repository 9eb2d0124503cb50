// Brute-force ground truth on DenseGraph: exact max clique, exact coloring,
// chordless-cycle enumeration, MCS chordality, asteroidal-triple interval
// test, Berge check, exact clique covers. Everything here is deterministic
// and certified by exhaustion; the budget caps keep it desk-scale.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "toeplitz/dense_graph.hpp"
#include "toeplitz/hole.hpp"

namespace toeplitz::oracle {

struct Budget {
    int max_vertices = 14;       // polynomial / single-exponential procedures
    int max_cover_vertices = 12; // exact edge-clique-cover set cover

    void validate() const {
        if (max_vertices < 1 || max_vertices > 64)
            throw ValidationError("budget: max_vertices outside [1, 64]");
        if (max_cover_vertices < 1 || max_cover_vertices > max_vertices)
            throw ValidationError("budget: max_cover_vertices outside [1, max_vertices]");
    }
};

namespace detail {

inline void require_cap(const DenseGraph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw CapError(std::string(what) + ": order " + std::to_string(g.order()) +
                       " exceeds cap " + std::to_string(cap));
}

inline std::vector<int> mask_to_vertices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

struct CliqueSearch {
    const DenseGraph& g;
    std::uint64_t best = 0;
    int best_size = 0;

    void expand(std::uint64_t r, int rsize, std::uint64_t p) {
        if (rsize + std::popcount(p) <= best_size) return;
        if (!p) {
            best = r;
            best_size = rsize;
            return;
        }
        while (p) {
            if (rsize + std::popcount(p) <= best_size) return;
            int v = std::countr_zero(p) + 1;
            p &= p - 1;
            expand(r | DenseGraph::bit(v), rsize + 1, p & g.neighbor_mask(v));
        }
    }
};

// Backtracking q-colorability, max clique preseeded with distinct colors.
struct ColorSearch {
    const DenseGraph& g;
    int q;
    std::vector<int> order;   // assignment order
    std::vector<int> color;   // 1-based vertex -> color (0 = none)

    bool assign(std::size_t idx, int used) {
        if (idx == order.size()) return true;
        int v = order[idx];
        std::uint64_t nbrs = g.neighbor_mask(v);
        int limit = std::min(q, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            std::uint64_t m = nbrs;
            while (m && !clash) {
                int u = std::countr_zero(m) + 1;
                m &= m - 1;
                clash = color[u] == c;
            }
            if (clash) continue;
            color[v] = c;
            if (assign(idx + 1, std::max(used, c))) return true;
            color[v] = 0;
        }
        return false;
    }
};

inline void bron_kerbosch(const DenseGraph& g, std::uint64_t r, std::uint64_t p,
                          std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = 0, pivot_gain = -1;
    std::uint64_t m = px;
    while (m) {
        int u = std::countr_zero(m) + 1;
        m &= m - 1;
        int gain = std::popcount(p & g.neighbor_mask(u));
        if (gain > pivot_gain) {
            pivot_gain = gain;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~g.neighbor_mask(pivot);
    while (cand) {
        int v = std::countr_zero(cand) + 1;
        cand &= cand - 1;
        std::uint64_t nv = g.neighbor_mask(v);
        bron_kerbosch(g, r | DenseGraph::bit(v), p & nv, x & nv, out);
        p &= ~DenseGraph::bit(v);
        x |= DenseGraph::bit(v);
    }
}

}  // namespace detail

struct MaxClique {
    int size = 0;
    std::vector<int> vertices;
};

inline MaxClique max_clique(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_vertices, "max_clique");
    detail::CliqueSearch search{g};
    search.expand(0, 0, g.vertex_mask());
    return {search.best_size, detail::mask_to_vertices(search.best)};
}

// All maximal cliques as vertex masks (Bron-Kerbosch with pivoting).
inline std::vector<std::uint64_t> maximal_cliques(const DenseGraph& g,
                                                  const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_vertices, "maximal_cliques");
    std::vector<std::uint64_t> out;
    detail::bron_kerbosch(g, 0, g.vertex_mask(), 0, out);
    return out;
}

inline int chromatic_number(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_vertices, "chromatic_number");
    MaxClique clique = max_clique(g, budget);
    std::uint64_t in_clique = 0;
    for (int v : clique.vertices) in_clique |= DenseGraph::bit(v);

    std::vector<int> order = clique.vertices;
    std::vector<int> rest;
    for (int v = 1; v <= g.order(); ++v)
        if (!(in_clique & DenseGraph::bit(v))) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    for (int q = std::max(clique.size, 1); q <= g.order(); ++q) {
        detail::ColorSearch s{g, q, order, std::vector<int>(g.order() + 1, 0)};
        if (s.assign(0, 0)) return q;
    }
    return g.order();  // unreachable: n colors always suffice
}

enum class HoleParity { any, odd };

namespace detail {

struct HoleSearch {
    const DenseGraph& g;
    HoleParity parity;
    std::vector<int> path;
    std::uint64_t path_mask = 0;

    // Candidates scanned ascending and closures preferred over longer
    // extensions, so the first hit is the lexicographically least hole whose
    // minimum vertex is path[0].
    std::optional<Hole> dfs(std::uint64_t above) {
        int last = path.back();
        std::uint64_t before_last = path_mask ^ DenseGraph::bit(last);
        std::uint64_t cand = g.neighbor_mask(last) & ~path_mask & above;
        while (cand) {
            int u = std::countr_zero(cand) + 1;
            cand &= cand - 1;
            std::uint64_t touch = g.neighbor_mask(u) & before_last;
            if (touch == 0) {
                path.push_back(u);
                path_mask |= DenseGraph::bit(u);
                auto found = dfs(above);
                path.pop_back();
                path_mask &= ~DenseGraph::bit(u);
                if (found) return found;
            } else if (touch == DenseGraph::bit(path.front())) {
                int len = static_cast<int>(path.size()) + 1;
                if (len >= 4 && (parity == HoleParity::any || len % 2 == 1)) {
                    Hole hole{path};
                    hole.vertices.push_back(u);
                    return hole;
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace detail

// Lexicographically least hole (odd hole when parity=odd), or nullopt when
// none exists -- certified by exhausting all induced paths.
inline std::optional<Hole> find_hole(const DenseGraph& g, HoleParity parity = HoleParity::any,
                                     const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_vertices, "find_hole");
    if (g.order() < 4) return std::nullopt;
    for (int v1 = 1; v1 + 3 <= g.order(); ++v1) {
        std::uint64_t above = ~((DenseGraph::bit(v1) << 1) - 1) & g.vertex_mask();
        std::uint64_t starts = g.neighbor_mask(v1) & above;
        while (starts) {
            int v2 = std::countr_zero(starts) + 1;
            starts &= starts - 1;
            detail::HoleSearch search{g, parity, {v1, v2},
                                      DenseGraph::bit(v1) | DenseGraph::bit(v2)};
            if (auto found = search.dfs(above)) return found;
        }
    }
    return std::nullopt;
}

// Maximum-cardinality-search ordering tested as a perfect elimination
// ordering. Independent of find_hole; the two must agree.
inline bool is_chordal(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_vertices, "is_chordal");
    int n = g.order();
    std::vector<int> pos(n + 1, 0), weight(n + 1, 0);
    std::vector<char> numbered(n + 1, 0);
    for (int p = n; p >= 1; --p) {
        int pick = 0;
        for (int v = 1; v <= n; ++v)
            if (!numbered[v] && (pick == 0 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = 1;
        pos[pick] = p;
        std::uint64_t m = g.neighbor_mask(pick);
        while (m) {
            int u = std::countr_zero(m) + 1;
            m &= m - 1;
            if (!numbered[u]) ++weight[u];
        }
    }
    for (int v = 1; v <= n; ++v) {
        std::uint64_t later = 0;
        int parent = 0;
        std::uint64_t m = g.neighbor_mask(v);
        while (m) {
            int u = std::countr_zero(m) + 1;
            m &= m - 1;
            if (pos[u] > pos[v]) {
                later |= DenseGraph::bit(u);
                if (parent == 0 || pos[u] < pos[parent]) parent = u;
            }
        }
        if (parent == 0) continue;
        std::uint64_t rest = later & ~DenseGraph::bit(parent);
        if ((rest & ~g.neighbor_mask(parent)) != 0) return false;
    }
    return true;
}

namespace detail {

// comp[v] = component of v in G - N[x], or -1 for v in N[x].
inline std::vector<int> components_avoiding(const DenseGraph& g, int x) {
    std::vector<int> comp(g.order() + 1, -1);
    std::uint64_t allowed = g.vertex_mask() & ~g.neighbor_mask(x) & ~DenseGraph::bit(x);
    int next_id = 0;
    std::uint64_t seen = 0;
    std::uint64_t mm = allowed;
    while (mm) {
        int start = std::countr_zero(mm) + 1;
        mm &= mm - 1;
        if (seen & DenseGraph::bit(start)) continue;
        std::uint64_t frontier = DenseGraph::bit(start), blob = frontier;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int v = std::countr_zero(f) + 1;
                f &= f - 1;
                next |= g.neighbor_mask(v);
            }
            frontier = next & allowed & ~blob;
            blob |= frontier;
        }
        seen |= blob;
        while (blob) {
            int v = std::countr_zero(blob) + 1;
            blob &= blob - 1;
            comp[v] = next_id;
        }
        ++next_id;
    }
    return comp;
}

}  // namespace detail

inline bool has_asteroidal_triple(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_vertices, "has_asteroidal_triple");
    int n = g.order();
    std::vector<std::vector<int>> comp;
    comp.reserve(n + 1);
    comp.emplace_back();
    for (int x = 1; x <= n; ++x) comp.push_back(detail::components_avoiding(g, x));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                bool ab = comp[c][a] >= 0 && comp[c][a] == comp[c][b];
                bool ac = comp[b][a] >= 0 && comp[b][a] == comp[b][c];
                bool bc = comp[a][b] >= 0 && comp[a][b] == comp[a][c];
                if (ab && ac && bc) return true;
            }
        }
    return false;
}

inline bool is_interval(const DenseGraph& g, const Budget& budget = {}) {
    return is_chordal(g, budget) && !has_asteroidal_triple(g, budget);
}

// No odd hole in g and none in its complement (anti-holes are holes of the
// complement). Equivalent to perfection by the strong perfect graph theorem.
inline bool is_berge(const DenseGraph& g, const Budget& budget = {}) {
    return !find_hole(g, HoleParity::odd, budget) &&
           !find_hole(g.complement(), HoleParity::odd, budget);
}

inline int vertex_clique_cover_number(const DenseGraph& g, const Budget& budget = {}) {
    return chromatic_number(g.complement(), budget);
}

namespace detail {

struct EdgeSet {
    std::array<std::uint64_t, 4> words{};

    void set(int i) { words[i >> 6] |= 1ULL << (i & 63); }
    bool covers(const EdgeSet& other) const {
        for (int w = 0; w < 4; ++w)
            if (other.words[w] & ~words[w]) return false;
        return true;
    }
    void add(const EdgeSet& other) {
        for (int w = 0; w < 4; ++w) words[w] |= other.words[w];
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }
    int count_missing_from(const EdgeSet& full) const {
        int c = 0;
        for (int w = 0; w < 4; ++w) c += std::popcount(full.words[w] & ~words[w]);
        return c;
    }
};

struct CoverSearch {
    const std::vector<EdgeSet>& clique_edges;
    const std::vector<std::vector<int>>& edge_to_cliques;  // edge -> clique idx
    const EdgeSet& all;
    int best;

    void rec(const EdgeSet& covered, int depth) {
        if (depth >= best) return;
        int pick = -1, fewest = 1 << 30;
        for (std::size_t e = 0; e < edge_to_cliques.size(); ++e) {
            if (covered.words[e >> 6] & (1ULL << (e & 63))) continue;
            int options = static_cast<int>(edge_to_cliques[e].size());
            if (options < fewest) {
                fewest = options;
                pick = static_cast<int>(e);
            }
        }
        if (pick < 0) {
            best = depth;
            return;
        }
        for (int c : edge_to_cliques[pick]) {
            EdgeSet next = covered;
            next.add(clique_edges[c]);
            rec(next, depth + 1);
        }
    }
};

}  // namespace detail

// Exact minimum edge clique cover via branch-and-bound set cover over the
// maximal cliques. 0 for edgeless graphs.
inline int edge_clique_cover_number(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_cover_vertices, "edge_clique_cover_number");
    auto edges = g.edges();
    if (edges.empty()) return 0;
    if (edges.size() > 256) throw CapError("edge_clique_cover_number: too many edges");

    auto cliques = maximal_cliques(g, budget);
    std::vector<detail::EdgeSet> clique_edges(cliques.size());
    std::vector<std::vector<int>> edge_to_cliques(edges.size());
    detail::EdgeSet all;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        all.set(static_cast<int>(e));
        std::uint64_t pair = DenseGraph::bit(edges[e].first) | DenseGraph::bit(edges[e].second);
        for (std::size_t c = 0; c < cliques.size(); ++c)
            if ((cliques[c] & pair) == pair) {
                clique_edges[c].set(static_cast<int>(e));
                edge_to_cliques[e].push_back(static_cast<int>(c));
            }
    }

    // Greedy upper bound seeds the search.
    detail::EdgeSet covered;
    int greedy = 0;
    while (!covered.covers(all)) {
        std::size_t pick = 0;
        int gain = -1;
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            int missing = covered.count_missing_from(clique_edges[c]);
            if (missing > gain) {
                gain = missing;
                pick = c;
            }
        }
        covered.add(clique_edges[pick]);
        ++greedy;
    }

    detail::CoverSearch search{clique_edges, edge_to_cliques, all, greedy};
    search.rec(detail::EdgeSet{}, 0);
    return search.best;
}

// Exact minimum partition of the vertices into cliques, by direct recursion
// on the lowest uncovered vertex. Independent route to theta_v.
inline int min_clique_partition(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_cover_vertices, "min_clique_partition");
    int best = g.order();

    struct Rec {
        const DenseGraph& g;
        int best;

        void run(std::uint64_t remaining, int depth) {
            if (!remaining) {
                best = std::min(best, depth);
                return;
            }
            if (depth + 1 >= best) return;
            int v = std::countr_zero(remaining) + 1;
            std::vector<std::uint64_t> cliques;
            expand(remaining & g.neighbor_mask(v), 0, DenseGraph::bit(v), remaining, cliques);
            for (auto c : cliques) run(remaining & ~c, depth + 1);
        }

        // maximal cliques (within `remaining`) containing the seed in r
        void expand(std::uint64_t p, std::uint64_t x, std::uint64_t r, std::uint64_t remaining,
                    std::vector<std::uint64_t>& out) {
            if (!p && !x) {
                out.push_back(r);
                return;
            }
            std::uint64_t cand = p;
            while (cand) {
                int v = std::countr_zero(cand) + 1;
                cand &= cand - 1;
                std::uint64_t nv = g.neighbor_mask(v) & remaining;
                expand(p & nv, x & nv, r | DenseGraph::bit(v), remaining, out);
                p &= ~DenseGraph::bit(v);
                x |= DenseGraph::bit(v);
            }
        }
    };

    Rec rec{g, best};
    rec.run(g.vertex_mask(), 0);
    return rec.best;
}

// Literal definition of perfection: omega = chi on every induced subgraph.
// Doubly exponential; callers keep n small (the sweeps use n <= 9).
inline bool is_perfect_by_definition(const DenseGraph& g, const Budget& budget = {}) {
    budget.validate();
    detail::require_cap(g, budget.max_cover_vertices, "is_perfect_by_definition");
    std::uint64_t full = g.vertex_mask();
    for (std::uint64_t sub = full; sub; sub = (sub - 1) & full) {
        DenseGraph h = g.induced(sub);
        if (max_clique(h, budget).size != chromatic_number(h, budget)) return false;
    }
    return true;
}

}  // namespace toeplitz::oracle
