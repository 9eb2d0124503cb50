// Explicit adjacency on 1-indexed vertices, one 64-bit neighbor mask per row.
// This is the oracle's working representation; construction from a Spec is
// gated by the oracle vertex cap.
#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "toeplitz/spec.hpp"

namespace toeplitz {

class DenseGraph {
public:
    explicit DenseGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 1 || n > 64) throw ValidationError("dense graph order must be in [1, 64]");
    }

    int order() const { return n_; }

    void add_edge(int i, int j) {
        require_vertex(i);
        require_vertex(j);
        if (i == j) throw ValidationError("no loops");
        adj_[i - 1] |= bit(j);
        adj_[j - 1] |= bit(i);
    }

    bool adjacent(int i, int j) const {
        require_vertex(i);
        require_vertex(j);
        return (adj_[i - 1] & bit(j)) != 0;
    }

    // Bit v-1 set iff v is a neighbor.
    std::uint64_t neighbor_mask(int i) const {
        require_vertex(i);
        return adj_[i - 1];
    }

    int degree(int i) const { return std::popcount(neighbor_mask(i)); }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    }

    DenseGraph complement() const {
        DenseGraph g(n_);
        for (int v = 1; v <= n_; ++v)
            g.adj_[v - 1] = ~adj_[v - 1] & vertex_mask() & ~bit(v);
        return g;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (adjacent(i, j)) out.emplace_back(i, j);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (auto row : adj_) twice += std::popcount(row);
        return twice / 2;
    }

    // Subgraph induced by the vertex mask, relabeled 1..|mask| in ascending
    // order of the original labels.
    DenseGraph induced(std::uint64_t mask) const {
        mask &= vertex_mask();
        int m = std::popcount(mask);
        DenseGraph g(m == 0 ? 1 : m);
        std::vector<int> label(static_cast<std::size_t>(n_) + 1, 0);
        int next = 0;
        std::uint64_t scan = mask;
        while (scan) {
            int v = std::countr_zero(scan) + 1;
            scan &= scan - 1;
            label[v] = ++next;
        }
        for (int i = 1; i <= n_; ++i) {
            if (!label[i]) continue;
            std::uint64_t nbrs = adj_[i - 1] & mask;
            while (nbrs) {
                int j = std::countr_zero(nbrs) + 1;
                nbrs &= nbrs - 1;
                if (j > i) g.add_edge(label[i], label[j]);
            }
        }
        return g;
    }

    std::vector<std::vector<int>> bfs_components() const {
        std::vector<std::vector<int>> blocks;
        std::uint64_t seen = 0;
        for (int start = 1; start <= n_; ++start) {
            if (seen & bit(start)) continue;
            std::uint64_t comp = bit(start);
            std::uint64_t frontier = bit(start);
            while (frontier) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f) + 1;
                    f &= f - 1;
                    next |= adj_[v - 1];
                }
                frontier = next & ~comp;
                comp |= frontier;
            }
            seen |= comp;
            std::vector<int> block;
            std::uint64_t c = comp;
            while (c) {
                block.push_back(std::countr_zero(c) + 1);
                c &= c - 1;
            }
            blocks.push_back(std::move(block));
        }
        return blocks;
    }

    friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

    static std::uint64_t bit(int v) { return 1ULL << (v - 1); }

private:
    void require_vertex(int i) const {
        if (i < 1 || i > n_) throw ValidationError("vertex outside [1, n]");
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

// Realizes the spec's adjacency. max_vertices is the oracle cap.
inline DenseGraph to_dense(const Spec& spec, int max_vertices = 14) {
    if (spec.order() > max_vertices)
        throw CapError("spec order " + std::to_string(spec.order()) +
                       " exceeds oracle cap " + std::to_string(max_vertices));
    DenseGraph g(spec.order());
    for (int i = 1; i <= spec.order(); ++i)
        for (int t : spec.offsets())
            if (i + t <= spec.order()) g.add_edge(i, i + t);
    return g;
}

}  // namespace toeplitz
