// Hole = chordless cycle of length >= 4, stored as the cyclic vertex sequence.
#pragma once

#include <vector>

#include "toeplitz/dense_graph.hpp"
#include "toeplitz/spec.hpp"

namespace toeplitz {

struct Hole {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool odd() const { return length() % 2 == 1; }
};

// Distinct vertices, length >= 4, consecutive pairs adjacent (cyclically),
// all other pairs non-adjacent. Adjacency comes from the callback so the same
// check runs against a Spec or a DenseGraph.
template <typename AdjacentFn>
bool is_valid_hole_seq(const std::vector<int>& cycle, AdjacentFn&& adjacent) {
    int len = static_cast<int>(cycle.size());
    if (len < 4) return false;
    for (int a = 0; a < len; ++a)
        for (int b = a + 1; b < len; ++b) {
            if (cycle[a] == cycle[b]) return false;
            bool consecutive = (b == a + 1) || (a == 0 && b == len - 1);
            if (adjacent(cycle[a], cycle[b]) != consecutive) return false;
        }
    return true;
}

inline bool is_valid_hole(const Hole& hole, const Spec& spec) {
    return is_valid_hole_seq(hole.vertices,
                             [&](int u, int v) { return spec.adjacent(u, v); });
}

inline bool is_valid_hole(const Hole& hole, const DenseGraph& g) {
    return is_valid_hole_seq(hole.vertices,
                             [&](int u, int v) { return g.adjacent(u, v); });
}

}  // namespace toeplitz
