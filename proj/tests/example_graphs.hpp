#pragma once

#include <utility>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/rng.hpp"

namespace example_graphs {

inline turanstab::Graph cycle(int n) {
    turanstab::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline turanstab::Graph complete(int n) {
    turanstab::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline turanstab::Graph edgeless(int n) { return turanstab::Graph(n); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline turanstab::Graph petersen() {
    return turanstab::Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},      // outer
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},      // spokes
             {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});    // inner
}

/// Each pair kept with probability num/den; deterministic per rng state.
inline turanstab::Graph random_gnp(int n, std::uint64_t num, std::uint64_t den,
                                   turanstab::SplitMix64& rng) {
    turanstab::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bounded(den) < num) g.add_edge(u, v);
    return g;
}

}  // namespace example_graphs
