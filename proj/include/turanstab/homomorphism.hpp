#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/limits.hpp"

namespace turanstab {

namespace detail {

inline bool clique_search(const Graph& g, int k, VertexSet cand, std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) == k) return true;
    int need = k - static_cast<int>(clique.size());
    while (cand.count() >= need) {
        int v = cand.first();
        clique.push_back(v);
        VertexSet rest = cand & g.neighbors(v);
        if (static_cast<int>(clique.size()) + rest.count() >= k &&
            clique_search(g, k, std::move(rest), clique))
            return true;
        clique.pop_back();
        cand.erase(v);
    }
    return false;
}

}  // namespace detail

/// Exact search for a k-clique. Returns a witness (ascending labels) or nullopt.
/// Deterministic: candidates explored in ascending label order, vertices of
/// degree < k-1 pruned up front.
inline std::optional<std::vector<int>> contains_clique(const Graph& g, int k) {
    if (k < 1) throw InputError("clique size must be positive");
    int n = g.vertex_count();
    if (k > n) return std::nullopt;
    VertexSet cand(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= k - 1) cand.insert(v);
    std::vector<int> clique;
    if (!detail::clique_search(g, k, std::move(cand), clique)) return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j]))
                throw std::logic_error("clique witness failed verification");
    return clique;
}

namespace detail {

struct HomSearcher {
    const Graph& pattern;
    const Graph& host;
    const std::vector<int>& order;
    std::vector<int>& map;

    bool run(int depth, const std::vector<VertexSet>& cand) {
        if (depth == pattern.vertex_count()) return true;
        int u = order[depth];
        for (int x : cand[u]) {
            map[u] = x;
            std::vector<VertexSet> next = cand;
            bool dead = false;
            for (int w : pattern.neighbors(u)) {
                if (map[w] != -1) continue;
                next[w] &= host.neighbors(x);
                if (next[w].empty()) {
                    dead = true;
                    break;
                }
            }
            if (!dead && run(depth + 1, next)) return true;
            map[u] = -1;
        }
        return false;
    }
};

}  // namespace detail

/// Edge-preserving map V(F) -> V(H) if one exists. Backtracking with forward
/// checking: F-vertices in descending-degree order (ties: smallest label),
/// host candidates in ascending label order.
inline std::optional<std::vector<int>> hom_exists(const Graph& pattern, const Graph& host,
                                                  const SearchLimits& limits = {}) {
    int nf = pattern.vertex_count();
    if (nf > limits.pattern_vertices)
        throw CapabilityError("homomorphism source has " + std::to_string(nf) +
                              " vertices, guard is " + std::to_string(limits.pattern_vertices));
    if (nf == 0) return std::vector<int>{};
    int nh = host.vertex_count();
    if (nh == 0) return std::nullopt;
    if (pattern.edge_count() > 0 && host.edge_count() == 0) return std::nullopt;

    std::vector<int> order(static_cast<std::size_t>(nf));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });

    std::vector<int> map(static_cast<std::size_t>(nf), -1);
    std::vector<VertexSet> cand(static_cast<std::size_t>(nf), VertexSet::full(nh));
    detail::HomSearcher searcher{pattern, host, order, map};
    if (!searcher.run(0, cand)) return std::nullopt;
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(map[u], map[v]))
            throw std::logic_error("homomorphism failed verification");
    return map;
}

namespace detail {

// DSATUR-ordered backtracking k-colorability. Colors capped at one above the
// largest used so far, which quotients out color permutations.
inline bool dsatur_colorable(const Graph& g, int k, std::vector<int>& color, int colored,
                             int max_used) {
    int n = g.vertex_count();
    if (colored == n) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] != -1) continue;
        std::uint64_t seen = 0;
        for (int w : g.neighbors(v))
            if (color[w] != -1) seen |= std::uint64_t{1} << color[w];
        int sat = std::popcount(seen);
        int deg = g.degree(v);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            pick = v;
            best_sat = sat;
            best_deg = deg;
        }
    }
    int cap = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= cap; ++c) {
        bool clash = false;
        for (int w : g.neighbors(pick))
            if (color[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[pick] = c;
        if (dsatur_colorable(g, k, color, colored + 1, std::max(max_used, c))) return true;
        color[pick] = -1;
    }
    return false;
}

}  // namespace detail

/// Exact chromatic number by iterated k-colorability between a greedy clique
/// lower bound and a greedy coloring upper bound. Empty graph -> 0, edgeless -> 1.
inline int chromatic_number(const Graph& g, const SearchLimits& limits = {}) {
    int n = g.vertex_count();
    if (n > limits.pattern_vertices)
        throw CapabilityError("chromatic-number input has " + std::to_string(n) +
                              " vertices, guard is " + std::to_string(limits.pattern_vertices));
    if (n > 64) throw CapabilityError("chromatic search caps at 64 vertices (color bitmask)");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    VertexSet greedy_clique(n);
    int lower = 0;
    for (int v : order)
        if (greedy_clique.is_subset_of(g.neighbors(v))) {
            greedy_clique.insert(v);
            ++lower;
        }

    std::vector<int> greedy(static_cast<std::size_t>(n), -1);
    int upper = 0;
    for (int v : order) {
        std::uint64_t used = 0;
        for (int w : g.neighbors(v))
            if (greedy[w] != -1) used |= std::uint64_t{1} << greedy[w];
        int c = std::countr_one(used);
        greedy[v] = c;
        upper = std::max(upper, c + 1);
    }

    for (int k = lower; k < upper; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        if (detail::dsatur_colorable(g, k, color, 0, -1)) return k;
    }
    return upper;
}

/// Homomorphism source with a memoized chromatic number.
struct PatternGraph {
    Graph graph;
    mutable std::optional<int> chromatic_number_cache;

    PatternGraph() = default;
    explicit PatternGraph(Graph g) : graph(std::move(g)) {}

    int chromatic(const SearchLimits& limits = {}) const {
        if (!chromatic_number_cache) chromatic_number_cache = chromatic_number(graph, limits);
        return *chromatic_number_cache;
    }
};

/// True iff no homomorphic image of the pattern appears in the host.
inline bool is_hom_free(const Graph& host, const Graph& pattern, const SearchLimits& limits = {}) {
    return !hom_exists(pattern, host, limits).has_value();
}

inline bool is_hom_free(const Graph& host, const PatternGraph& pattern,
                        const SearchLimits& limits = {}) {
    return is_hom_free(host, pattern.graph, limits);
}

}  // namespace turanstab
