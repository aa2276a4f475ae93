#pragma once

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/limits.hpp"
#include "turanstab/partitioner.hpp"
#include "turanstab/stability.hpp"

namespace turanstab {

/// Ground truth from exhaustive enumeration of all partitions of V into at
/// most p classes. Partitions are walked as restricted growth strings, which
/// quotients out class relabeling; ties go to the lexicographically smallest
/// string.
struct OracleReport {
    long long max_p_partite_edges = 0;
    Partition best_partition;
    long long exact_ed_to_p_partite = 0;
    Partition best_ed_partition;
    long long enumerated = 0;
};

namespace detail {

struct RgsSearch {
    const Graph& g;
    int n;
    int p;
    long long m;
    std::vector<long long> earlier_deg;  // |N(v) ∩ {0..v-1}|
    std::vector<int> assign;
    std::vector<VertexSet> classes;
    std::vector<long long> class_size;
    long long cut = 0;
    long long enumerated = 0;
    long long best_cut = -1;
    std::vector<int> best_cut_assign;
    long long best_ed = LLONG_MAX;
    std::vector<int> best_ed_assign;

    RgsSearch(const Graph& graph, int parts)
        : g(graph),
          n(graph.vertex_count()),
          p(parts),
          m(graph.edge_count()),
          assign(static_cast<std::size_t>(n), -1),
          classes(static_cast<std::size_t>(parts), VertexSet(n)),
          class_size(static_cast<std::size_t>(parts), 0) {
        VertexSet seen(n);
        earlier_deg.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            earlier_deg.push_back(g.restricted_degree(v, seen));
            seen.insert(v);
        }
    }

    void run(int v, int used) {
        if (v == n) {
            ++enumerated;
            long long squares = 0;
            for (long long s : class_size) squares += s * s;
            long long cross_pairs = (static_cast<long long>(n) * n - squares) / 2;
            long long ed = (m - cut) + (cross_pairs - cut);
            if (cut > best_cut) {
                best_cut = cut;
                best_cut_assign = assign;
            }
            if (ed < best_ed) {
                best_ed = ed;
                best_ed_assign = assign;
            }
            return;
        }
        int cap = std::min(used, p - 1);
        for (int c = 0; c <= cap; ++c) {
            long long same = g.neighbors(v).intersection_count(classes[c]);
            long long delta = earlier_deg[v] - same;
            cut += delta;
            classes[c].insert(v);
            ++class_size[c];
            assign[v] = c;
            run(v + 1, used + (c == used ? 1 : 0));
            assign[v] = -1;
            --class_size[c];
            classes[c].erase(v);
            cut -= delta;
        }
    }

    Partition to_partition(const std::vector<int>& a) const {
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(p));
        for (int v = 0; v < n; ++v) parts[a[v]].push_back(v);
        return Partition(n, std::move(parts));
    }
};

inline void check_oracle_guard(int n, int p, const SearchLimits& limits) {
    if (p < 1) throw InputError("p must be positive");
    int guard = limits.oracle_vertices(p);
    if (n > guard)
        throw CapabilityError("exhaustive partition search on " + std::to_string(n) +
                              " vertices exceeds guard " + std::to_string(guard) +
                              " for p=" + std::to_string(p));
}

}  // namespace detail

inline OracleReport oracle_report(const Graph& g, int p, const SearchLimits& limits = {}) {
    detail::check_oracle_guard(g.vertex_count(), p, limits);
    detail::RgsSearch search(g, p);
    search.run(0, 0);

    OracleReport report;
    report.enumerated = search.enumerated;
    report.max_p_partite_edges = search.best_cut;
    report.best_partition = search.to_partition(search.best_cut_assign);
    report.exact_ed_to_p_partite = search.best_ed;
    report.best_ed_partition = search.to_partition(search.best_ed_assign);

    // both optima are re-derived from their witness partitions before release
    if (p_partite_subgraph(g, report.best_partition).edge_count() != report.max_p_partite_edges)
        throw std::logic_error("oracle: max p-partite witness failed recount");
    if (completion(g, report.best_ed_partition).edit_distance != report.exact_ed_to_p_partite)
        throw std::logic_error("oracle: edit-distance witness failed recount");
    return report;
}

struct MaxPartiteResult {
    long long edges = 0;
    Partition partition;
};

/// Largest spanning subgraph kept by any map V -> {1..p}: exact, exhaustive.
inline MaxPartiteResult max_p_partite_subgraph(const Graph& g, int p,
                                               const SearchLimits& limits = {}) {
    auto report = oracle_report(g, p, limits);
    return {report.max_p_partite_edges, std::move(report.best_partition)};
}

struct ExactEditResult {
    long long edit_distance = 0;
    Partition partition;
};

/// Minimum edit distance from g to any complete (at most) p-partite graph on
/// the same labeled vertices: exact, exhaustive.
inline ExactEditResult exact_ed_to_p_partite(const Graph& g, int p,
                                             const SearchLimits& limits = {}) {
    auto report = oracle_report(g, p, limits);
    return {report.exact_ed_to_p_partite, std::move(report.best_ed_partition)};
}

namespace detail {

inline bool plain_colorable(const Graph& g, int k, int v, std::vector<int>& color, int used) {
    if (v == g.vertex_count()) return true;
    int cap = std::min(used, k - 1);
    for (int c = 0; c <= cap; ++c) {
        bool clash = false;
        for (int w : g.neighbors(v)) {
            if (w >= v) break;
            if (color[w] == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        color[v] = c;
        if (plain_colorable(g, k, v + 1, color, used + (c == used ? 1 : 0))) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace detail

/// Exact chromatic number by exhaustive k-colorability for k = 1, 2, ... with
/// vertices in label order and no heuristics, deliberately a different search
/// from homomorphism.hpp's bounded DSATUR, so the two can cross-check.
inline int chromatic_oracle(const Graph& g, const SearchLimits& limits = {}) {
    int n = g.vertex_count();
    if (n > limits.oracle_vertices_small_p)
        throw CapabilityError("exhaustive coloring on " + std::to_string(n) +
                              " vertices exceeds guard " +
                              std::to_string(limits.oracle_vertices_small_p));
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        if (detail::plain_colorable(g, k, 0, color, 0)) return k;
    }
}

}  // namespace turanstab
