#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "turanstab/errors.hpp"
#include "turanstab/vertex_set.hpp"

namespace turanstab {

/// Simple undirected graph on labeled vertices 0..n-1. No loops, no
/// multi-edges. Adjacency is one VertexSet row per vertex. Instances are
/// treated as immutable once built; every algorithm takes const&.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), VertexSet(n)) {
        if (n < 0) throw InputError("vertex count must be nonnegative");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].contains(v);
    }

    /// Inserts {u,v}; returns false if it was already present.
    bool add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop " + std::to_string(u) + " rejected");
        if (adj_[u].contains(v)) return false;
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
        return true;
    }

    /// Removes {u,v}; returns false if it was absent.
    bool remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v || !adj_[u].contains(v)) return false;
        adj_[u].erase(v);
        adj_[v].erase(u);
        --m_;
        return true;
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return adj_[v].count();
    }

    /// deg(v | a) = |N(v) ∩ a|.
    int restricted_degree(int v, const VertexSet& a) const {
        check_vertex(v);
        if (a.universe_size() != n_)
            throw InputError("restricted_degree: set universe does not match graph");
        return adj_[v].intersection_count(a);
    }

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    /// Number of edges with both ends in a.
    long long edges_within(const VertexSet& a) const {
        long long twice = 0;
        for (int v : a) twice += adj_[v].intersection_count(a);
        return twice / 2;
    }

    /// Number of edges with one end in a and the other in b; a and b must be disjoint.
    long long edges_between(const VertexSet& a, const VertexSet& b) const {
        long long c = 0;
        for (int v : a) c += adj_[v].intersection_count(b);
        return c;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Ordered list of disjoint vertex sets covering {0,...,n-1}. Empty parts are
/// legal; part membership is by position.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> parts;

    Partition() = default;
    Partition(int ambient, std::vector<std::vector<int>> p) : n(ambient), parts(std::move(p)) {
        for (auto& part : parts) std::sort(part.begin(), part.end());
    }

    int part_count() const { return static_cast<int>(parts.size()); }

    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(parts.size());
        for (const auto& p : parts) s.push_back(static_cast<int>(p.size()));
        return s;
    }

    /// part index per vertex; throws unless parts are disjoint and cover 0..n-1.
    std::vector<int> part_of() const {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < part_count(); ++i) {
            for (int v : parts[i]) {
                if (v < 0 || v >= n) throw InputError("partition contains out-of-range vertex");
                if (owner[v] != -1) throw InputError("partition parts are not disjoint");
                owner[v] = i;
            }
        }
        for (int v = 0; v < n; ++v)
            if (owner[v] == -1)
                throw InputError("partition does not cover vertex " + std::to_string(v));
        return owner;
    }

    void validate() const { (void)part_of(); }

    /// Appends empty parts until there are exactly k.
    Partition padded_to(int k) const {
        if (part_count() > k) throw InputError("partition already has more than k parts");
        Partition out = *this;
        out.parts.resize(static_cast<std::size_t>(k));
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n == b.n && a.parts == b.parts;
    }
};

inline long long pairs_of(long long k) { return k * (k - 1) / 2; }

/// K(V_1,...,V_k): every edge joining distinct parts, none inside a part.
inline Graph complete_multipartite(const Partition& p) {
    auto owner = p.part_of();
    Graph g(p.n);
    for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v)
            if (owner[u] != owner[v]) g.add_edge(u, v);
    return g;
}

/// Cross-pair count of a complete multipartite graph with the given part sizes.
inline long long complete_multipartite_edge_count(const std::vector<int>& sizes) {
    long long n = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    long long inside = 0;
    for (int s : sizes) {
        if (s < 0) throw InputError("negative part size");
        inside += pairs_of(s);
    }
    return pairs_of(n) - inside;
}

/// Balanced part sizes for n vertices in p parts: n mod p parts of size
/// ceil(n/p), the rest of size floor(n/p).
inline std::vector<int> turan_part_sizes(int n, int p) {
    if (p < 1) throw InputError("part count p must be positive");
    if (n < 0) throw InputError("vertex count must be nonnegative");
    std::vector<int> sizes(static_cast<std::size_t>(p), n / p);
    for (int i = 0; i < n % p; ++i) ++sizes[i];
    return sizes;
}

/// e(T_{n,p}) by the exact integer formula with r = n mod p.
inline long long turan_edge_count(int n, int p) {
    if (p < 1) throw InputError("part count p must be positive");
    if (n < 0) throw InputError("vertex count must be nonnegative");
    long long q = n / p, r = n % p;
    return pairs_of(n) - r * pairs_of(q + 1) - (p - r) * pairs_of(q);
}

/// The Turán graph T_{n,p} and its canonical partition (vertex v in part v mod p).
inline std::pair<Graph, Partition> turan_graph(int n, int p) {
    if (p < 1) throw InputError("part count p must be positive");
    if (n < 0) throw InputError("vertex count must be nonnegative");
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(p));
    for (int v = 0; v < n; ++v) parts[v % p].push_back(v);
    Partition partition(n, std::move(parts));
    return {complete_multipartite(partition), std::move(partition)};
}

/// Induced subgraph on a set of vertices, relabeled densely.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside the set
    std::vector<int> new_to_old;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    if (vertices.universe_size() != g.vertex_count())
        throw InputError("induced_subgraph: set universe does not match graph");
    InducedSubgraph out;
    out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    out.new_to_old = vertices.to_vector();
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
        out.old_to_new[out.new_to_old[i]] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
        const VertexSet& nb = g.neighbors(out.new_to_old[i]);
        for (std::size_t j = i + 1; j < out.new_to_old.size(); ++j)
            if (nb.contains(out.new_to_old[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

/// ed(G1,G2) = |E(G1) △ E(G2)| on a common labeled vertex set.
inline long long symmetric_difference_size(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw InputError("edit distance requires equal vertex counts");
    long long shared = 0;
    for (int v = 0; v < a.vertex_count(); ++v)
        shared += a.neighbors(v).intersection_count(b.neighbors(v));
    shared /= 2;
    return (a.edge_count() - shared) + (b.edge_count() - shared);
}

}  // namespace turanstab
