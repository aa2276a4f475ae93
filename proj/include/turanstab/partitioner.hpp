#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/homomorphism.hpp"
#include "turanstab/limits.hpp"

namespace turanstab {

/// One round of the degree-majorization sweep: the pivot (a maximum-degree
/// vertex of the residual graph), the part it spawns (its residual
/// non-neighborhood), the remaining residual, and the three edge counts tied
/// together by 2*internal + cross = degree_sum <= |part|*|residual|.
struct MajorizationStep {
    int pivot = -1;
    std::vector<int> part;
    std::vector<int> residual;
    long long degree_sum = 0;
    long long internal_edges = 0;
    long long cross_edges = 0;
};

struct MajorizationTrace {
    std::vector<MajorizationStep> steps;
    Partition partition;  // one part per step, in step order

    int step_count() const { return static_cast<int>(steps.size()); }

    long long internal_total() const {
        long long total = 0;
        for (const auto& s : steps) total += s.internal_edges;
        return total;
    }

    std::vector<int> pivots() const {
        std::vector<int> out;
        out.reserve(steps.size());
        for (const auto& s : steps) out.push_back(s.pivot);
        return out;
    }
};

/// Degree majorization: repeatedly pick a maximum-degree vertex of the residual
/// graph (smallest label among ties), split off its non-neighborhood as the
/// next part, and recurse on its neighborhood. Works on any graph; the number
/// of steps never exceeds the clique number because the pivots are pairwise
/// adjacent.
inline MajorizationTrace degree_majorization(const Graph& g) {
    int n = g.vertex_count();
    MajorizationTrace trace;
    trace.partition.n = n;
    VertexSet residual = VertexSet::full(n);
    while (!residual.empty()) {
        int pivot = -1, best = -1;
        for (int v : residual) {
            int d = g.restricted_degree(v, residual);
            if (d > best) {
                best = d;
                pivot = v;
            }
        }
        VertexSet part = residual - g.neighbors(pivot);
        VertexSet next_residual = residual & g.neighbors(pivot);

        MajorizationStep step;
        step.pivot = pivot;
        for (int v : part) step.degree_sum += g.restricted_degree(v, residual);
        step.internal_edges = g.edges_within(part);
        step.cross_edges = g.edges_between(part, next_residual);
        step.part = part.to_vector();
        step.residual = next_residual.to_vector();

        // construction invariants; a failure here is a library bug
        if (2 * step.internal_edges + step.cross_edges != step.degree_sum)
            throw std::logic_error("degree_majorization: handshake identity violated");
        if (step.degree_sum >
            static_cast<long long>(part.count()) * next_residual.count())
            throw std::logic_error("degree_majorization: majorization bound violated");

        trace.partition.parts.push_back(step.part);
        trace.steps.push_back(std::move(step));
        residual = next_residual;
    }
    auto piv = trace.pivots();
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = i + 1; j < piv.size(); ++j)
            if (!g.has_edge(piv[i], piv[j]))
                throw std::logic_error("degree_majorization: pivots are not a clique");
    return trace;
}

/// H_0: the graph minus every edge lying inside a part, i.e. the spanning
/// subgraph properly colored by the partition.
inline Graph p_partite_subgraph(const Graph& g, const Partition& p) {
    if (p.n != g.vertex_count())
        throw InputError("partition ambient size does not match graph");
    auto owner = p.part_of();
    Graph h(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.next(u); v >= 0; v = nb.next(v))
            if (owner[u] != owner[v]) h.add_edge(u, v);
    }
    return h;
}

/// Certifies that deleting the majorization partition's internal edges (at
/// most t = e(T_{n,p}) - e(G) of them) leaves a p-partite subgraph. The bound
/// is unconditional for K_{p+1}-free inputs, so bound_ok = false on a verified
/// input indicates an implementation bug.
struct MajorizationCertificate {
    long long n = 0;
    long long p = 0;
    long long t = 0;
    long long internal_total = 0;
    long long h0_edges = 0;
    bool bound_ok = false;
};

struct MajorizationResult {
    MajorizationCertificate certificate;
    MajorizationTrace trace;
    Partition partition;  // padded with empty parts to exactly p
    Graph h0;
};

inline MajorizationResult majorization_certificate(const Graph& g, int p,
                                                   const SearchLimits& limits = {}) {
    if (p < 1) throw InputError("p must be positive");
    int n = g.vertex_count();
    if (n <= limits.clique_check_vertices) {
        if (auto witness = contains_clique(g, p + 1))
            throw PreconditionError(
                "input is not K_" + std::to_string(p + 1) + "-free", *witness);
    }
    MajorizationResult result;
    result.trace = degree_majorization(g);
    if (result.trace.step_count() > p) {
        auto witness = result.trace.pivots();
        witness.resize(static_cast<std::size_t>(p) + 1);  // pivots are pairwise adjacent
        throw PreconditionError(
            "input is not K_" + std::to_string(p + 1) + "-free", witness);
    }
    result.partition = result.trace.partition.padded_to(p);
    result.h0 = p_partite_subgraph(g, result.partition);

    auto& cert = result.certificate;
    cert.n = n;
    cert.p = p;
    cert.t = turan_edge_count(n, p) - g.edge_count();
    cert.internal_total = result.trace.internal_total();
    cert.h0_edges = g.edge_count() - cert.internal_total;
    cert.bound_ok = cert.internal_total <= cert.t;
    if (result.h0.edge_count() != cert.h0_edges)
        throw std::logic_error("majorization_certificate: H0 edge count mismatch");
    return result;
}

}  // namespace turanstab
