#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/limits.hpp"
#include "turanstab/partitioner.hpp"

namespace turanstab {

/// Partition whose parts are consecutive label blocks of the given sizes.
inline Partition contiguous_partition(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> parts;
    parts.reserve(sizes.size());
    int next = 0;
    for (int s : sizes) {
        if (s < 0) throw InputError("negative part size");
        std::vector<int> part(static_cast<std::size_t>(s));
        std::iota(part.begin(), part.end(), next);
        next += s;
        parts.push_back(std::move(part));
    }
    return Partition(next, std::move(parts));
}

/// Completes a graph to the multipartite graph of a partition and reports the
/// exact edit distance: internal edges dropped plus missing cross pairs added.
struct CompletionResult {
    Graph k;
    long long edit_distance = 0;
};

inline CompletionResult completion(const Graph& g, const Partition& p) {
    if (p.n != g.vertex_count())
        throw InputError("partition ambient size does not match graph");
    Graph k = complete_multipartite(p);
    long long ed = symmetric_difference_size(g, k);
    return {std::move(k), ed};
}

/// One vertex relocation of the rebalancing schedule.
struct Move {
    int vertex = -1;
    int from_part = -1;
    int to_part = -1;

    friend bool operator==(const Move& a, const Move& b) {
        return a.vertex == b.vertex && a.from_part == b.from_part && a.to_part == b.to_part;
    }
};

struct RebalanceResult {
    std::vector<Move> moves;
    Partition balanced;
    long long edit_distance = 0;  // |E(K(P)) △ E(K(balanced))|
};

/// Moves vertices out of oversized parts until the size multiset is the
/// balanced one. Targets are matched to parts by sorting both descending and
/// pairing by rank, which minimizes the number of moved vertices; the movers
/// are the highest-labeled vertices of each oversized part.
inline RebalanceResult rebalance_to_turan(const Partition& p) {
    p.validate();
    int parts_count = p.part_count();
    if (parts_count < 1) throw InputError("rebalance requires at least one part");
    auto sizes = p.sizes();
    auto targets_desc = turan_part_sizes(p.n, parts_count);

    std::vector<int> rank(static_cast<std::size_t>(parts_count));
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
    std::vector<int> target(static_cast<std::size_t>(parts_count));
    for (int r = 0; r < parts_count; ++r) target[rank[r]] = targets_desc[r];

    RebalanceResult result;
    std::vector<std::vector<int>> parts = p.parts;
    std::vector<std::pair<int, int>> pool;  // (vertex, donor part)
    for (int i = 0; i < parts_count; ++i)
        for (int excess = sizes[i] - target[i]; excess > 0; --excess) {
            pool.emplace_back(parts[i].back(), i);
            parts[i].pop_back();
        }
    std::size_t cursor = 0;
    for (int i = 0; i < parts_count; ++i)
        while (static_cast<int>(parts[i].size()) < target[i]) {
            auto [v, from] = pool[cursor++];
            result.moves.push_back({v, from, i});
            parts[i].push_back(v);
        }
    result.balanced = Partition(p.n, std::move(parts));
    result.edit_distance =
        symmetric_difference_size(complete_multipartite(p), complete_multipartite(result.balanced));
    return result;
}

/// Both balance bounds in cleared-denominator integer form:
///   imbalance   = sum_i (p*|V_i| - n)^2        checked against 4*t*p^2
///   ed to shape = ed(K(P), K(balanced))        checked as ed^2 * p <= n^2 * t
/// Only meaningful under the hypothesis e(K(P)) >= e(T_{n,p}) - 2t; when that
/// fails the verdicts carry no claim and applicable is false.
struct Co2Check {
    bool applicable = false;
    long long imbalance = 0;
    bool imbalance_ok = false;
    long long ed_k_tshape = 0;
    bool co2_ok = false;
};

inline long long part_size_imbalance(int n, int p, const std::vector<int>& sizes) {
    long long total = 0;
    for (int s : sizes) {
        long long d = static_cast<long long>(p) * s - n;
        total += d * d;
    }
    return total;
}

inline Co2Check co2_check(int n, int p, long long t, const std::vector<int>& part_sizes) {
    if (p < 1) throw InputError("p must be positive");
    if (static_cast<int>(part_sizes.size()) != p)
        throw InputError("co2_check expects exactly p part sizes");
    long long total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0LL);
    if (total != n) throw InputError("part sizes must sum to n");

    Co2Check out;
    out.applicable = complete_multipartite_edge_count(part_sizes) >= turan_edge_count(n, p) - 2 * t;
    out.imbalance = part_size_imbalance(n, p, part_sizes);
    out.imbalance_ok = out.imbalance <= 4 * t * static_cast<long long>(p) * p;
    out.ed_k_tshape = rebalance_to_turan(contiguous_partition(part_sizes)).edit_distance;
    out.co2_ok = out.ed_k_tshape * out.ed_k_tshape * p <= static_cast<long long>(n) * n * t;
    return out;
}

/// Full stability certificate for a K_{p+1}-free graph: the majorization
/// numbers, the completion distance against its 3t bound, and the two balance
/// bounds for the resulting part sizes.
struct StabilityCertificate {
    long long n = 0;
    long long p = 0;
    long long t = 0;
    long long s = 0;
    long long internal_total = 0;
    long long h0_edges = 0;
    long long ed_g_k = 0;
    bool bound_3t_ok = false;
    std::vector<int> part_sizes;
    long long imbalance = 0;
    bool imbalance_ok = false;
    long long ed_k_tshape = 0;
    bool co2_ok = false;
    std::uint64_t seed = 0;

    bool all_bounds_ok() const { return bound_3t_ok && imbalance_ok && co2_ok; }
};

struct StabilityResult {
    StabilityCertificate certificate;
    MajorizationResult majorization;
    Graph k;
    RebalanceResult rebalance;
};

inline StabilityResult stability_certificate(const Graph& g, int p,
                                             const SearchLimits& limits = {}) {
    StabilityResult result;
    result.majorization = majorization_certificate(g, p, limits);
    auto comp = completion(g, result.majorization.partition);
    result.k = std::move(comp.k);
    result.rebalance = rebalance_to_turan(result.majorization.partition);

    const auto& mc = result.majorization.certificate;
    auto& cert = result.certificate;
    cert.n = mc.n;
    cert.p = mc.p;
    cert.t = mc.t;
    cert.s = result.majorization.trace.step_count();
    cert.internal_total = mc.internal_total;
    cert.h0_edges = mc.h0_edges;
    cert.ed_g_k = comp.edit_distance;
    cert.bound_3t_ok = cert.ed_g_k <= 3 * cert.t;
    cert.part_sizes = result.majorization.partition.sizes();
    cert.imbalance = part_size_imbalance(static_cast<int>(cert.n), p, cert.part_sizes);
    cert.imbalance_ok = cert.imbalance <= 4 * cert.t * cert.p * cert.p;
    cert.ed_k_tshape = result.rebalance.edit_distance;
    cert.co2_ok = cert.ed_k_tshape * cert.ed_k_tshape * cert.p <= cert.n * cert.n * cert.t;
    return result;
}

}  // namespace turanstab
