#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/homomorphism.hpp"
#include "turanstab/limits.hpp"
#include "turanstab/rng.hpp"
#include "turanstab/stability.hpp"

namespace turanstab {

/// Edge-keep probability as an exact rational in [0, 1].
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

namespace detail {

/// k distinct values from [0, m), Floyd's algorithm: exactly k draws, uniform.
inline std::vector<long long> sample_without_replacement(long long m, long long k,
                                                         SplitMix64& rng) {
    std::set<long long> chosen;
    for (long long j = m - k; j < m; ++j) {
        long long x = static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(j + 1)));
        if (!chosen.insert(x).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

}  // namespace detail

/// T_{n,p} minus k distinct uniformly chosen edges. The output is K_{p+1}-free
/// with deficiency t = k exactly.
inline Graph perturbed_turan(int n, int p, long long k, std::uint64_t seed) {
    auto [g, partition] = turan_graph(n, p);
    (void)partition;
    long long m = g.edge_count();
    if (k < 0 || k > m)
        throw InputError("perturbed_turan: k=" + std::to_string(k) + " outside [0," +
                         std::to_string(m) + "]");
    SplitMix64 rng(seed);
    auto drop = detail::sample_without_replacement(m, k, rng);
    // walk edges in lexicographic order, removing the selected ranks
    std::size_t cursor = 0;
    long long rank = 0;
    for (int u = 0; u < n && cursor < drop.size(); ++u) {
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.next(u); v >= 0 && cursor < drop.size(); v = nb.next(v), ++rank)
            if (rank == drop[cursor]) {
                g.remove_edge(u, v);
                ++cursor;
            }
    }
    return g;
}

/// Random spanning subgraph of K(sizes): every cross edge kept independently
/// with the given probability. K_{p+1}-free by construction (p = |sizes|).
inline Graph sub_multipartite(const std::vector<int>& sizes, Rational keep, std::uint64_t seed) {
    if (keep.den == 0 || keep.num > keep.den)
        throw InputError("edge-keep probability must be a rational in [0,1]");
    Partition partition = contiguous_partition(sizes);
    auto owner = partition.part_of();
    Graph g(partition.n);
    SplitMix64 rng(seed);
    for (int u = 0; u < partition.n; ++u)
        for (int v = u + 1; v < partition.n; ++v) {
            if (owner[u] == owner[v]) continue;
            bool kept = keep.num == keep.den ? true
                        : keep.num == 0      ? false
                                             : rng.bounded(keep.den) < keep.num;
            if (kept) g.add_edge(u, v);
        }
    return g;
}

/// G(n, prob) with every K_{p+1} subsequently destroyed: while a witness clique
/// exists, its lexicographically smallest edge is deleted. Deterministic given
/// the seed; requires n within the clique guard.
inline Graph clique_broken_gnp(int n, int p, Rational prob, std::uint64_t seed,
                               const SearchLimits& limits = {}) {
    if (p < 1) throw InputError("p must be positive");
    if (n > limits.clique_check_vertices)
        throw CapabilityError("clique breaking on " + std::to_string(n) +
                              " vertices exceeds guard " +
                              std::to_string(limits.clique_check_vertices));
    if (prob.den == 0 || prob.num > prob.den)
        throw InputError("edge probability must be a rational in [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool kept = prob.num == prob.den ? true
                        : prob.num == 0      ? false
                                             : rng.bounded(prob.den) < prob.num;
            if (kept) g.add_edge(u, v);
        }
    while (auto witness = contains_clique(g, p + 1))
        g.remove_edge((*witness)[0], (*witness)[1]);  // witness is ascending
    return g;
}

enum class GenKind { perturbed_turan, sub_multipartite, clique_broken_gnp };

inline std::string to_string(GenKind kind) {
    switch (kind) {
        case GenKind::perturbed_turan: return "perturbed_turan";
        case GenKind::sub_multipartite: return "sub_multipartite";
        case GenKind::clique_broken_gnp: return "clique_broken_gnp";
    }
    throw InputError("unknown generator kind");
}

/// One reproducible instance description. Serializes to "kind:n:p:param:seed"
/// where param is k for perturbed_turan and num/den for the probabilistic
/// kinds; sub_multipartite takes optional explicit part sizes as
/// "num/den@s1-s2-...-sp" (default: balanced sizes).
struct GenSpec {
    GenKind kind = GenKind::perturbed_turan;
    int n = 0;
    int p = 1;
    long long k = 0;                  // perturbed_turan
    Rational probability;             // sub_multipartite / clique_broken_gnp
    std::vector<int> explicit_sizes;  // sub_multipartite only; empty = balanced
    std::uint64_t seed = 0;

    std::vector<int> sizes() const {
        if (!explicit_sizes.empty()) return explicit_sizes;
        return turan_part_sizes(n, p);
    }

    std::string to_line() const {
        std::ostringstream out;
        out << to_string(kind) << ':' << n << ':' << p << ':';
        if (kind == GenKind::perturbed_turan) {
            out << k;
        } else {
            out << probability.num << '/' << probability.den;
            if (!explicit_sizes.empty()) {
                out << '@';
                for (std::size_t i = 0; i < explicit_sizes.size(); ++i)
                    out << (i ? "-" : "") << explicit_sizes[i];
            }
        }
        out << ':' << seed;
        return out.str();
    }

    static GenSpec parse(const std::string& line);

    friend bool operator==(const GenSpec& a, const GenSpec& b) {
        return a.kind == b.kind && a.n == b.n && a.p == b.p && a.k == b.k &&
               a.probability == b.probability && a.explicit_sizes == b.explicit_sizes &&
               a.seed == b.seed;
    }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& token, const std::string& what) {
    std::istringstream in(token);
    T value;
    if (!(in >> value) || !(in >> std::ws).eof())
        throw InputError("invalid " + what + ": '" + token + "'");
    return value;
}

inline Rational parse_rational(const std::string& token) {
    auto parts = split(token, '/');
    if (parts.size() != 2) throw InputError("probability must look like num/den: '" + token + "'");
    Rational r{parse_number<std::uint64_t>(parts[0], "probability numerator"),
               parse_number<std::uint64_t>(parts[1], "probability denominator")};
    if (r.den == 0 || r.num > r.den)
        throw InputError("probability must be a rational in [0,1]: '" + token + "'");
    return r;
}

}  // namespace detail

inline GenSpec GenSpec::parse(const std::string& line) {
    auto fields = detail::split(line, ':');
    if (fields.size() != 5)
        throw InputError("generator spec must be kind:n:p:param:seed, got '" + line + "'");
    GenSpec spec;
    if (fields[0] == "perturbed_turan")
        spec.kind = GenKind::perturbed_turan;
    else if (fields[0] == "sub_multipartite")
        spec.kind = GenKind::sub_multipartite;
    else if (fields[0] == "clique_broken_gnp")
        spec.kind = GenKind::clique_broken_gnp;
    else
        throw InputError("unknown generator kind '" + fields[0] + "'");
    spec.n = detail::parse_number<int>(fields[1], "vertex count");
    spec.p = detail::parse_number<int>(fields[2], "part count");
    if (spec.n < 0) throw InputError("vertex count must be nonnegative");
    if (spec.p < 1) throw InputError("part count must be positive");

    std::string param = fields[3];
    if (spec.kind == GenKind::perturbed_turan) {
        spec.k = detail::parse_number<long long>(param, "removed-edge count");
    } else {
        auto at = param.find('@');
        if (at != std::string::npos) {
            if (spec.kind != GenKind::sub_multipartite)
                throw InputError("explicit sizes are only valid for sub_multipartite");
            for (const auto& tok : detail::split(param.substr(at + 1), '-'))
                spec.explicit_sizes.push_back(detail::parse_number<int>(tok, "part size"));
            if (static_cast<int>(spec.explicit_sizes.size()) != spec.p)
                throw InputError("explicit sizes must list exactly p parts");
            long long total =
                std::accumulate(spec.explicit_sizes.begin(), spec.explicit_sizes.end(), 0LL);
            if (total != spec.n) throw InputError("explicit sizes must sum to n");
            param = param.substr(0, at);
        }
        spec.probability = detail::parse_rational(param);
    }
    spec.seed = detail::parse_number<std::uint64_t>(fields[4], "seed");
    return spec;
}

/// Materializes a spec. Identical specs yield identical graphs.
inline Graph generate(const GenSpec& spec, const SearchLimits& limits = {}) {
    switch (spec.kind) {
        case GenKind::perturbed_turan:
            return perturbed_turan(spec.n, spec.p, spec.k, spec.seed);
        case GenKind::sub_multipartite:
            return sub_multipartite(spec.sizes(), spec.probability, spec.seed);
        case GenKind::clique_broken_gnp:
            return clique_broken_gnp(spec.n, spec.p, spec.probability, spec.seed, limits);
    }
    throw InputError("unknown generator kind");
}

}  // namespace turanstab
