#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "turanstab/graph.hpp"
#include "turanstab/partitioner.hpp"
#include "turanstab/stability.hpp"

namespace turanstab {

// ---------------------------------------------------------------------------
// Edge-list text format: header line "n m", then m lines "u v" with
// 0 <= u < v < n. Duplicates and self-loops are parse errors.
// ---------------------------------------------------------------------------

namespace detail {

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::vector<long long> line_numbers(const std::string& line, std::size_t expected,
                                           int line_no) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long x;
    while (in >> x) out.push_back(x);
    if (!(in >> std::ws).eof() || out.size() != expected)
        throw InputError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(expected) + " integers, got '" + line + "'");
    return out;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw InputError("line 1: missing 'n m' header");
    ++line_no;
    auto header = detail::line_numbers(line, 2, line_no);
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw InputError("line 1: negative counts in header");
    // adjacency is quadratic in bits; anything past this is outside the design envelope
    if (n > 100000) throw InputError("line 1: vertex count " + std::to_string(n) + " too large");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw InputError("line " + std::to_string(line_no + 1) + ": expected " +
                             std::to_string(m) + " edges, file ended after " + std::to_string(i));
        ++line_no;
        auto edge = detail::line_numbers(line, 2, line_no);
        long long u = edge[0], v = edge[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
        if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop");
        if (u >= v)
            throw InputError("line " + std::to_string(line_no) + ": edges must have u < v");
        if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
            throw InputError("line " + std::to_string(line_no) + ": duplicate edge");
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::blank(line))
            throw InputError("line " + std::to_string(line_no) + ": trailing content '" + line +
                             "'");
    }
    return g;
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u) {
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.next(u); v >= 0; v = nb.next(v)) out << u << ' ' << v << '\n';
    }
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return read_edge_list(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
}

// ---------------------------------------------------------------------------
// Majorization trace: one line per step for golden-file comparison.
// ---------------------------------------------------------------------------

inline std::string trace_to_text(const MajorizationTrace& trace) {
    std::ostringstream out;
    for (int i = 0; i < trace.step_count(); ++i) {
        const auto& s = trace.steps[i];
        out << "step=" << (i + 1) << " pivot=" << s.pivot << " part={";
        for (std::size_t j = 0; j < s.part.size(); ++j) out << (j ? "," : "") << s.part[j];
        out << "} residual=" << s.residual.size() << " degsum=" << s.degree_sum
            << " internal=" << s.internal_edges << " cross=" << s.cross_edges << '\n';
    }
    return out.str();
}

inline std::string certificate_to_text(const MajorizationCertificate& c, int steps) {
    std::ostringstream out;
    out << "n=" << c.n << " p=" << c.p << " s=" << steps << " t=" << c.t
        << " internal_total=" << c.internal_total << " h0_edges=" << c.h0_edges
        << " bound_ok=" << (c.bound_ok ? 1 : 0) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Certificate CSV. Fixed, versioned schema; booleans as 1/0.
// ---------------------------------------------------------------------------

struct OracleColumns {
    long long exact_ed = 0;
    long long max_p_partite_edges = 0;
    bool ok = false;
};

inline std::string certificate_csv_schema(bool with_oracle) {
    return with_oracle ? "# turanstab-cert-oracle-v1" : "# turanstab-cert-v1";
}

inline std::string certificate_csv_header(bool with_oracle) {
    std::string base =
        "n,p,t,s,internal_total,h0_edges,ed_G_K,bound_3t_ok,imbalance,imbalance_ok,"
        "ed_K_Tshape,co2_ok,seed";
    return with_oracle ? base + ",exact_ed,max_p_partite_edges,oracle_ok" : base;
}

inline std::string certificate_csv_row(const StabilityCertificate& c,
                                       const std::optional<OracleColumns>& oracle = {}) {
    std::ostringstream out;
    out << c.n << ',' << c.p << ',' << c.t << ',' << c.s << ',' << c.internal_total << ','
        << c.h0_edges << ',' << c.ed_g_k << ',' << (c.bound_3t_ok ? 1 : 0) << ',' << c.imbalance
        << ',' << (c.imbalance_ok ? 1 : 0) << ',' << c.ed_k_tshape << ',' << (c.co2_ok ? 1 : 0)
        << ',' << c.seed;
    if (oracle)
        out << ',' << oracle->exact_ed << ',' << oracle->max_p_partite_edges << ','
            << (oracle->ok ? 1 : 0);
    return out.str();
}

}  // namespace turanstab
