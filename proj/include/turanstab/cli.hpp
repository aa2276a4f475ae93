#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "turanstab/generators.hpp"
#include "turanstab/io.hpp"
#include "turanstab/limits.hpp"
#include "turanstab/oracle.hpp"
#include "turanstab/stability.hpp"

namespace turanstab {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMathViolation = 2;
inline constexpr int kExitGuard = 3;

namespace detail {

inline std::string witness_text(const std::vector<int>& witness) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
    out << '}';
    return out.str();
}

inline std::vector<long long> parse_grid(const std::string& token, const std::string& what) {
    // "5", "0..8", "0..8/2", or "0,1,4"
    std::vector<long long> out;
    if (token.find(',') != std::string::npos) {
        for (const auto& t : split(token, ',')) out.push_back(parse_number<long long>(t, what));
        return out;
    }
    auto dots = token.find("..");
    if (dots == std::string::npos) {
        out.push_back(parse_number<long long>(token, what));
        return out;
    }
    long long lo = parse_number<long long>(token.substr(0, dots), what);
    std::string rest = token.substr(dots + 2);
    long long step = 1;
    if (auto slash = rest.find('/'); slash != std::string::npos) {
        step = parse_number<long long>(rest.substr(slash + 1), what + " step");
        rest = rest.substr(0, slash);
    }
    long long hi = parse_number<long long>(rest, what);
    if (step < 1) throw InputError(what + ": step must be positive");
    if (hi < lo) throw InputError(what + ": empty range '" + token + "'");
    for (long long v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

}  // namespace detail

/// One family of instances in a sweep: a grid over n, p and the generator
/// parameter, replicated; instance seeds are seed_base + running index.
struct SweepRange {
    GenKind kind = GenKind::perturbed_turan;
    std::vector<long long> ns;
    std::vector<long long> ps;
    std::vector<long long> ks;         // perturbed_turan grid
    std::optional<Rational> probability;  // the probabilistic kinds
    std::vector<int> explicit_sizes;  // sub_multipartite only
    std::uint64_t seed_base = 0;
    int reps = 1;
};

struct SweepConfig {
    std::string output;
    bool oracle = false;
    std::vector<SweepRange> ranges;

    static SweepConfig parse(std::istream& in);

    std::vector<GenSpec> expand() const {
        std::vector<GenSpec> specs;
        for (const auto& r : ranges) {
            std::uint64_t ordinal = 0;
            std::vector<long long> params =
                r.kind == GenKind::perturbed_turan ? r.ks : std::vector<long long>{0};
            for (long long n : r.ns)
                for (long long p : r.ps)
                    for (long long param : params)
                        for (int rep = 0; rep < r.reps; ++rep) {
                            GenSpec spec;
                            spec.kind = r.kind;
                            spec.n = static_cast<int>(n);
                            spec.p = static_cast<int>(p);
                            spec.k = param;
                            spec.probability = r.probability.value_or(Rational{});
                            spec.explicit_sizes = r.explicit_sizes;
                            spec.seed = r.seed_base + ordinal++;
                            specs.push_back(std::move(spec));
                        }
        }
        return specs;
    }
};

inline SweepConfig SweepConfig::parse(std::istream& in) {
    SweepConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fail = [&](const std::string& msg) {
            throw InputError("config line " + std::to_string(line_no) + ": " + msg);
        };
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed.resize(pos);
        std::istringstream tokens(trimmed);
        std::string head;
        if (!(tokens >> head)) continue;
        if (head == "output") {
            std::string eq, value;
            if (!(tokens >> eq >> value) || eq != "=") fail("expected 'output = <path>'");
            config.output = value;
        } else if (head == "oracle") {
            std::string eq, value;
            if (!(tokens >> eq >> value) || eq != "=" || (value != "on" && value != "off"))
                fail("expected 'oracle = on|off'");
            config.oracle = value == "on";
        } else if (head == "range") {
            SweepRange range;
            std::string kind;
            if (!(tokens >> kind)) fail("range needs a generator kind");
            if (kind == "perturbed_turan")
                range.kind = GenKind::perturbed_turan;
            else if (kind == "sub_multipartite")
                range.kind = GenKind::sub_multipartite;
            else if (kind == "clique_broken_gnp")
                range.kind = GenKind::clique_broken_gnp;
            else
                fail("unknown generator kind '" + kind + "'");
            std::string token;
            while (tokens >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos) fail("expected key=value, got '" + token + "'");
                std::string key = token.substr(0, eq), value = token.substr(eq + 1);
                if (key == "n")
                    range.ns = detail::parse_grid(value, "n");
                else if (key == "p")
                    range.ps = detail::parse_grid(value, "p");
                else if (key == "k")
                    range.ks = detail::parse_grid(value, "k");
                else if (key == "keep" || key == "prob")
                    range.probability = detail::parse_rational(value);
                else if (key == "sizes") {
                    for (const auto& t : detail::split(value, '-'))
                        range.explicit_sizes.push_back(detail::parse_number<int>(t, "part size"));
                } else if (key == "seed")
                    range.seed_base = detail::parse_number<std::uint64_t>(value, "seed");
                else if (key == "reps") {
                    range.reps = detail::parse_number<int>(value, "reps");
                    if (range.reps < 1) fail("reps must be positive");
                } else
                    fail("unknown key '" + key + "'");
            }
            if (range.ns.empty()) fail("range needs n=");
            if (range.ps.empty()) fail("range needs p=");
            if (range.kind == GenKind::perturbed_turan) {
                if (range.ks.empty()) fail("perturbed_turan range needs k=");
            } else if (!range.probability) {
                fail(to_string(range.kind) + " range needs " +
                     (range.kind == GenKind::sub_multipartite ? "keep=" : "prob="));
            }
            if (!range.explicit_sizes.empty()) {
                if (range.kind != GenKind::sub_multipartite)
                    fail("sizes= is only valid for sub_multipartite");
                long long total = std::accumulate(range.explicit_sizes.begin(),
                                                  range.explicit_sizes.end(), 0LL);
                if (range.ns.size() != 1 || range.ps.size() != 1 ||
                    total != range.ns.front() ||
                    static_cast<long long>(range.explicit_sizes.size()) != range.ps.front())
                    fail("sizes= requires single n and p matching the size list");
            }
            config.ranges.push_back(std::move(range));
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    return config;
}

namespace detail {

inline OracleColumns oracle_columns(const Graph& g, const StabilityResult& result, int p,
                                    const SearchLimits& limits) {
    auto report = oracle_report(g, p, limits);
    const auto& c = result.certificate;
    OracleColumns cols;
    cols.exact_ed = report.exact_ed_to_p_partite;
    cols.max_p_partite_edges = report.max_p_partite_edges;
    cols.ok = cols.exact_ed <= c.ed_g_k && c.h0_edges <= cols.max_p_partite_edges &&
              cols.max_p_partite_edges <= g.edge_count();
    return cols;
}

}  // namespace detail

/// partition: print the majorization trace and deletion-bound certificate.
inline int cmd_partition(const std::string& input_path, int p, std::ostream& out,
                         std::ostream& err, const SearchLimits& limits = {}) {
    try {
        Graph g = read_edge_list_file(input_path);
        auto result = majorization_certificate(g, p, limits);
        out << "# turanstab-trace-v1\n";
        out << trace_to_text(result.trace);
        out << certificate_to_text(result.certificate, result.trace.step_count());
        return result.certificate.bound_ok ? kExitOk : kExitMathViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << ", witness " << detail::witness_text(e.clique_witness)
            << '\n';
        return kExitMathViolation;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
}

/// verify: print one certificate CSV row; exit 0 iff every verdict holds.
inline int cmd_verify(const std::string& input_path, int p, bool with_oracle, std::uint64_t seed,
                      std::ostream& out, std::ostream& err, const SearchLimits& limits = {}) {
    try {
        Graph g = read_edge_list_file(input_path);
        if (with_oracle && g.vertex_count() > limits.oracle_vertices(p))
            throw CapabilityError("--with-oracle requires n <= " +
                                  std::to_string(limits.oracle_vertices(p)) +
                                  " for p=" + std::to_string(p));
        auto result = stability_certificate(g, p, limits);
        result.certificate.seed = seed;
        std::optional<OracleColumns> oracle;
        if (with_oracle) oracle = detail::oracle_columns(g, result, p, limits);
        out << certificate_csv_schema(with_oracle) << '\n'
            << certificate_csv_header(with_oracle) << '\n'
            << certificate_csv_row(result.certificate, oracle) << '\n';
        bool ok = result.majorization.certificate.bound_ok &&
                  result.certificate.all_bounds_ok() && (!oracle || oracle->ok);
        return ok ? kExitOk : kExitMathViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << ", witness " << detail::witness_text(e.clique_witness)
            << '\n';
        return kExitMathViolation;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
}

/// gen: materialize one generator spec into an edge-list file.
inline int cmd_gen(const std::string& spec_line, const std::string& output_path,
                   std::optional<std::uint64_t> seed_override, std::ostream& out,
                   std::ostream& err, const SearchLimits& limits = {}) {
    try {
        GenSpec spec = GenSpec::parse(spec_line);
        if (seed_override) spec.seed = *seed_override;
        Graph g = generate(spec, limits);
        write_edge_list_file(g, output_path);
        out << "wrote " << output_path << ": n=" << g.vertex_count() << " m=" << g.edge_count()
            << " (" << spec.to_line() << ")\n";
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
}

/// sweep: run every instance of a config, write the certificate CSV, and
/// append a failure-count summary line. Byte-identical for identical configs.
inline int cmd_sweep(const std::string& config_path, const std::optional<std::string>& out_path,
                     std::ostream& out, std::ostream& err, const SearchLimits& limits = {}) {
    try {
        std::ifstream config_in(config_path);
        if (!config_in) throw InputError("cannot open '" + config_path + "'");
        SweepConfig config = SweepConfig::parse(config_in);
        if (out_path) config.output = *out_path;
        if (config.output.empty()) throw InputError("sweep needs an output path (config or --out)");

        auto specs = config.expand();
        if (config.oracle)
            for (const auto& spec : specs)
                if (spec.n > limits.oracle_vertices(spec.p))
                    throw CapabilityError("oracle sweep instance " + spec.to_line() +
                                          " exceeds guard n <= " +
                                          std::to_string(limits.oracle_vertices(spec.p)));

        std::ofstream file(config.output);
        if (!file) throw InputError("cannot open '" + config.output + "' for writing");
        file << certificate_csv_schema(config.oracle) << '\n'
             << certificate_csv_header(config.oracle) << '\n';

        long long fail_deletion = 0, fail_completion = 0, fail_imbalance = 0, fail_co2 = 0,
                  fail_oracle = 0;
        for (const auto& spec : specs) {
            Graph g = generate(spec, limits);
            auto result = stability_certificate(g, spec.p, limits);
            result.certificate.seed = spec.seed;
            std::optional<OracleColumns> oracle;
            if (config.oracle) {
                oracle = detail::oracle_columns(g, result, spec.p, limits);
                if (!oracle->ok) ++fail_oracle;
            }
            if (!result.majorization.certificate.bound_ok) ++fail_deletion;
            if (!result.certificate.bound_3t_ok) ++fail_completion;
            if (!result.certificate.imbalance_ok) ++fail_imbalance;
            if (!result.certificate.co2_ok) ++fail_co2;
            file << certificate_csv_row(result.certificate, oracle) << '\n';
        }
        long long total =
            fail_deletion + fail_completion + fail_imbalance + fail_co2 + fail_oracle;
        file << "# failures deletion=" << fail_deletion << " completion=" << fail_completion
             << " imbalance=" << fail_imbalance << " co2=" << fail_co2
             << " oracle=" << fail_oracle << " total=" << total << '\n';
        out << "wrote " << config.output << ": " << specs.size() << " rows, failure total="
            << total << '\n';
        return total == 0 ? kExitOk : kExitMathViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << ", witness " << detail::witness_text(e.clique_witness)
            << '\n';
        return kExitMathViolation;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
}

/// Optional guard overrides from the environment; unset variables leave the
/// built-in defaults untouched.
inline SearchLimits limits_from_env(SearchLimits base = {}) {
    auto read = [](const char* name) -> std::optional<int> {
        const char* raw = std::getenv(name);
        if (raw == nullptr || *raw == '\0') return std::nullopt;
        int value = detail::parse_number<int>(raw, std::string("environment variable ") + name);
        if (value < 1) throw InputError(std::string(name) + " must be positive");
        return value;
    };
    if (auto v = read("TURANSTAB_PATTERN_GUARD")) base.pattern_vertices = *v;
    if (auto v = read("TURANSTAB_CLIQUE_GUARD")) base.clique_check_vertices = *v;
    if (auto v = read("TURANSTAB_ORACLE_GUARD")) {
        base.oracle_vertices_small_p = *v;
        base.oracle_vertices_large_p = *v;
    }
    return base;
}

}  // namespace turanstab
