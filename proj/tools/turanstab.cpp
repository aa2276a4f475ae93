// turanstab: partition certificates and stability bounds for K_{p+1}-free
// graphs. Subcommands: gen, partition, verify, sweep.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "turanstab/turanstab.hpp"

int main(int argc, char** argv) {
    CLI::App app{"certified near-Turán structure of clique-free graphs"};
    app.require_subcommand(1);

    std::string gen_spec, gen_out;
    auto* gen = app.add_subcommand("gen", "write one generated graph as an edge list");
    gen->add_option("spec", gen_spec, "generator spec kind:n:p:param:seed")->required();
    gen->add_option("--out", gen_out, "output edge-list path")->required();
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--seed", gen_seed, "override the spec's seed");

    std::string partition_input;
    int partition_p = 0;
    auto* partition =
        app.add_subcommand("partition", "run degree majorization and print the trace");
    partition->add_option("input", partition_input, "edge-list file")->required();
    partition->add_option("--p", partition_p, "number of parts (input must be K_{p+1}-free)")
        ->required();

    std::string verify_input;
    int verify_p = 0;
    bool verify_oracle = false;
    std::uint64_t verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "print a stability certificate CSV row");
    verify->add_option("input", verify_input, "edge-list file")->required();
    verify->add_option("--p", verify_p, "number of parts")->required();
    verify->add_flag("--with-oracle", verify_oracle,
                     "append exhaustive ground-truth columns (small n only)");
    verify->add_option("--seed", verify_seed, "seed recorded in the CSV row");

    std::string sweep_config;
    std::optional<std::string> sweep_out;
    auto* sweep = app.add_subcommand("sweep", "run a corpus config and write a certificate CSV");
    sweep->add_option("--config", sweep_config, "sweep config file")->required();
    sweep->add_option("--out", sweep_out, "override the config's output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : turanstab::kExitInputError;
    }

    try {
        turanstab::SearchLimits limits = turanstab::limits_from_env();
        if (gen->parsed())
            return turanstab::cmd_gen(gen_spec, gen_out, gen_seed, std::cout, std::cerr, limits);
        if (partition->parsed())
            return turanstab::cmd_partition(partition_input, partition_p, std::cout, std::cerr,
                                            limits);
        if (verify->parsed())
            return turanstab::cmd_verify(verify_input, verify_p, verify_oracle, verify_seed,
                                         std::cout, std::cerr, limits);
        if (sweep->parsed())
            return turanstab::cmd_sweep(sweep_config, sweep_out, std::cout, std::cerr, limits);
    } catch (const turanstab::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return turanstab::kExitInputError;
    }
    return turanstab::kExitInputError;
}
