#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "example_graphs.hpp"
#include "turanstab/cli.hpp"
#include "turanstab/io.hpp"

using namespace turanstab;
using Catch::Matchers::ContainsSubstring;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    auto dir = fs::temp_directory_path() / "turanstab_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = temp_file(name);
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("edge list round trip") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        int n = static_cast<int>(rng.bounded(12));
        Graph g = example_graphs::random_gnp(n, 1, 2, rng);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        CHECK(read_edge_list(in) == g);
    }
}

TEST_CASE("edge list parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream in(text);
        CHECK_THROWS_WITH(read_edge_list(in), ContainsSubstring(fragment));
    };
    expect_error("", "line 1");
    expect_error("3\n", "expected 2 integers");
    expect_error("3 2\n0 1\n", "file ended");
    expect_error("3 1\n1 0\n", "line 2: edges must have u < v");
    expect_error("3 1\n1 1\n", "line 2: self-loop");
    expect_error("3 1\n0 3\n", "line 2: vertex out of range");
    expect_error("3 2\n0 1\n0 1\n", "line 3: duplicate edge");
    expect_error("3 1\n0 1\nstray\n", "line 3: trailing content");
    expect_error("3 1\n0 1 2\n", "line 2: expected 2 integers");
    expect_error("99999999999 0\n", "too large");

    std::istringstream trailing_blank("3 1\n0 1\n\n  \n");
    CHECK(read_edge_list(trailing_blank).edge_count() == 1);
}

TEST_CASE("cmd_gen writes canonical edge lists") {
    auto out_path = temp_file("gen_t52.txt").string();
    std::ostringstream out, err;
    CHECK(cmd_gen("perturbed_turan:5:2:0:0", out_path, {}, out, err) == kExitOk);
    CHECK(slurp(out_path) == "5 6\n0 1\n0 3\n1 2\n1 4\n2 3\n3 4\n");
    CHECK_THAT(out.str(), ContainsSubstring("n=5 m=6"));

    auto empty_path = temp_file("gen_empty.txt").string();
    CHECK(cmd_gen("perturbed_turan:6:3:12:7", empty_path, {}, out, err) == kExitOk);
    CHECK(slurp(empty_path) == "6 0\n");

    auto star_path = temp_file("gen_star.txt").string();
    CHECK(cmd_gen("sub_multipartite:6:2:1/1@5-1:0", star_path, {}, out, err) == kExitOk);
    CHECK(read_edge_list_file(star_path).edge_count() == 5);

    CHECK(cmd_gen("perturbed_turan:5:2:99:0", out_path, {}, out, err) == kExitInputError);
    CHECK_THAT(err.str(), ContainsSubstring("k=99"));
}

TEST_CASE("cmd_gen seed override changes the instance") {
    auto a = temp_file("gen_seed_a.txt").string();
    auto b = temp_file("gen_seed_b.txt").string();
    std::ostringstream out, err;
    REQUIRE(cmd_gen("perturbed_turan:12:2:9:1:", a, {}, out, err) == kExitInputError);  // bad spec
    REQUIRE(cmd_gen("perturbed_turan:12:2:9:1", a, {}, out, err) == kExitOk);
    REQUIRE(cmd_gen("perturbed_turan:12:2:9:1", b, std::uint64_t{2}, out, err) == kExitOk);
    CHECK(slurp(a) != slurp(b));
}

TEST_CASE("cmd_partition") {
    std::ostringstream c5_text;
    write_edge_list(example_graphs::cycle(5), c5_text);
    auto c5 = write_temp("partition_c5.txt", c5_text.str());

    std::ostringstream out, err;
    CHECK(cmd_partition(c5, 2, out, err) == kExitOk);
    CHECK_THAT(out.str(), ContainsSubstring("step=1 pivot=0 part={0,2,3}"));
    CHECK_THAT(out.str(),
               ContainsSubstring("n=5 p=2 s=2 t=1 internal_total=1 h0_edges=4 bound_ok=1"));

    std::ostringstream k4_text;
    write_edge_list(example_graphs::complete(4), k4_text);
    auto k4 = write_temp("partition_k4.txt", k4_text.str());
    std::ostringstream out2, err2;
    CHECK(cmd_partition(k4, 2, out2, err2) == kExitMathViolation);
    CHECK_THAT(err2.str(), ContainsSubstring("witness {0,1,2}"));

    auto bad = write_temp("partition_bad.txt", "2 1\n1 1\n");
    std::ostringstream out3, err3;
    CHECK(cmd_partition(bad, 2, out3, err3) == kExitInputError);
    CHECK(cmd_partition(temp_file("absent.txt").string(), 2, out3, err3) == kExitInputError);
}

TEST_CASE("cmd_verify") {
    std::ostringstream t93_text;
    write_edge_list(turan_graph(9, 3).first, t93_text);
    auto t93 = write_temp("verify_t93.txt", t93_text.str());
    std::ostringstream out, err;
    CHECK(cmd_verify(t93, 3, false, 0, out, err) == kExitOk);
    CHECK_THAT(out.str(), ContainsSubstring("# turanstab-cert-v1"));
    CHECK_THAT(out.str(), ContainsSubstring("\n9,3,0,3,0,27,0,1,0,1,0,1,0\n"));

    std::ostringstream c5_text;
    write_edge_list(example_graphs::cycle(5), c5_text);
    auto c5 = write_temp("verify_c5.txt", c5_text.str());
    std::ostringstream out2, err2;
    CHECK(cmd_verify(c5, 2, true, 0, out2, err2) == kExitOk);
    CHECK_THAT(out2.str(), ContainsSubstring("# turanstab-cert-oracle-v1"));
    CHECK_THAT(out2.str(), ContainsSubstring("\n5,2,1,2,1,4,3,1,2,1,0,1,0,3,4,1\n"));

    std::ostringstream big_text;
    write_edge_list(turan_graph(16, 2).first, big_text);
    auto big = write_temp("verify_big.txt", big_text.str());
    std::ostringstream out3, err3;
    CHECK(cmd_verify(big, 2, true, 0, out3, err3) == kExitGuard);
    CHECK(cmd_verify(big, 2, false, 0, out3, err3) == kExitOk);

    // t=0 with p not dividing n trips the imbalance verdict (4t bound has no
    // room for the balanced-shape remainder), surfacing as a failed-verdict exit
    std::ostringstream odd_text;
    write_edge_list(turan_graph(15, 2).first, odd_text);
    auto odd = write_temp("verify_odd.txt", odd_text.str());
    std::ostringstream out4, err4;
    CHECK(cmd_verify(odd, 2, false, 0, out4, err4) == kExitMathViolation);
    CHECK_THAT(out4.str(), ContainsSubstring("\n15,2,0,2,0,56,0,1,2,0,0,1,0\n"));
}

TEST_CASE("cmd_sweep runs a grid deterministically") {
    auto csv = temp_file("sweep_grid.csv").string();
    auto config = write_temp("sweep_grid.cfg",
                             "# demo corpus\n"
                             "output = " + csv + "\n"
                             "range perturbed_turan n=8..10 p=2 k=1..2 seed=5 reps=2\n");
    std::ostringstream out, err;
    REQUIRE(cmd_sweep(config, {}, out, err) == kExitOk);
    std::string first = slurp(csv);
    CHECK_THAT(first, ContainsSubstring("# turanstab-cert-v1"));
    CHECK_THAT(first, ContainsSubstring("# failures deletion=0 completion=0 imbalance=0 co2=0 "
                                        "oracle=0 total=0"));
    // 3 n-values x 2 k-values x 2 reps = 12 data rows
    CHECK(std::count(first.begin(), first.end(), '\n') == 15);

    std::ostringstream out2, err2;
    REQUIRE(cmd_sweep(config, {}, out2, err2) == kExitOk);
    CHECK(slurp(csv) == first);
}

TEST_CASE("cmd_sweep with no ranges emits a header-only csv") {
    auto csv = temp_file("sweep_empty.csv").string();
    auto config = write_temp("sweep_empty.cfg", "output = " + csv + "\n");
    std::ostringstream out, err;
    CHECK(cmd_sweep(config, {}, out, err) == kExitOk);
    CHECK(slurp(csv) ==
          "# turanstab-cert-v1\n" + certificate_csv_header(false) +
              "\n# failures deletion=0 completion=0 imbalance=0 co2=0 oracle=0 total=0\n");
}

TEST_CASE("cmd_sweep enforces the oracle guard up front") {
    auto csv = temp_file("sweep_guard.csv").string();
    auto config = write_temp("sweep_guard.cfg",
                             "output = " + csv + "\noracle = on\n"
                             "range perturbed_turan n=13 p=4 k=0 seed=1 reps=1\n");
    std::ostringstream out, err;
    CHECK(cmd_sweep(config, {}, out, err) == kExitGuard);
    CHECK_THAT(err.str(), ContainsSubstring("exceeds guard"));
}

TEST_CASE("cmd_sweep counts failed verdicts") {
    // t=0 with p not dividing n: the balanced-size slack makes the 4t bound
    // unattainable, so the imbalance verdict fails and the sweep reports it.
    auto csv = temp_file("sweep_fail.csv").string();
    auto config = write_temp("sweep_fail.cfg",
                             "output = " + csv + "\n"
                             "range perturbed_turan n=9 p=2 k=0 seed=1 reps=1\n");
    std::ostringstream out, err;
    CHECK(cmd_sweep(config, {}, out, err) == kExitMathViolation);
    CHECK_THAT(slurp(csv), ContainsSubstring("# failures deletion=0 completion=0 imbalance=1 "
                                             "co2=0 oracle=0 total=1"));
}

TEST_CASE("cmd_sweep input errors") {
    std::ostringstream out, err;
    CHECK(cmd_sweep(temp_file("no_such.cfg").string(), {}, out, err) == kExitInputError);

    auto bad = write_temp("sweep_bad.cfg", "range perturbed_turan n=5\n");
    CHECK(cmd_sweep(bad, {}, out, err) == kExitInputError);

    auto no_out = write_temp("sweep_noout.cfg",
                             "range perturbed_turan n=5 p=2 k=0 seed=0 reps=1\n");
    CHECK(cmd_sweep(no_out, {}, out, err) == kExitInputError);

    auto no_prob = write_temp("sweep_noprob.cfg",
                              "output = x.csv\nrange sub_multipartite n=6 p=2 seed=0 reps=1\n");
    CHECK(cmd_sweep(no_prob, {}, out, err) == kExitInputError);

    auto bad_sizes = write_temp("sweep_badsizes.cfg",
                                "output = x.csv\n"
                                "range sub_multipartite n=6 p=2 keep=1/2 sizes=4-1 seed=0 reps=1\n");
    CHECK(cmd_sweep(bad_sizes, {}, out, err) == kExitInputError);

    auto sized_csv = temp_file("sweep_sized.csv").string();
    auto sized = write_temp("sweep_sized.cfg",
                            "output = " + sized_csv + "\n"
                            "range sub_multipartite n=6 p=2 keep=1/1 sizes=5-1 seed=0 reps=1\n");
    CHECK(cmd_sweep(sized, {}, out, err) == kExitOk);  // star K_{1,5}: t=9-5=4, ed=0
    CHECK_THAT(slurp(sized_csv), ContainsSubstring("\n6,2,4,"));

    // --out override fills in the missing output path
    auto csv = temp_file("sweep_override.csv").string();
    CHECK(cmd_sweep(no_out, csv, out, err) == kExitMathViolation);  // k=0, n=5, p=2
    CHECK_THAT(slurp(csv), ContainsSubstring("imbalance=1"));
}

TEST_CASE("guard overrides come from the environment") {
    ::setenv("TURANSTAB_ORACLE_GUARD", "16", 1);
    ::setenv("TURANSTAB_PATTERN_GUARD", "22", 1);
    auto limits = limits_from_env();
    CHECK(limits.oracle_vertices_small_p == 16);
    CHECK(limits.oracle_vertices_large_p == 16);
    CHECK(limits.pattern_vertices == 22);
    CHECK(limits.clique_check_vertices == SearchLimits{}.clique_check_vertices);

    ::setenv("TURANSTAB_ORACLE_GUARD", "junk", 1);
    CHECK_THROWS_AS(limits_from_env(), InputError);
    ::unsetenv("TURANSTAB_ORACLE_GUARD");
    ::unsetenv("TURANSTAB_PATTERN_GUARD");
}
