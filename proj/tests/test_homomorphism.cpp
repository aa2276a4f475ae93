#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "example_graphs.hpp"
#include "turanstab/homomorphism.hpp"
#include "turanstab/rng.hpp"

using namespace turanstab;
using example_graphs::complete;
using example_graphs::cycle;
using example_graphs::edgeless;
using example_graphs::petersen;

namespace {

bool valid_hom(const Graph& f, const Graph& h, const std::vector<int>& map) {
    for (auto [u, v] : f.edges())
        if (!h.has_edge(map[u], map[v])) return false;
    return true;
}

}  // namespace

TEST_CASE("contains_clique") {
    auto w = contains_clique(complete(4), 3);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{0, 1, 2});

    CHECK_FALSE(contains_clique(petersen(), 3).has_value());

    auto [t63, parts] = turan_graph(6, 3);
    CHECK_FALSE(contains_clique(t63, 4).has_value());
    CHECK(contains_clique(t63, 3).has_value());

    CHECK(contains_clique(edgeless(2), 1).has_value());
    CHECK_FALSE(contains_clique(edgeless(0), 1).has_value());
    CHECK_THROWS_AS(contains_clique(edgeless(2), 0), InputError);
}

TEST_CASE("petersen is triangle-free by full triple enumeration") {
    Graph g = petersen();
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c)
                CHECK_FALSE((g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)));
}

TEST_CASE("hom_exists") {
    Graph c5 = cycle(5);
    auto self = hom_exists(c5, c5);
    REQUIRE(self.has_value());
    CHECK(valid_hom(c5, c5, *self));

    CHECK_FALSE(hom_exists(complete(3), petersen()).has_value());

    auto to_k3 = hom_exists(c5, complete(3));
    REQUIRE(to_k3.has_value());
    CHECK(valid_hom(c5, complete(3), *to_k3));

    CHECK(hom_exists(edgeless(0), c5).has_value());          // empty map
    CHECK_FALSE(hom_exists(edgeless(1), edgeless(0)).has_value());
}

TEST_CASE("hom search matches naive map enumeration") {
    // ground truth: try all |V(H)|^|V(F)| maps
    auto naive_hom = [](const Graph& f, const Graph& h) {
        int nf = f.vertex_count(), nh = h.vertex_count();
        if (nf == 0) return true;
        if (nh == 0) return false;
        std::vector<int> map(static_cast<std::size_t>(nf), 0);
        auto edges = f.edges();
        while (true) {
            bool ok = true;
            for (auto [u, v] : edges)
                if (!h.has_edge(map[u], map[v])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
            int i = nf - 1;
            while (i >= 0 && map[i] == nh - 1) map[i--] = 0;
            if (i < 0) return false;
            ++map[i];
        }
    };
    SplitMix64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        int nf = static_cast<int>(rng.bounded(6));  // 0..5
        int nh = static_cast<int>(rng.bounded(6));
        Graph f = example_graphs::random_gnp(nf, 1, 2, rng);
        Graph h = example_graphs::random_gnp(nh, 1, 2, rng);
        CHECK(hom_exists(f, h).has_value() == naive_hom(f, h));
    }

    // classic pair: the 5-cycle embeds in the Petersen graph, not vice versa
    CHECK(hom_exists(cycle(5), petersen()).has_value());
    CHECK_FALSE(hom_exists(petersen(), cycle(5)).has_value());
}

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(turan_graph(7, 3).first) == 3);
    CHECK(chromatic_number(edgeless(4)) == 1);
    CHECK(chromatic_number(edgeless(0)) == 0);
    CHECK(chromatic_number(complete(6)) == 6);
    CHECK(chromatic_number(cycle(6)) == 2);
}

TEST_CASE("is_hom_free") {
    CHECK(is_hom_free(turan_graph(8, 2).first, complete(3)));  // bipartite host
    CHECK_FALSE(is_hom_free(complete(3), cycle(5)));           // chi(C5)=3 <= 3
    CHECK(is_hom_free(cycle(5), complete(3)));                 // triangle-free host
}

TEST_CASE("pattern graph caches its chromatic number") {
    PatternGraph f(cycle(5));
    CHECK_FALSE(f.chromatic_number_cache.has_value());
    CHECK(f.chromatic(SearchLimits{}) == 3);
    REQUIRE(f.chromatic_number_cache.has_value());
    CHECK(*f.chromatic_number_cache == 3);
}

TEST_CASE("guards fail loudly") {
    Graph big = edgeless(21);
    CHECK_THROWS_AS(hom_exists(big, big), CapabilityError);
    CHECK_THROWS_AS(chromatic_number(big), CapabilityError);
    SearchLimits raised;
    raised.pattern_vertices = 25;
    CHECK(chromatic_number(edgeless(21), raised) == 1);
}

TEST_CASE("clique homs match clique search") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.bounded(8));
        Graph h = example_graphs::random_gnp(n, 1, 2, rng);
        for (int k = 1; k <= 4; ++k)
            CHECK(hom_exists(complete(k), h).has_value() == contains_clique(h, k).has_value());
    }
}

TEST_CASE("hom into K_s exists exactly when s >= chi") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.bounded(8));  // 0..7
        Graph f = example_graphs::random_gnp(n, 1, 2, rng);
        int chi = chromatic_number(f);
        for (int s = 0; s <= 7; ++s)
            CHECK(hom_exists(f, complete(s)).has_value() == (s >= chi));
    }
}

TEST_CASE("chromatic number is monotone under subgraphs") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(7));
        Graph g = example_graphs::random_gnp(n, 2, 3, rng);
        int previous = chromatic_number(g);
        auto edges = g.edges();
        for (auto [u, v] : edges) {
            g.remove_edge(u, v);
            int current = chromatic_number(g);
            CHECK(current <= previous);
            previous = current;
        }
    }
}
