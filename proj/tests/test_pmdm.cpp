#include <catch_amalgamated.hpp>

#include "exhaustive.hpp"
#include "setlab/io.hpp"
#include "setlab/oracles.hpp"
#include "setlab/pmdm.hpp"

using namespace setlab;

namespace {

KPartiteGraph triangle() {
    KPartiteGraph g;
    g.k = 3;
    g.n = 1;
    g.edges = {{0, 1}, {0, 2}, {1, 2}};
    return g;
}

} // namespace

TEST_CASE("triangle construction dimensions") {
    const PmdmInstance inst = build_mcc_to_pmdm(triangle());
    CHECK(inst.dims == 6);    // n * k * (k-1)
    CHECK(inst.values == 6);  // k + C(k,2)
    CHECK(inst.multiedges.size() == 6);
    int vertex_edges = 0;
    for (const auto& p : inst.provenance)
        if (p.kind == PmdmProvenance::Kind::vertex) ++vertex_edges;
    CHECK(vertex_edges == 3);
}

TEST_CASE("triangle instance has a perfect matching using every multiedge") {
    const PmdmInstance inst = build_mcc_to_pmdm(triangle());
    const auto matching = oracle_pmdm(inst);
    REQUIRE(matching.has_value());
    CHECK(matching->size() == 6);
    CHECK(is_pmdm(inst, *matching));
}

TEST_CASE("dropping one edge kills the matching") {
    KPartiteGraph g = triangle();
    g.edges.pop_back();
    CHECK_FALSE(oracle_pmdm(build_mcc_to_pmdm(g)).has_value());
}

TEST_CASE("extract_clique returns the clique vertices") {
    const PmdmInstance inst = build_mcc_to_pmdm(triangle());
    const auto matching = oracle_pmdm(inst);
    REQUIRE(matching.has_value());
    const auto clique = extract_clique(inst, *matching);
    CHECK(clique == std::vector<PartVertex>{{0, 0}, {1, 0}, {2, 0}});
}

TEST_CASE("clique existence matches matching existence") {
    SplitMix64 rng(311);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(rng.below(2));
        const KPartiteGraph g = gen_random_kpartite(3, n, 250 + static_cast<int>(rng.below(600)),
                                                    rng.next());
        const PmdmInstance inst = build_mcc_to_pmdm(g);
        CAPTURE(t, n, g.edges.size());
        CHECK(oracle_pmdm(inst).has_value() == testref::multicolored_clique_exists(g));
    }
}

TEST_CASE("every matching uses one multiedge per value label") {
    SplitMix64 rng(313);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng.below(2));
        const KPartiteGraph g = gen_random_kpartite(3, n, 400, rng.next());
        const PmdmInstance inst = build_mcc_to_pmdm(g);
        const auto matching = oracle_pmdm(inst);
        if (!matching) continue;
        // the dominant value of a constructed multiedge is its label
        std::vector<int> label_count(static_cast<std::size_t>(inst.values), 0);
        for (int idx : *matching) {
            std::vector<int> freq(static_cast<std::size_t>(inst.values), 0);
            int label = 0;
            for (int v : inst.multiedges[idx])
                if (++freq[v] > freq[label]) label = v;
            ++label_count[label];
        }
        for (int c : label_count) CHECK(c == 1);
    }
}

TEST_CASE("generalized Sets and matchings coincide on constructed instances") {
    CHECK(check_set_matching_corollary(build_mcc_to_pmdm(triangle())));

    KPartiteGraph no_clique = triangle();
    no_clique.edges.pop_back();
    CHECK(check_set_matching_corollary(build_mcc_to_pmdm(no_clique)));

    PmdmInstance toy;
    toy.dims = 1;
    toy.values = 2;
    toy.multiedges = {{0}, {1}};
    CHECK(check_set_matching_corollary(toy));

    PmdmInstance big;
    big.dims = 1;
    big.values = 2;
    big.multiedges.assign(11, {0});
    CHECK_THROWS_AS(check_set_matching_corollary(big), CapacityError);
}
