#include <catch_amalgamated.hpp>

#include <algorithm>

#include "exhaustive.hpp"
#include "setlab/hypergraph.hpp"
#include "setlab/io.hpp"

using namespace setlab;

namespace {

Hypergraph3 make(int n, std::vector<std::array<int, 3>> edges) {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    Hypergraph3 h{n, std::move(edges)};
    validate_hypergraph(h);
    return h;
}

} // namespace

TEST_CASE("hitting sets of one edge") {
    const Hypergraph3 h = make(3, {{0, 1, 2}});
    CHECK(enumerate_hitting_sets_7way(h, 1) ==
          std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(enumerate_hitting_sets_7way(h, 0).empty());
}

TEST_CASE("hitting sets of two disjoint edges") {
    const Hypergraph3 h = make(6, {{0, 1, 2}, {3, 4, 5}});
    const auto sets = enumerate_hitting_sets_7way(h, 2);
    CHECK(sets.size() == 9);  // one vertex per edge, 3 * 3 ways
    for (const VertexSet& s : sets) {
        REQUIRE(s.size() == 2);
        CHECK(s[0] <= 2);
        CHECK(s[1] >= 3);
    }
}

TEST_CASE("hitting-set family equals the exhaustive scan") {
    SplitMix64 rng(3);
    for (int t = 0; t < 40; ++t) {
        const int v = 5 + static_cast<int>(rng.below(6));
        const int e = 1 + static_cast<int>(rng.below(7));
        const Hypergraph3 h = gen_random_h3(v, e, rng.next());
        const int target = 1 + static_cast<int>(rng.below(4));
        CHECK(enumerate_hitting_sets_7way(h, target) == testref::all_hitting_sets(h, target));
    }
}

TEST_CASE("min_hitting_set basics") {
    const Hypergraph3 one = make(3, {{0, 1, 2}});
    const auto s = min_hitting_set(one, 1);
    REQUIRE(s.has_value());
    CHECK(s->size() == 1);

    const Hypergraph3 two = make(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(min_hitting_set(two, 1).has_value());

    const Hypergraph3 star = make(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    const auto hub = min_hitting_set(star, 1);
    REQUIRE(hub.has_value());
    CHECK(*hub == VertexSet{0});
}

TEST_CASE("min_hitting_set agrees with exhaustive existence") {
    SplitMix64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const int v = 5 + static_cast<int>(rng.below(8));
        const int e = static_cast<int>(rng.below(9));
        const Hypergraph3 h = gen_random_h3(v, e, rng.next());
        const int bound = static_cast<int>(rng.below(4));
        bool exists = false;
        for (int size = 0; size <= bound && !exists; ++size)
            exists = !testref::all_hitting_sets(h, size).empty();
        const auto result = min_hitting_set(h, bound);
        CHECK(result.has_value() == exists);
        if (result) {
            CHECK(static_cast<int>(result->size()) <= bound);
            CHECK(testref::hits_all(h, *result));
        }
    }
}

TEST_CASE("perfect matching checks") {
    CHECK(has_perfect_matching(make(3, {{0, 1, 2}})));
    CHECK_FALSE(has_perfect_matching(Hypergraph3{4, {}}));
    CHECK_FALSE(has_perfect_matching(make(5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST_CASE("perfect matching agrees with exhaustive scan") {
    SplitMix64 rng(29);
    for (int t = 0; t < 60; ++t) {
        const int v = 3 * (1 + static_cast<int>(rng.below(4)));
        const int e = std::min(static_cast<int>(rng.below(9)), v * (v - 1) * (v - 2) / 6);
        const Hypergraph3 h = gen_random_h3(v, e, rng.next());
        CHECK(has_perfect_matching(h) == testref::pm_exists(h));
        if (auto pm = find_perfect_matching(h)) {
            std::vector<int> cover(static_cast<std::size_t>(v), 0);
            for (int idx : *pm)
                for (int x : h.edges[idx]) ++cover[x];
            CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
        }
    }
}

TEST_CASE("min_vertex_cover basics") {
    SimpleGraph single{2, {{0, 1}}};
    CHECK(min_vertex_cover(single, 1).has_value());

    SimpleGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK_FALSE(min_vertex_cover(triangle, 1).has_value());

    SimpleGraph star{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    const auto c = min_vertex_cover(star, 1);
    REQUIRE(c.has_value());
    CHECK(*c == VertexSet{0});
}

TEST_CASE("min_vertex_cover agrees with exhaustive scan") {
    SplitMix64 rng(31);
    for (int t = 0; t < 40; ++t) {
        const int v = 3 + static_cast<int>(rng.below(10));
        const SimpleGraph g = gen_random_graph(v, 300, rng.next());
        const int bound = static_cast<int>(rng.below(5));
        CHECK(min_vertex_cover(g, bound).has_value() == testref::vertex_cover_at_most(g, bound));
    }
}

TEST_CASE("independent dominating edge sets") {
    const Hypergraph3 one = make(3, {{0, 1, 2}});
    CHECK(is_independent_dominating_edge_set(one, {0}));

    const Hypergraph3 two = make(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(is_independent_dominating_edge_set(two, {0}));

    const Hypergraph3 shared = make(5, {{0, 1, 2}, {0, 3, 4}});
    CHECK(is_independent_dominating_edge_set(shared, {0}));
    CHECK_FALSE(is_independent_dominating_edge_set(shared, {0, 1}));  // overlap at 0
}
