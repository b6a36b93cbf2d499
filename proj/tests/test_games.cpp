#include <catch_amalgamated.hpp>

#include "setlab/domination.hpp"
#include "setlab/games.hpp"
#include "setlab/io.hpp"

using namespace setlab;

namespace {

Deck one_set_deck() {
    Deck d;
    d.n = 1;
    d.cards = {CardVector{0}, CardVector{1}, CardVector{2}};
    return d;
}

Deck two_disjoint_sets() {
    Deck d;
    d.n = 2;
    d.cards = {CardVector{0, 0}, CardVector{0, 1}, CardVector{0, 2},
               CardVector{1, 0}, CardVector{1, 1}, CardVector{1, 2}};
    return d;
}

} // namespace

TEST_CASE("ordered graph of one hyperedge") {
    Hypergraph3 h{3, {{0, 1, 2}}};
    const OrderedKaylesGraph g = build_ordered_kayles(h, 2, {0});
    REQUIRE(g.size() == 2);
    CHECK(g.adjacent(0, 1));  // copies of one hyperedge block each other
    CHECK(g.verts[0].colors == 1u);
    CHECK(g.verts[1].colors == 1u);
    CHECK(solve_ordered_kayles(g));
}

TEST_CASE("ordered graph of two disjoint hyperedges") {
    Hypergraph3 h{6, {{0, 1, 2}, {3, 4, 5}}};
    const OrderedKaylesGraph g = build_ordered_kayles(h, 2, {0, 3});
    REQUIRE(g.size() == 4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            const bool same_source = g.verts[u].source_edge == g.verts[v].source_edge;
            const bool cross_level = g.verts[u].level != g.verts[v].level;
            CHECK(g.adjacent(u, v) == (same_source && cross_level));
        }
}

TEST_CASE("build validates the hitting set") {
    Hypergraph3 h{6, {{0, 1, 2}, {3, 4, 5}}};
    CHECK_THROWS_AS(build_ordered_kayles(h, 2, {0}), std::invalid_argument);
}

TEST_CASE("degree claim and color structure on Set-derived instances") {
    SplitMix64 rng(71);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const std::uint64_t limit = std::min<std::uint64_t>(12, pow3(n));
        const Deck deck = gen_random_deck(n, 4 + static_cast<int>(rng.below(limit - 3)), rng.next());
        const Hypergraph3 h = build_set_hypergraph(deck);
        for (int r = 1; r <= 3; ++r) {
            const auto hitting = min_hitting_set(h, 3 * r);
            if (!hitting) continue;
            const OrderedKaylesGraph g = build_ordered_kayles(h, r + 1, *hitting);
            CHECK(degree_claim_holds(g));
            CHECK(color_structure_ok(g));
        }
    }
}

TEST_CASE("collapse threshold") {
    // one level-2 graph with 4 copies of color-0-only edges: 2L = 4 triggers
    Hypergraph3 h;
    h.num_vertices = 9;
    h.edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}};
    const OrderedKaylesGraph g = build_ordered_kayles(h, 2, {0});
    const OrderedKaylesGraph collapsed = collapse_last_level(g);
    // four last-level vertices become one
    CHECK(collapsed.size() == g.size() - 3);
    int last_level = 0;
    for (const OrderedVertex& v : collapsed.verts)
        if (v.level == 1) ++last_level;
    CHECK(last_level == 1);
    CHECK(solve_ordered_kayles(g) == solve_ordered_kayles(collapsed));

    // below the threshold nothing happens
    Hypergraph3 small;
    small.num_vertices = 7;
    small.edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
    const OrderedKaylesGraph g2 = build_ordered_kayles(small, 2, {0});
    CHECK(collapse_last_level(g2).size() == g2.size());
}

TEST_CASE("merging same-color vertices with equal higher neighborhoods") {
    // hand-built two-level graph: two color-0 vertices at level 0 with no
    // level-1 neighbors merge into one
    OrderedKaylesGraph g;
    g.num_levels = 2;
    g.hitting_set_size = 2;
    g.verts = {{0, 0, 1u}, {0, 1, 1u}, {0, 2, 2u}, {1, 3, 2u}};
    g.adj.assign(4, std::vector<bool>(4, false));
    g.adj[2][3] = g.adj[3][2] = true;
    const OrderedKaylesGraph merged = merge_equivalent(g, 0);
    CHECK(merged.size() == 3);

    // different color sets never merge
    OrderedKaylesGraph g2 = g;
    g2.verts[1].colors = 2u;
    CHECK(merge_equivalent(g2, 0).size() == 4);
}

TEST_CASE("solve_ordered_kayles endgames") {
    OrderedKaylesGraph empty;
    empty.num_levels = 2;
    empty.hitting_set_size = 0;
    CHECK_FALSE(solve_ordered_kayles(empty));

    Hypergraph3 two{6, {{0, 1, 2}, {3, 4, 5}}};
    const OrderedKaylesGraph g = build_ordered_kayles(two, 4, {0, 3});
    CHECK_FALSE(solve_ordered_kayles(g));  // mirrors oracle_win_within(h, 3)
}

TEST_CASE("solve_2p_within on the signature decks") {
    CHECK(solve_2p_within(one_set_deck(), 1, TwoPlayerMethod::kernel));
    CHECK(solve_2p_within(one_set_deck(), 1, TwoPlayerMethod::brute));
    CHECK_FALSE(solve_2p_within(two_disjoint_sets(), 3, TwoPlayerMethod::kernel));
    CHECK_FALSE(solve_2p_within(two_disjoint_sets(), 3, TwoPlayerMethod::brute));
    CHECK_THROWS_AS(solve_2p_within(one_set_deck(), 0, TwoPlayerMethod::brute),
                    std::invalid_argument);
}

TEST_CASE("kernel matches brute on random decks") {
    SplitMix64 rng(73);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const std::uint64_t limit = std::min<std::uint64_t>(12, pow3(n));
        const Deck deck = gen_random_deck(n, 4 + static_cast<int>(rng.below(limit - 3)), rng.next());
        for (int r = 1; r <= 3; ++r) {
            CAPTURE(t, r, deck.cards.size());
            CHECK(solve_2p_within(deck, r, TwoPlayerMethod::kernel) ==
                  solve_2p_within(deck, r, TwoPlayerMethod::brute));
        }
    }
}

TEST_CASE("kernel report") {
    KernelReport report;
    solve_2p_within(two_disjoint_sets(), 2, TwoPlayerMethod::kernel, &report);
    CHECK(report.original_level_sizes == std::vector<int>{2, 2, 2});
    for (std::size_t i = 0; i < report.reduced_level_sizes.size(); ++i)
        CHECK(report.reduced_level_sizes[i] <= report.original_level_sizes[i]);
}

TEST_CASE("arc kayles basics") {
    SimpleGraph single{2, {{0, 1}}};
    CHECK(arc_kayles_within(single, 1, ArcKaylesMethod::brute));
    CHECK(arc_kayles_within(single, 1, ArcKaylesMethod::fpt));

    SimpleGraph two{4, {{0, 1}, {2, 3}}};
    for (int r = 1; r <= 4; ++r) {
        CHECK_FALSE(arc_kayles_within(two, r, ArcKaylesMethod::brute));
        CHECK_FALSE(arc_kayles_within(two, r, ArcKaylesMethod::fpt));
    }

    SimpleGraph path{3, {{0, 1}, {1, 2}}};
    CHECK(arc_kayles_within(path, 1, ArcKaylesMethod::brute));
    CHECK(arc_kayles_within(path, 1, ArcKaylesMethod::fpt));
}

TEST_CASE("arc kayles methods agree on random graphs") {
    SplitMix64 rng(79);
    for (int t = 0; t < 50; ++t) {
        const SimpleGraph g = gen_random_graph(4 + static_cast<int>(rng.below(9)),
                                               120 + static_cast<int>(rng.below(400)), rng.next());
        for (int r = 1; r <= 4; ++r) {
            CAPTURE(t, r);
            CHECK(arc_kayles_within(g, r, ArcKaylesMethod::fpt) ==
                  arc_kayles_within(g, r, ArcKaylesMethod::brute));
        }
    }
}

TEST_CASE("the reduced deck plays arc kayles move for move") {
    SplitMix64 rng(83);
    for (int t = 0; t < 30; ++t) {
        const SimpleGraph g = gen_random_graph(2 + static_cast<int>(rng.below(7)),
                                               150 + static_cast<int>(rng.below(500)), rng.next());
        const Deck deck = reduce_ieds_to_deck(g);
        for (int r = 1; r <= 4; ++r)
            CHECK(arc_kayles_within(g, r, ArcKaylesMethod::brute) ==
                  solve_2p_within(deck, r, TwoPlayerMethod::brute));
    }
}

TEST_CASE("solve_game_winner") {
    CHECK(solve_game_winner(one_set_deck()));
    CHECK_FALSE(solve_game_winner(Deck{1, {}}));
    CHECK_FALSE(solve_game_winner(two_disjoint_sets()));
    // full two-attribute deck: 9 cards, 12 Sets, first player wins
    CHECK(solve_game_winner(gen_full_deck(2)));
}
