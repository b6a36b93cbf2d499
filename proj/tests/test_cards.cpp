#include <catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>

#include "setlab/cards.hpp"
#include "setlab/io.hpp"
#include "setlab/rng.hpp"

using namespace setlab;

TEST_CASE("is_set recognizes zero-sum triples") {
    CHECK(is_set({0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}));
    CHECK(is_set({0, 0}, {0, 1}, {0, 2}));
    CHECK_FALSE(is_set({0, 0}, {0, 1}, {1, 2}));
}

TEST_CASE("is_set rejects bad input") {
    CHECK_THROWS_AS(is_set({0, 0}, {0, 1, 2}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_set({0, 0}, {0, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("third_card completes a pair") {
    CHECK(third_card({0, 1}, {1, 1}) == CardVector{2, 1});
    CHECK(third_card({0, 0, 0, 0}, {1, 1, 1, 1}) == CardVector{2, 2, 2, 2});
    CHECK(third_card({2, 0}, {2, 1}) == CardVector{2, 2});
    CHECK_THROWS_AS(third_card({1, 2}, {1, 2}), std::invalid_argument);
}

TEST_CASE("third_card always closes a Set and avoids its inputs") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        CardVector a, b;
        for (int i = 0; i < n; ++i) {
            a.attrs.push_back(static_cast<Trit>(rng.below(3)));
            b.attrs.push_back(static_cast<Trit>(rng.below(3)));
        }
        if (a == b) continue;
        const CardVector c = third_card(a, b);
        CHECK(c != a);
        CHECK(c != b);
        CHECK(is_set(a, b, c));
    }
}

namespace {

int count_sets_cubic(const Deck& d) {
    int count = 0;
    const int m = static_cast<int>(d.cards.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (is_set(d.cards[i], d.cards[j], d.cards[k])) ++count;
    return count;
}

} // namespace

TEST_CASE("enumerate_sets on full decks") {
    CHECK(enumerate_sets(gen_full_deck(1)).size() == 1);

    const Deck d2 = gen_full_deck(2);
    const auto sets2 = enumerate_sets(d2);
    CHECK(sets2.size() == 12);
    CHECK(count_sets_cubic(d2) == 12);

    for (const SetTriple& t : sets2)
        CHECK(is_set(d2.cards[t.idx[0]], d2.cards[t.idx[1]], d2.cards[t.idx[2]]));
}

TEST_CASE("enumerate_sets output is sorted and duplicate-free") {
    const Deck d = gen_random_deck(3, 15, 77);
    const auto sets = enumerate_sets(d);
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    CHECK(static_cast<int>(sets.size()) == count_sets_cubic(d));
}

TEST_CASE("enumerate_sets is stable under reordering the deck") {
    const Deck d = gen_random_deck(3, 12, 5);
    Deck shuffled = d;
    std::reverse(shuffled.cards.begin(), shuffled.cards.end());

    auto value_triples = [](const Deck& deck) {
        std::set<std::array<CardVector, 3>> out;
        for (const SetTriple& t : enumerate_sets(deck)) {
            std::array<CardVector, 3> v{deck.cards[t.idx[0]], deck.cards[t.idx[1]],
                                        deck.cards[t.idx[2]]};
            std::sort(v.begin(), v.end());
            out.insert(v);
        }
        return out;
    };
    CHECK(value_triples(d) == value_triples(shuffled));
}

TEST_CASE("build_set_hypergraph mirrors the deck") {
    Deck one_set;
    one_set.n = 1;
    one_set.cards = {CardVector{0}, CardVector{1}, CardVector{2}};
    const Hypergraph3 h = build_set_hypergraph(one_set);
    CHECK(h.num_vertices == 3);
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0] == std::array<int, 3>{0, 1, 2});

    Deck no_sets;
    no_sets.n = 2;
    no_sets.cards = {CardVector{0, 0}, CardVector{0, 1}, CardVector{1, 0}};
    CHECK(build_set_hypergraph(no_sets).edges.empty());

    const Hypergraph3 full = build_set_hypergraph(gen_full_deck(2));
    CHECK(full.num_vertices == 9);
    CHECK(full.edges.size() == 12);
}

TEST_CASE("is_generalized_set accepts agree-or-rainbow columns") {
    CHECK(is_generalized_set({{0, 0}, {0, 1}, {0, 2}}, 3));
    CHECK(is_generalized_set({{0, 0}, {1, 1}, {2, 2}}, 3));
    CHECK_FALSE(is_generalized_set({{0, 0}, {0, 1}, {1, 2}}, 3));
    CHECK_THROWS_AS(is_generalized_set({{0, 0}, {0, 1}}, 3), std::invalid_argument);
}

TEST_CASE("generalized Set agrees with the sum-zero test for k = 3") {
    SplitMix64 rng(23);
    const Deck d = gen_full_deck(2);
    for (int trial = 0; trial < 300; ++trial) {
        int i = static_cast<int>(rng.below(9));
        int j = static_cast<int>(rng.below(9));
        int k = static_cast<int>(rng.below(9));
        if (i == j || j == k || i == k) continue;
        CHECK(is_generalized_set({d.cards[i], d.cards[j], d.cards[k]}, 3) ==
              is_set(d.cards[i], d.cards[j], d.cards[k]));
    }
}

TEST_CASE("deck validation") {
    Deck dup;
    dup.n = 2;
    dup.cards = {CardVector{0, 1}, CardVector{0, 1}};
    CHECK_THROWS_AS(validate_deck(dup), std::invalid_argument);

    Deck wrong_len;
    wrong_len.n = 2;
    wrong_len.cards = {CardVector{0, 1, 2}};
    CHECK_THROWS_AS(validate_deck(wrong_len), std::invalid_argument);
}
