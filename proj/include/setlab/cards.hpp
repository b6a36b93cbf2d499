#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "setlab/errors.hpp"

namespace setlab {

/// One attribute value; always 0, 1 or 2.
using Trit = std::uint8_t;

/// A card: a vector of trits, one per attribute.
struct CardVector {
    std::vector<Trit> attrs;

    CardVector() = default;
    explicit CardVector(std::vector<Trit> a) : attrs(std::move(a)) {}
    CardVector(std::initializer_list<int> a) {
        attrs.reserve(a.size());
        for (int v : a) attrs.push_back(static_cast<Trit>(v));
    }

    std::size_t size() const { return attrs.size(); }
    Trit operator[](std::size_t i) const { return attrs[i]; }
    Trit& operator[](std::size_t i) { return attrs[i]; }

    auto operator<=>(const CardVector&) const = default;
};

/// An ordered collection of distinct cards over a fixed attribute count.
struct Deck {
    int n = 0;                      // attribute count
    std::vector<CardVector> cards;  // pairwise distinct, each of length n
};

/// Indices of three deck cards whose vectors sum to zero mod 3.
struct SetTriple {
    std::array<int, 3> idx{};  // sorted ascending

    auto operator<=>(const SetTriple&) const = default;
};

/// 3-uniform hypergraph; edges are sorted vertex triples, deduplicated.
struct Hypergraph3 {
    int num_vertices = 0;
    std::vector<std::array<int, 3>> edges;
};

inline std::uint64_t pow3(int n) {
    // 3^40 still fits in 64 bits; callers never need more.
    if (n > 40) return UINT64_MAX;
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

inline void validate_card(const CardVector& c) {
    if (c.attrs.empty()) throw std::invalid_argument("card must have at least one attribute");
    for (Trit t : c.attrs)
        if (t > 2) throw std::invalid_argument("card attribute out of {0,1,2}");
}

inline void validate_deck(const Deck& d) {
    if (d.n < 0) throw std::invalid_argument("negative attribute count");
    if (d.cards.size() > pow3(d.n)) throw CapacityError("deck larger than 3^n");
    for (const CardVector& c : d.cards) {
        validate_card(c);
        if (static_cast<int>(c.size()) != d.n)
            throw std::invalid_argument("card length differs from deck attribute count");
    }
    std::vector<CardVector> sorted = d.cards;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate card in deck");
}

inline void validate_hypergraph(const Hypergraph3& h) {
    for (const auto& e : h.edges) {
        if (!(e[0] < e[1] && e[1] < e[2])) throw std::invalid_argument("edge not sorted/distinct");
        if (e[0] < 0 || e[2] >= h.num_vertices) throw std::invalid_argument("edge vertex out of range");
    }
    auto sorted = h.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate hyperedge");
}

/// True iff the three cards sum to the zero vector componentwise mod 3.
/// The cards must be pairwise distinct and of equal length.
inline bool is_set(const CardVector& a, const CardVector& b, const CardVector& c) {
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("is_set: card lengths differ");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("is_set: cards must be pairwise distinct");
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] + b[i] + c[i]) % 3 != 0) return false;
    return true;
}

/// The unique card completing {a, b} to a Set: c[i] = -(a[i]+b[i]) mod 3.
inline CardVector third_card(const CardVector& a, const CardVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("third_card: card lengths differ");
    if (a == b) throw std::invalid_argument("third_card: cards must differ");
    CardVector c;
    c.attrs.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = static_cast<Trit>((6 - a[i] - b[i]) % 3);
    return c;
}

/// All Sets of the deck, each exactly once, sorted lexicographically by
/// index triple. Quadratic pair scan with a third-card lookup rather than
/// a cubic scan over all triples.
inline std::vector<SetTriple> enumerate_sets(const Deck& deck) {
    std::map<CardVector, int> index_of;
    for (int i = 0; i < static_cast<int>(deck.cards.size()); ++i)
        index_of.emplace(deck.cards[i], i);

    std::vector<SetTriple> out;
    const int m = static_cast<int>(deck.cards.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto it = index_of.find(third_card(deck.cards[i], deck.cards[j]));
            // counting each Set once: via its two smallest indices
            if (it != index_of.end() && it->second > j)
                out.push_back(SetTriple{{i, j, it->second}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// One vertex per card, one hyperedge per Set.
inline Hypergraph3 build_set_hypergraph(const Deck& deck) {
    Hypergraph3 h;
    h.num_vertices = static_cast<int>(deck.cards.size());
    for (const SetTriple& t : enumerate_sets(deck)) h.edges.push_back(t.idx);
    return h;
}

/// Generalized Set test over alphabet {0..k-1}: exactly k pairwise distinct
/// cards, and in every attribute the values are either all equal or all
/// distinct.
inline bool is_generalized_set(const std::vector<CardVector>& cards, int k) {
    if (static_cast<int>(cards.size()) != k)
        throw std::invalid_argument("is_generalized_set: expected exactly k cards");
    if (k < 1) throw std::invalid_argument("is_generalized_set: k must be positive");
    const std::size_t len = cards[0].size();
    for (const CardVector& c : cards) {
        if (c.size() != len) throw std::invalid_argument("is_generalized_set: card lengths differ");
        for (Trit t : c.attrs)
            if (t >= k) throw std::invalid_argument("is_generalized_set: value out of alphabet");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (cards[i] == cards[j])
                throw std::invalid_argument("is_generalized_set: cards must be pairwise distinct");

    for (std::size_t pos = 0; pos < len; ++pos) {
        bool all_equal = true;
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        bool all_distinct = true;
        for (const CardVector& c : cards) {
            if (c[pos] != cards[0][pos]) all_equal = false;
            if (seen[c[pos]]) all_distinct = false;
            seen[c[pos]] = true;
        }
        if (!all_equal && !all_distinct) return false;
    }
    return true;
}

} // namespace setlab
