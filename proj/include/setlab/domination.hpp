#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/hypergraph.hpp"

namespace setlab {

/// Vertex cards carry a single 1, edge cards a 2 at both endpoints; the
/// deck's Sets are then exactly {vertex i, vertex j, edge (i,j)} per edge.
inline Deck reduce_ieds_to_deck(const SimpleGraph& g) {
    validate_graph(g);
    Deck deck;
    deck.n = g.num_vertices;
    for (int v = 0; v < g.num_vertices; ++v) {
        CardVector c(std::vector<Trit>(static_cast<std::size_t>(g.num_vertices), 0));
        c[v] = 1;
        deck.cards.push_back(std::move(c));
    }
    for (const auto& e : g.edges) {
        CardVector c(std::vector<Trit>(static_cast<std::size_t>(g.num_vertices), 0));
        c[e[0]] = 2;
        c[e[1]] = 2;
        deck.cards.push_back(std::move(c));
    }
    return deck;
}

/// r pairwise-disjoint hyperedges dominating every edge of the host.
struct IedsWitness {
    std::vector<int> edge_ids;
};

/// Decides whether an independent edge dominating set of size exactly r
/// exists: every hitting set of size exactly 3r is tested for a perfect
/// matching of its induced subhypergraph. r = 0 is a yes exactly when the
/// hypergraph has no edges.
inline std::pair<bool, std::optional<IedsWitness>> solve_ieds_fpt(const Hypergraph3& h, int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    if (r == 0) {
        if (h.edges.empty()) return {true, IedsWitness{}};
        return {false, std::nullopt};
    }
    for (const VertexSet& s : enumerate_hitting_sets_7way(h, 3 * r)) {
        std::vector<int> position(static_cast<std::size_t>(h.num_vertices), -1);
        for (std::size_t i = 0; i < s.size(); ++i) position[s[i]] = static_cast<int>(i);

        Hypergraph3 induced;
        induced.num_vertices = static_cast<int>(s.size());
        std::vector<int> source_edge;
        for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
            const auto& edge = h.edges[e];
            if (position[edge[0]] < 0 || position[edge[1]] < 0 || position[edge[2]] < 0) continue;
            std::array<int, 3> mapped{position[edge[0]], position[edge[1]], position[edge[2]]};
            std::sort(mapped.begin(), mapped.end());
            induced.edges.push_back(mapped);
            source_edge.push_back(e);
        }
        if (auto matching = find_perfect_matching(induced)) {
            IedsWitness w;
            for (int local : *matching) w.edge_ids.push_back(source_edge[local]);
            std::sort(w.edge_ids.begin(), w.edge_ids.end());
            return {true, w};
        }
    }
    return {false, std::nullopt};
}

/// Decides whether at most r Sets destroy every Set of the deck, trying
/// exact sizes 0..r in order and reporting the smallest witness found.
inline std::pair<bool, std::optional<std::vector<SetTriple>>> solve_min_rset(const Deck& deck,
                                                                             int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    const Hypergraph3 h = build_set_hypergraph(deck);
    for (int size = 0; size <= r; ++size) {
        auto [found, witness] = solve_ieds_fpt(h, size);
        if (found) {
            std::vector<SetTriple> triples;
            for (int e : witness->edge_ids) triples.push_back(SetTriple{h.edges[e]});
            return {true, triples};
        }
    }
    return {false, std::nullopt};
}

} // namespace setlab
