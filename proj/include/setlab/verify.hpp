#pragma once

// Seeded oracle-equivalence suites. The CLI `verify` subcommand and the
// acceptance tests both run these; all output is deterministic for a given
// seed and case count.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/domination.hpp"
#include "setlab/games.hpp"
#include "setlab/io.hpp"
#include "setlab/oracles.hpp"
#include "setlab/packing.hpp"
#include "setlab/pmdm.hpp"

namespace setlab {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;

    bool ok() const { return passed == total; }
};

inline void log_results(const std::vector<SuiteResult>& results, std::ostream& out) {
    for (const SuiteResult& r : results)
        out << (r.ok() ? "PASS" : "FAIL") << " " << r.name << " " << r.passed << "/" << r.total
            << "\n";
}

inline bool all_ok(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (!r.ok()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// cards: closed-form Set counts against an exhaustive triple scan.
// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> verify_cards(std::uint64_t seed, int cases) {
    SuiteResult closed{"full-deck set count matches closed form", 0, 0};
    SuiteResult scan{"full-deck set count matches cubic scan", 0, 0};
    for (int n = 1; n <= 4; ++n) {
        const Deck d = gen_full_deck(n);
        const auto sets = enumerate_sets(d);
        const std::uint64_t cards = pow3(n);
        const std::uint64_t expected = cards * (cards - 1) / 6;
        ++closed.total;
        if (sets.size() == expected) ++closed.passed;

        std::uint64_t brute = 0;
        const int m = static_cast<int>(d.cards.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k)
                    if (is_set(d.cards[i], d.cards[j], d.cards[k])) ++brute;
        ++scan.total;
        if (brute == sets.size()) ++scan.passed;
    }

    SuiteResult third{"third card closes a Set", 0, cases};
    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const Deck d = gen_random_deck(n, 2, rng.next());
        const CardVector c = third_card(d.cards[0], d.cards[1]);
        if (c != d.cards[0] && c != d.cards[1] && is_set(d.cards[0], d.cards[1], c)) ++third.passed;
    }
    return {closed, scan, third};
}

// ---------------------------------------------------------------------------
// packing: normalization, gadget exactness, packing number vs satisfiability.
// ---------------------------------------------------------------------------

// Clauses carry 2 or 3 distinct literals. Uniformly random clauses at
// these sizes are almost always satisfiable, so a quarter of the corpus
// gets a planted two-variable contradiction (kept small; the packing
// refutation is the expensive side), and the rest stays uniform.
inline CnfFormula sample_packing_formula(SplitMix64& rng) {
    CnfFormula f;
    int vars, clauses;
    bool planted = rng.below(4) == 0;
    if (planted) {
        vars = 3 + static_cast<int>(rng.below(2));     // 3..4
        clauses = static_cast<int>(rng.below(3));      // 0..2 fillers
        const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
        int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
        while (y == x) y = static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
        for (int signs = 0; signs < 4; ++signs)
            f.clauses.push_back({{x, (signs & 1) != 0}, {y, (signs & 2) != 0}});
    } else {
        vars = 3 + static_cast<int>(rng.below(4));     // 3..6
        clauses = 1 + static_cast<int>(rng.below(8));  // 1..8
    }
    f.num_vars = vars;
    for (int c = 0; c < clauses; ++c) {
        const int size = rng.below(5) < 2 ? 2 : 3;
        std::vector<int> pick;
        while (static_cast<int>(pick.size()) < size) {
            const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
        }
        Clause clause;
        for (int v : pick) clause.push_back({v, rng.below(2) == 1});
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

inline std::vector<SuiteResult> verify_packing(std::uint64_t seed, int cases) {
    SuiteResult facts{"normalized form facts", 0, cases};
    SuiteResult equisat{"normalization preserves satisfiability", 0, cases};
    SuiteResult exact{"gadget sets are exactly the intended ones", 0, cases};
    SuiteResult correspondence{"gadget packing number n'+m' iff satisfiable", 0, cases};

    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const CnfFormula f = sample_packing_formula(rng);
        const CnfFormula norm = normalize_formula(f);

        bool fine = true;
        try {
            require_normalized(norm);
        } catch (const std::invalid_argument&) {
            fine = false;
        }
        if (fine) ++facts.passed;

        const bool sat_before = oracle_sat(f).has_value();
        const bool sat_after = oracle_sat(norm).has_value();
        if (sat_before == sat_after) ++equisat.passed;

        const GadgetDeck gd = build_sat_gadget_deck(norm);
        if (verify_gadget_sets(gd).exact) ++exact.passed;

        const int target = norm.num_vars + static_cast<int>(norm.clauses.size());
        const auto [best, witness] = oracle_max_packing(build_set_hypergraph(gd.deck));
        if (best <= target && (best == target) == sat_after) ++correspondence.passed;
    }
    return {facts, equisat, exact, correspondence};
}

// ---------------------------------------------------------------------------
// domination: the exact-size procedure iterated over sizes vs the oracle.
// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> verify_domination(std::uint64_t seed, int cases) {
    SuiteResult threshold{"ieds within r agrees with the oracle", 0, 0};
    SuiteResult witnesses{"every ieds witness is independent dominating", 0, 0};

    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int v = 5 + static_cast<int>(rng.below(8));  // 5..12
        const int e = static_cast<int>(rng.below(11));     // 0..10
        const Hypergraph3 h = gen_random_h3(v, e, rng.next());
        const int minimum = oracle_min_ieds(h).first;
        for (int r = 0; r <= 3; ++r) {
            bool within = false;
            for (int size = 0; size <= r && !within; ++size) {
                auto [found, witness] = solve_ieds_fpt(h, size);
                if (found) {
                    within = true;
                    ++witnesses.total;
                    if (is_independent_dominating_edge_set(h, witness->edge_ids)) ++witnesses.passed;
                }
            }
            ++threshold.total;
            if (within == (minimum <= r)) ++threshold.passed;
        }
    }
    return {threshold, witnesses};
}

// ---------------------------------------------------------------------------
// reduction: graph IEDS equals deck IEDS on every connected graph with up
// to 6 vertices, enumerated exhaustively by edge set.
// ---------------------------------------------------------------------------

namespace detail {

inline bool graph_connected(int n, const std::vector<std::array<int, 2>>& edges) {
    if (n == 0) return false;
    std::vector<int> stack{0};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
            int other = -1;
            if (e[0] == v) other = e[1];
            if (e[1] == v) other = e[0];
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++visited;
                stack.push_back(other);
            }
        }
    }
    return visited == n;
}

inline int graph_min_ieds_exhaustive(const SimpleGraph& g) {
    const int m = static_cast<int>(g.edges.size());
    int best = -1;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<bool> used(static_cast<std::size_t>(g.num_vertices), false);
        bool independent = true;
        int size = 0;
        for (int e = 0; e < m && independent; ++e) {
            if (!(mask & (1 << e))) continue;
            ++size;
            for (int v : g.edges[e]) {
                if (used[v]) independent = false;
                used[v] = true;
            }
        }
        if (!independent) continue;
        bool dominating = true;
        for (const auto& e : g.edges)
            if (!used[e[0]] && !used[e[1]]) dominating = false;
        if (dominating && (best < 0 || size < best)) best = size;
    }
    return best;
}

} // namespace detail

inline std::vector<SuiteResult> verify_reduction() {
    SuiteResult counts{"reduced deck has one Set per graph edge", 0, 0};
    SuiteResult minima{"graph IEDS minimum equals reduced-deck minimum", 0, 0};

    for (int n = 1; n <= 6; ++n) {
        std::vector<std::array<int, 2>> all_pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all_pairs.push_back({a, b});
        const int pair_count = static_cast<int>(all_pairs.size());
        for (int mask = 0; mask < (1 << pair_count); ++mask) {
            SimpleGraph g;
            g.num_vertices = n;
            for (int e = 0; e < pair_count; ++e)
                if (mask & (1 << e)) g.edges.push_back(all_pairs[e]);
            if (!detail::graph_connected(n, g.edges)) continue;

            const Deck deck = reduce_ieds_to_deck(g);
            const Hypergraph3 h = build_set_hypergraph(deck);
            ++counts.total;
            if (h.edges.size() == g.edges.size()) ++counts.passed;

            ++minima.total;
            if (detail::graph_min_ieds_exhaustive(g) == oracle_min_ieds(h).first) ++minima.passed;
        }
    }
    return {counts, minima};
}

// ---------------------------------------------------------------------------
// games: kernelized solver vs game-tree search, plus the structural facts
// the kernel rests on.
// ---------------------------------------------------------------------------

inline Deck sample_game_deck(SplitMix64& rng) {
    const int n = 2 + static_cast<int>(rng.below(3));  // 2..4
    const std::uint64_t limit = std::min<std::uint64_t>(12, pow3(n));
    const int m = 4 + static_cast<int>(rng.below(limit - 3));  // 4..limit
    return gen_random_deck(n, m, rng.next());
}

inline std::vector<SuiteResult> verify_games(std::uint64_t seed, int cases) {
    SuiteResult agree{"kernel and brute agree", 0, 0};
    SuiteResult degree{"collapse degree bound holds", 0, 0};
    SuiteResult colors{"color structure holds", 0, 0};
    SuiteResult monotone{"a win within r stays a win within r+1", 0, 0};

    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Deck deck = sample_game_deck(rng);
        const Hypergraph3 h = build_set_hypergraph(deck);
        bool previous = false;
        for (int r = 1; r <= 3; ++r) {
            const bool brute = solve_2p_within(deck, r, TwoPlayerMethod::brute);
            const bool kernel = solve_2p_within(deck, r, TwoPlayerMethod::kernel);
            ++agree.total;
            if (brute == kernel) ++agree.passed;
            if (r > 1) {
                ++monotone.total;
                if (!previous || brute) ++monotone.passed;
            }
            previous = brute;

            if (auto hitting = min_hitting_set(h, 3 * r)) {
                const OrderedKaylesGraph g = build_ordered_kayles(h, r + 1, *hitting);
                ++degree.total;
                if (degree_claim_holds(g)) ++degree.passed;
                ++colors.total;
                if (color_structure_ok(g)) ++colors.passed;
            }
        }
    }
    return {agree, degree, colors, monotone};
}

// ---------------------------------------------------------------------------
// arc kayles: class truncation vs game-tree search, and the bridge to the
// deck game through the vertex/edge card reduction.
// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> verify_arc_kayles(std::uint64_t seed, int cases) {
    SuiteResult agree{"truncated and brute searches agree", 0, 0};
    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int v = 4 + static_cast<int>(rng.below(9));          // 4..12
        const int p = 120 + static_cast<int>(rng.below(400));      // edge density
        const SimpleGraph g = gen_random_graph(v, p, rng.next());
        for (int r = 1; r <= 4; ++r) {
            ++agree.total;
            if (arc_kayles_within(g, r, ArcKaylesMethod::fpt) ==
                arc_kayles_within(g, r, ArcKaylesMethod::brute))
                ++agree.passed;
        }
    }
    return {agree};
}

inline std::vector<SuiteResult> verify_arc_bridge(std::uint64_t seed, int cases) {
    SuiteResult bridge{"deck reduction plays arc kayles move for move", 0, 0};
    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int v = 2 + static_cast<int>(rng.below(7));      // 2..8
        const int p = 150 + static_cast<int>(rng.below(500));
        const SimpleGraph g = gen_random_graph(v, p, rng.next());
        const Deck deck = reduce_ieds_to_deck(g);
        for (int r = 1; r <= 4; ++r) {
            ++bridge.total;
            if (arc_kayles_within(g, r, ArcKaylesMethod::brute) ==
                solve_2p_within(deck, r, TwoPlayerMethod::brute))
                ++bridge.passed;
        }
    }
    return {bridge};
}

// ---------------------------------------------------------------------------
// pmdm: clique existence vs matching existence on the constructed instance.
// ---------------------------------------------------------------------------

namespace detail {

inline bool multicolored_clique_exists(const KPartiteGraph& g) {
    std::vector<int> pick(static_cast<std::size_t>(g.k), 0);
    auto rec = [&](auto&& self, int part) -> bool {
        if (part == g.k) {
            for (int a = 0; a < g.k; ++a)
                for (int b = a + 1; b < g.k; ++b)
                    if (!kpartite_adjacent(g, g.vertex_id(a, pick[a]), g.vertex_id(b, pick[b])))
                        return false;
            return true;
        }
        for (int i = 0; i < g.n; ++i) {
            pick[part] = i;
            if (self(self, part + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace detail

inline std::vector<SuiteResult> verify_pmdm(std::uint64_t seed, int cases) {
    SuiteResult iff{"clique exists iff matching exists", 0, cases};
    SuiteResult cliques{"extracted vertices form a clique", 0, 0};
    SuiteResult corollary{"generalized Sets and matchings coincide", 0, 0};

    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int n = 1 + static_cast<int>(rng.below(2));  // 1..2
        const int p = 250 + static_cast<int>(rng.below(600));
        const KPartiteGraph g = gen_random_kpartite(3, n, p, rng.next());
        const PmdmInstance inst = build_mcc_to_pmdm(g);
        const auto matching = oracle_pmdm(inst);
        if (detail::multicolored_clique_exists(g) == matching.has_value()) ++iff.passed;

        if (matching) {
            ++cliques.total;
            bool adjacent_in_source = true;
            try {
                const auto clique = extract_clique(inst, *matching);
                for (std::size_t a = 0; a < clique.size() && adjacent_in_source; ++a)
                    for (std::size_t b = a + 1; b < clique.size(); ++b)
                        if (!kpartite_adjacent(g, g.vertex_id(clique[a].first, clique[a].second),
                                               g.vertex_id(clique[b].first, clique[b].second)))
                            adjacent_in_source = false;
            } catch (const std::invalid_argument&) {
                adjacent_in_source = false;
            }
            if (adjacent_in_source) ++cliques.passed;
        }

        if (inst.multiedges.size() <= 10 && inst.values <= 6) {
            ++corollary.total;
            if (check_set_matching_corollary(inst)) ++corollary.passed;
        }
    }
    return {iff, cliques, corollary};
}

// ---------------------------------------------------------------------------
// io: round trips and generator determinism.
// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> verify_io(std::uint64_t seed, int cases) {
    SuiteResult roundtrip{"parse(emit(x)) == x", 0, 0};
    SuiteResult canonical{"re-emitting a parsed file is byte-identical", 0, 0};
    SuiteResult determinism{"generators are pure functions of the seed", 0, cases};

    SplitMix64 rng(seed);
    auto check_roundtrip = [&](auto& value, auto parser, auto emitter) {
        std::ostringstream first;
        emitter(value, first);
        std::istringstream in(first.str());
        auto reparsed = parser(in);
        ++roundtrip.total;
        std::ostringstream second;
        emitter(reparsed, second);
        ++canonical.total;
        if (second.str() == first.str()) ++canonical.passed;
        return reparsed;
    };

    for (int t = 0; t < cases; ++t) {
        const Deck deck = gen_random_deck(3, 8, rng.next());
        auto deck2 = check_roundtrip(deck, parse_deck, emit_deck);
        if (deck2.n == deck.n && deck2.cards == deck.cards) ++roundtrip.passed;

        const Hypergraph3 h = gen_random_h3(8, 6, rng.next());
        auto h2 = check_roundtrip(h, parse_h3, emit_h3);
        if (h2.num_vertices == h.num_vertices && h2.edges == h.edges) ++roundtrip.passed;

        const SimpleGraph g = gen_random_graph(7, 400, rng.next());
        auto g2 = check_roundtrip(g, parse_graph, emit_graph);
        if (g2.num_vertices == g.num_vertices && g2.edges == g.edges) ++roundtrip.passed;

        const CnfFormula f = gen_random_3cnf(4, 5, rng.next());
        auto f2 = check_roundtrip(f, parse_cnf, emit_cnf);
        if (f2.num_vars == f.num_vars && f2.clauses == f.clauses) ++roundtrip.passed;

        const PmdmInstance inst = build_mcc_to_pmdm(gen_random_kpartite(3, 1, 500, rng.next()));
        auto inst2 = check_roundtrip(inst, parse_pmdm, emit_pmdm);
        if (inst2.dims == inst.dims && inst2.values == inst.values &&
            inst2.multiedges == inst.multiedges && inst2.provenance == inst.provenance)
            ++roundtrip.passed;

        const std::uint64_t s = rng.next();
        const Deck a = gen_random_deck(4, 10, s);
        const Deck b = gen_random_deck(4, 10, s);
        if (a.cards == b.cards) ++determinism.passed;
    }
    return {roundtrip, canonical, determinism};
}

// ---------------------------------------------------------------------------
// hitting: branching primitives against exhaustive subset scans.
// ---------------------------------------------------------------------------

namespace detail {

inline bool subset_hits_all(const Hypergraph3& h, const std::vector<int>& vs) {
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : vs)
            if (v == e[0] || v == e[1] || v == e[2]) hit = true;
        if (!hit) return false;
    }
    return true;
}

} // namespace detail

inline std::vector<SuiteResult> verify_hitting(std::uint64_t seed, int cases) {
    SuiteResult family{"hitting-set family equals exhaustive scan", 0, 0};
    SuiteResult bounded{"bounded hitting set agrees with exhaustive scan", 0, 0};
    SuiteResult matching{"perfect matching agrees with exhaustive scan", 0, 0};

    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int v = 5 + static_cast<int>(rng.below(6));  // 5..10
        const int e = 1 + static_cast<int>(rng.below(7));
        const Hypergraph3 h = gen_random_h3(v, e, rng.next());

        const int target = 1 + static_cast<int>(rng.below(4));
        std::vector<VertexSet> expected;
        std::vector<int> comb;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(comb.size()) == target) {
                if (detail::subset_hits_all(h, comb)) expected.push_back(comb);
                return;
            }
            for (int x = from; x < h.num_vertices; ++x) {
                comb.push_back(x);
                self(self, x + 1);
                comb.pop_back();
            }
        };
        rec(rec, 0);
        ++family.total;
        if (enumerate_hitting_sets_7way(h, target) == expected) ++family.passed;

        const int bound = static_cast<int>(rng.below(4));
        bool some = false;
        for (int size = 0; size <= bound && !some; ++size) {
            std::vector<VertexSet> found;
            comb.clear();
            auto rec2 = [&](auto&& self, int from) -> void {
                if (static_cast<int>(comb.size()) == size) {
                    if (detail::subset_hits_all(h, comb)) found.push_back(comb);
                    return;
                }
                for (int x = from; x < h.num_vertices; ++x) {
                    comb.push_back(x);
                    self(self, x + 1);
                    comb.pop_back();
                }
            };
            rec2(rec2, 0);
            some = !found.empty();
        }
        ++bounded.total;
        if (min_hitting_set(h, bound).has_value() == some) ++bounded.passed;

        bool pm = false;
        if (h.num_vertices % 3 == 0) {
            const int m = static_cast<int>(h.edges.size());
            for (int mask = 0; mask < (1 << m) && !pm; ++mask) {
                std::vector<int> cover(static_cast<std::size_t>(h.num_vertices), 0);
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i))
                        for (int x : h.edges[i]) ++cover[x];
                pm = true;
                for (int x = 0; x < h.num_vertices; ++x)
                    if (cover[x] != 1) pm = false;
            }
        }
        ++matching.total;
        if (has_perfect_matching(h) == pm) ++matching.passed;
    }
    return {family, bounded, matching};
}

// ---------------------------------------------------------------------------
// oracles: internal consistency of the reference solvers.
// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> verify_oracles(std::uint64_t seed, int cases) {
    SuiteResult monotone{"win-within is monotone in the budget", 0, 0};
    SuiteResult unbounded{"win-within with a large budget is the full game", 0, 0};
    SuiteResult packing{"packing witness is disjoint and optimal", 0, 0};
    SuiteResult ieds{"ieds witness is valid and minimal", 0, 0};

    SplitMix64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int v = 4 + static_cast<int>(rng.below(7));  // 4..10
        const int e = std::min(static_cast<int>(rng.below(9)), v * (v - 1) * (v - 2) / 6);
        const Hypergraph3 h = gen_random_h3(v, e, rng.next());

        bool previous = false;
        for (int r = 0; r <= 5; ++r) {
            const bool now = oracle_win_within(h, r);
            if (r > 0) {
                ++monotone.total;
                if (!previous || now) ++monotone.passed;
            }
            previous = now;
        }
        ++unbounded.total;
        if (oracle_win_within(h, 2 * static_cast<int>(h.edges.size()) + 1) == oracle_game_winner(h))
            ++unbounded.passed;

        const auto [best, witness] = oracle_max_packing(h);
        bool disjoint = static_cast<int>(witness.size()) == best;
        std::vector<bool> used(static_cast<std::size_t>(h.num_vertices), false);
        for (int idx : witness)
            for (int x : h.edges[idx]) {
                if (used[x]) disjoint = false;
                used[x] = true;
            }
        int exhaustive = 0;
        const int m = static_cast<int>(h.edges.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> cover(static_cast<std::size_t>(h.num_vertices), 0);
            bool ok = true;
            int size = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) {
                    ++size;
                    for (int x : h.edges[i])
                        if (++cover[x] > 1) ok = false;
                }
            if (ok) exhaustive = std::max(exhaustive, size);
        }
        ++packing.total;
        if (disjoint && best == exhaustive) ++packing.passed;

        const auto [min_size, min_witness] = oracle_min_ieds(h);
        ++ieds.total;
        if (static_cast<int>(min_witness.size()) == min_size &&
            is_independent_dominating_edge_set(h, min_witness)) {
            bool smaller = false;
            for (int mask = 0; mask < (1 << m) && !smaller; ++mask) {
                std::vector<int> picked;
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i)) picked.push_back(i);
                if (static_cast<int>(picked.size()) >= min_size) continue;
                std::vector<bool> taken(static_cast<std::size_t>(h.num_vertices), false);
                bool independent = true;
                for (int i : picked)
                    for (int x : h.edges[i]) {
                        if (taken[x]) independent = false;
                        taken[x] = true;
                    }
                if (!independent) continue;
                bool dominating = true;
                for (const auto& edge : h.edges)
                    if (!taken[edge[0]] && !taken[edge[1]] && !taken[edge[2]]) dominating = false;
                if (dominating) smaller = true;
            }
            if (!smaller) ++ieds.passed;
        }
    }
    return {monotone, unbounded, packing, ieds};
}

} // namespace setlab
