#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/cnf.hpp"
#include "setlab/hypergraph.hpp"

namespace setlab {

/// Rewrites every unit clause (l) as (l v y) and (l v ~y) with a fresh
/// variable, leaving the formula equisatisfiable with clause sizes >= 2.
inline CnfFormula expand_unit_clauses(const CnfFormula& f) {
    CnfFormula out;
    out.num_vars = f.num_vars;
    for (const Clause& c : f.clauses) {
        if (c.size() == 1) {
            const int fresh = out.num_vars++;
            out.clauses.push_back({c[0], {fresh, false}});
            out.clauses.push_back({c[0], {fresh, true}});
        } else {
            out.clauses.push_back(c);
        }
    }
    return out;
}

/// Equisatisfiable rewrite in which every variable occurs exactly 3 times
/// with mixed signs, clauses have 2 or 3 literals, and two clauses share at
/// most one variable.
///
/// Clauses are duplicated (lowest-index clause containing the deficient
/// variable, lowest variable first) until every variable occurs at least 4
/// times; each occurrence then becomes a fresh variable, chained by the
/// implication ring (~v_i v v_{i+1}), (~v_l v v_1).
inline CnfFormula normalize_formula(const CnfFormula& f) {
    validate_formula(f);
    for (const Clause& c : f.clauses) {
        if (c.size() > 3) throw std::invalid_argument("normalize_formula: clause with more than 3 literals");
        if (c.size() < 2)
            throw std::invalid_argument("normalize_formula: expand unit clauses first");
    }

    std::vector<Clause> clauses = f.clauses;
    auto counts = [&]() {
        std::vector<int> n(static_cast<std::size_t>(f.num_vars), 0);
        for (const Clause& c : clauses)
            for (const Literal& l : c) ++n[l.var];
        return n;
    };
    for (;;) {
        auto n = counts();
        int deficient = -1;
        for (int v = 0; v < f.num_vars; ++v)
            if (n[v] >= 1 && n[v] < 4) { deficient = v; break; }
        if (deficient < 0) break;
        for (const Clause& c : clauses) {
            bool contains = false;
            for (const Literal& l : c)
                if (l.var == deficient) contains = true;
            if (contains) { clauses.push_back(c); break; }
        }
    }

    // one fresh variable per occurrence, in clause order
    CnfFormula out;
    std::vector<std::vector<int>> ring(static_cast<std::size_t>(f.num_vars));
    for (Clause& c : clauses) {
        for (Literal& l : c) {
            const int fresh = out.num_vars++;
            ring[l.var].push_back(fresh);
            l.var = fresh;
        }
        out.clauses.push_back(c);
    }
    for (int v = 0; v < f.num_vars; ++v) {
        const auto& vs = ring[v];
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs.size() == 1) break;  // unreachable after duplication; kept for safety
            const int cur = vs[i];
            const int next = vs[(i + 1) % vs.size()];
            out.clauses.push_back({{cur, true}, {next, false}});
        }
    }
    return out;
}

/// Checks the facts build_sat_gadget_deck relies on; throws otherwise.
inline void require_normalized(const CnfFormula& f) {
    validate_formula(f);
    auto counts = occurrence_counts(f);
    std::vector<int> positive(static_cast<std::size_t>(f.num_vars), 0);
    for (const Clause& c : f.clauses) {
        if (c.size() < 2 || c.size() > 3)
            throw std::invalid_argument("normalized formula needs clause sizes 2 or 3");
        for (const Literal& l : c)
            if (!l.negated) ++positive[l.var];
    }
    for (int v = 0; v < f.num_vars; ++v) {
        if (counts[v] != 3) throw std::invalid_argument("every variable must occur exactly 3 times");
        if (positive[v] == 0 || positive[v] == 3)
            throw std::invalid_argument("variable occurrences must not share one sign");
    }
    for (std::size_t a = 0; a < f.clauses.size(); ++a)
        for (std::size_t b = a + 1; b < f.clauses.size(); ++b) {
            int shared = 0;
            for (const Literal& x : f.clauses[a])
                for (const Literal& y : f.clauses[b])
                    if (x.var == y.var) ++shared;
            if (shared > 1) throw std::invalid_argument("two clauses share more than one variable");
        }
}

enum class GadgetRole { occurrence, var_pair, var_all, clause_lit, clause_anchor };

struct GadgetCard {
    GadgetRole role = GadgetRole::occurrence;
    int var = -1;         // occurrence / var_pair / var_all
    int occurrence = 0;   // 1..3; 1 and 2 share a sign, 3 is the minority sign
    bool negated = false; // the occurrence literal's sign
    int clause = -1;      // occurrence / clause_lit / clause_anchor
    int position = 0;     // 1-based literal position for occurrence / clause_lit
};

/// The SAT gadget deck plus the role of each card and the family of Sets
/// the construction intends to exist.
struct GadgetDeck {
    Deck deck;
    std::vector<GadgetCard> roles;
    std::vector<SetTriple> intended_sets;
};

/// Builds the gadget deck of a normalized formula over n'+1+m' attributes:
/// coordinates 0..n'-1 are the variable part, n' the dummy, n'+1.. the
/// clause part. Each variable contributes its three occurrence cards plus
/// the two pair cards; each clause contributes one card per literal
/// position plus an anchor card.
inline GadgetDeck build_sat_gadget_deck(const CnfFormula& f) {
    require_normalized(f);
    const int nv = f.num_vars;
    const int mc = static_cast<int>(f.clauses.size());
    const int width = nv + 1 + mc;
    const int dummy_coord = nv;
    auto clause_coord = [&](int j) { return nv + 1 + j; };

    struct Occurrence {
        int clause, position;  // position is 1-based
        bool negated;
    };
    std::vector<std::vector<Occurrence>> occs(static_cast<std::size_t>(nv));
    for (int j = 0; j < mc; ++j)
        for (std::size_t p = 0; p < f.clauses[j].size(); ++p) {
            const Literal& l = f.clauses[j][p];
            occs[l.var].push_back({j, static_cast<int>(p) + 1, l.negated});
        }

    GadgetDeck gd;
    gd.deck.n = width;
    // card index of each (clause, position) occurrence, filled in the
    // variable pass and consumed by the clause pass
    std::map<std::pair<int, int>, int> occ_card;

    auto add_card = [&](CardVector c, GadgetCard role) {
        gd.deck.cards.push_back(std::move(c));
        gd.roles.push_back(role);
        return static_cast<int>(gd.deck.cards.size()) - 1;
    };
    auto add3 = [&](Trit& slot, int delta) { slot = static_cast<Trit>((slot + delta) % 3); };

    for (int v = 0; v < nv; ++v) {
        auto& o = occs[v];
        // x_1 and x_2 are the majority-sign occurrences, x_3 the minority
        int neg = 0;
        for (const auto& oc : o) neg += oc.negated ? 1 : 0;
        const bool majority_negated = neg == 2;
        std::stable_partition(o.begin(), o.end(),
                              [&](const Occurrence& oc) { return oc.negated == majority_negated; });

        std::array<int, 3> card_of{};
        for (int i = 0; i < 3; ++i) {
            CardVector c(std::vector<Trit>(static_cast<std::size_t>(width), 0));
            c[v] = 1;
            c[clause_coord(o[i].clause)] = 1;
            card_of[i] = add_card(std::move(c), {GadgetRole::occurrence, v, i + 1, o[i].negated,
                                                 o[i].clause, o[i].position});
            occ_card[{o[i].clause, o[i].position}] = card_of[i];
        }
        CardVector pair(std::vector<Trit>(static_cast<std::size_t>(width), 0));
        pair[v] = 1;
        add3(pair[clause_coord(o[0].clause)], 2);  // -(1+1) per clause coord
        add3(pair[clause_coord(o[1].clause)], 2);
        const int pair_idx = add_card(std::move(pair), {GadgetRole::var_pair, v, 0, false, -1, 0});

        CardVector all(std::vector<Trit>(static_cast<std::size_t>(width), 0));
        all[v] = 1;
        add3(all[clause_coord(o[2].clause)], 2);   // -(x_3 + pair) on the clause part
        add3(all[clause_coord(o[0].clause)], 1);
        add3(all[clause_coord(o[1].clause)], 1);
        const int all_idx = add_card(std::move(all), {GadgetRole::var_all, v, 0, false, -1, 0});

        auto sorted = [](std::array<int, 3> t) {
            std::sort(t.begin(), t.end());
            return SetTriple{t};
        };
        gd.intended_sets.push_back(sorted({card_of[0], card_of[1], pair_idx}));
        gd.intended_sets.push_back(sorted({card_of[2], pair_idx, all_idx}));
    }

    for (int j = 0; j < mc; ++j) {
        const Clause& c = f.clauses[j];
        const int size = static_cast<int>(c.size());
        // anchor: sum of the literal cards' variable parts, padded by the
        // dummy coordinate for 2-literal clauses
        CardVector anchor(std::vector<Trit>(static_cast<std::size_t>(width), 0));
        for (const Literal& l : c) add3(anchor[l.var], 1);
        if (size == 2) anchor[dummy_coord] = 1;
        anchor[clause_coord(j)] = 1;

        std::vector<int> lit_cards;
        for (int p = 1; p <= size; ++p) {
            CardVector lit(std::vector<Trit>(static_cast<std::size_t>(width), 0));
            for (int q = 1; q <= size; ++q)
                add3(lit[c[static_cast<std::size_t>(q - 1)].var], q == p ? 1 : 2);
            if (size == 2) lit[dummy_coord] = 2;
            lit[clause_coord(j)] = 1;
            lit_cards.push_back(add_card(std::move(lit), {GadgetRole::clause_lit, -1, 0, false, j, p}));
        }
        const int anchor_idx =
            add_card(std::move(anchor), {GadgetRole::clause_anchor, -1, 0, false, j, 0});

        for (int p = 1; p <= size; ++p) {
            std::array<int, 3> t{occ_card.at({j, p}), lit_cards[static_cast<std::size_t>(p - 1)],
                                 anchor_idx};
            std::sort(t.begin(), t.end());
            gd.intended_sets.push_back(SetTriple{t});
        }
    }

    std::sort(gd.intended_sets.begin(), gd.intended_sets.end());
    validate_deck(gd.deck);  // also rejects colliding role vectors
    return gd;
}

/// Result of comparing a gadget deck's actual Sets with the intended ones.
struct GadgetCheck {
    bool exact = false;
    std::vector<SetTriple> extra;    // enumerated but not intended
    std::vector<SetTriple> missing;  // intended but not enumerated
};

inline GadgetCheck verify_gadget_sets(const GadgetDeck& gd) {
    GadgetCheck out;
    const auto actual = enumerate_sets(gd.deck);
    std::set_difference(actual.begin(), actual.end(), gd.intended_sets.begin(),
                        gd.intended_sets.end(), std::back_inserter(out.extra));
    std::set_difference(gd.intended_sets.begin(), gd.intended_sets.end(), actual.begin(),
                        actual.end(), std::back_inserter(out.missing));
    out.exact = out.extra.empty() && out.missing.empty();
    return out;
}

namespace detail {

struct RSetSearch {
    const std::vector<std::array<int, 3>>* edges = nullptr;
    int target = 0;
    std::vector<bool> edge_alive;
    std::vector<int> chosen;

    // each packed edge has a distinct minimum vertex
    int upper_bound() const {
        std::set<int> mins;
        for (std::size_t e = 0; e < edges->size(); ++e)
            if (edge_alive[e]) mins.insert((*edges)[e][0]);
        return static_cast<int>(mins.size());
    }

    bool search() {
        if (static_cast<int>(chosen.size()) == target) return true;
        int v = -1;
        for (std::size_t e = 0; e < edges->size(); ++e)
            if (edge_alive[e] && ((*edges)[e][0] < v || v < 0)) v = (*edges)[e][0];
        if (v < 0) return false;
        if (static_cast<int>(chosen.size()) + upper_bound() < target) return false;

        // either some chosen edge uses the lowest live vertex, or none does
        for (std::size_t e = 0; e < edges->size(); ++e) {
            const auto& edge = (*edges)[e];
            if (!edge_alive[e] || (edge[0] != v && edge[1] != v && edge[2] != v)) continue;
            std::vector<std::size_t> killed;
            for (std::size_t g = 0; g < edges->size(); ++g)
                if (edge_alive[g] && edges_share_vertex(edge, (*edges)[g])) {
                    edge_alive[g] = false;
                    killed.push_back(g);
                }
            chosen.push_back(static_cast<int>(e));
            if (search()) return true;
            chosen.pop_back();
            for (std::size_t g : killed) edge_alive[g] = true;
        }
        std::vector<std::size_t> killed;
        for (std::size_t g = 0; g < edges->size(); ++g) {
            const auto& edge = (*edges)[g];
            if (edge_alive[g] && (edge[0] == v || edge[1] == v || edge[2] == v)) {
                edge_alive[g] = false;
                killed.push_back(g);
            }
        }
        const bool found = search();
        if (!found)
            for (std::size_t g : killed) edge_alive[g] = true;
        return found;
    }

    static bool edges_share_vertex(const std::array<int, 3>& a, const std::array<int, 3>& b) {
        for (int u : a)
            for (int w : b)
                if (u == w) return true;
        return false;
    }
};

} // namespace detail

/// Decides whether the deck admits r pairwise disjoint Sets; on success the
/// witness lists r such Sets.
inline std::pair<bool, std::vector<SetTriple>> solve_max_rset(const Deck& deck, int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    const Hypergraph3 h = build_set_hypergraph(deck);
    if (r == 0) return {true, {}};
    detail::RSetSearch s;
    s.edges = &h.edges;
    s.target = r;
    s.edge_alive.assign(h.edges.size(), true);
    if (!s.search()) return {false, {}};
    std::vector<SetTriple> witness;
    for (int e : s.chosen) witness.push_back(SetTriple{h.edges[e]});
    std::sort(witness.begin(), witness.end());
    return {true, witness};
}

/// Reads a truth assignment off a gadget packing: picking a variable
/// gadget's majority Set frees the minority occurrence, so the variable is
/// set to make that occurrence's literal true, and vice versa.
inline std::vector<bool> assignment_from_packing(const GadgetDeck& gd,
                                                 const std::vector<SetTriple>& packing,
                                                 int num_vars) {
    std::vector<bool> assignment(static_cast<std::size_t>(num_vars), false);
    std::set<SetTriple> packed(packing.begin(), packing.end());

    struct VarCards {
        std::array<int, 3> occ{-1, -1, -1};
        std::array<bool, 3> negated{};
        int pair = -1, all = -1;
    };
    std::vector<VarCards> vars(static_cast<std::size_t>(num_vars));
    for (int i = 0; i < static_cast<int>(gd.roles.size()); ++i) {
        const GadgetCard& rc = gd.roles[i];
        if (rc.role == GadgetRole::occurrence) {
            vars[rc.var].occ[rc.occurrence - 1] = i;
            vars[rc.var].negated[rc.occurrence - 1] = rc.negated;
        } else if (rc.role == GadgetRole::var_pair) {
            vars[rc.var].pair = i;
        } else if (rc.role == GadgetRole::var_all) {
            vars[rc.var].all = i;
        }
    }
    auto sorted = [](std::array<int, 3> t) {
        std::sort(t.begin(), t.end());
        return SetTriple{t};
    };
    for (int v = 0; v < num_vars; ++v) {
        const VarCards& vc = vars[v];
        if (vc.pair < 0) continue;
        if (packed.count(sorted({vc.occ[0], vc.occ[1], vc.pair})))
            assignment[v] = !vc.negated[2];  // minority occurrence stays free
        else if (packed.count(sorted({vc.occ[2], vc.pair, vc.all})))
            assignment[v] = !vc.negated[0];  // majority occurrences stay free
    }
    return assignment;
}

} // namespace setlab
