#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/cnf.hpp"
#include "setlab/errors.hpp"
#include "setlab/hypergraph.hpp"
#include "setlab/pmdm.hpp"

namespace setlab {

/// Fixed 128-bit vertex mask; enough for any deck the game solvers accept.
struct VertexMask {
    std::array<std::uint64_t, 2> w{0, 0};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }

    bool operator==(const VertexMask&) const = default;
};

struct VertexMaskHash {
    std::size_t operator()(const VertexMask& m) const {
        std::uint64_t h = m.w[0] * 0x9e3779b97f4a7c15ULL;
        h ^= m.w[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Position in an alternating removal game: removed vertices plus the
/// number of moves made so far. Each move deletes one whole edge.
struct GameState {
    VertexMask removed;
    int moves_made = 0;
};

inline constexpr int kMaxGameVertices = 128;

namespace detail {

using WordVec = std::vector<std::uint64_t>;

inline int first_bit(const WordVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) return static_cast<int>(i * 64) + std::countr_zero(v[i]);
    return -1;
}

inline void clear_bit(WordVec& v, int i) { v[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool test_bit(const WordVec& v, int i) { return (v[i >> 6] >> (i & 63)) & 1; }

struct WordVecHash {
    std::size_t operator()(const WordVec& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : v) h = (h ^ w) * 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(h);
    }
};

struct PackingSearch {
    const std::vector<std::array<int, 3>>* edges = nullptr;
    int num_vertices = 0;
    std::vector<WordVec> conflict;  // conflict[e] includes e itself
    // identical components recur across sibling branches
    mutable std::unordered_map<WordVec, std::pair<int, std::vector<int>>, WordVecHash> memo;

    std::vector<int> alive_edges(const WordVec& rem) const {
        std::vector<int> alive;
        for (std::size_t w = 0; w < rem.size(); ++w) {
            std::uint64_t bits = rem[w];
            while (bits) {
                alive.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return alive;
    }

    // A packing uses at most one edge through any vertex, so greedily
    // covering the remaining edges by vertex stars (largest star first)
    // bounds the packing by the number of stars.
    int star_cover_bound(const WordVec& rem) const {
        std::vector<int> degree(static_cast<std::size_t>(num_vertices), 0);
        const std::vector<int> alive = alive_edges(rem);
        for (int e : alive)
            for (int v : (*edges)[e]) ++degree[v];
        std::vector<bool> taken(alive.size(), false);
        int bound = 0;
        for (;;) {
            int hub = -1;
            for (int v = num_vertices - 1; v >= 0; --v)
                if (degree[v] > 1 && (hub < 0 || degree[v] > degree[hub])) hub = v;
            if (hub < 0) break;
            ++bound;
            for (std::size_t i = 0; i < alive.size(); ++i) {
                if (taken[i]) continue;
                const auto& e = (*edges)[alive[i]];
                if (e[0] != hub && e[1] != hub && e[2] != hub) continue;
                taken[i] = true;
                for (int v : e) --degree[v];
            }
        }
        for (std::size_t i = 0; i < alive.size(); ++i)
            if (!taken[i]) ++bound;  // leftover edges are singleton stars
        return bound;
    }

    // Exact maximum packing of the remaining edges with one witness.
    // Conflict-connected components are independent, so their optima add.
    std::pair<int, std::vector<int>> exact_max(const WordVec& rem) const {
        std::vector<WordVec> components;
        WordVec left = rem;
        int seed;
        while ((seed = first_bit(left)) >= 0) {
            WordVec comp(left.size(), 0), frontier(left.size(), 0);
            frontier[seed >> 6] |= std::uint64_t{1} << (seed & 63);
            clear_bit(left, seed);
            while (true) {
                WordVec next(left.size(), 0);
                bool grew = false;
                for (int f : alive_edges(frontier))
                    for (std::size_t w = 0; w < left.size(); ++w) next[w] |= conflict[f][w] & left[w];
                for (std::size_t w = 0; w < left.size(); ++w) {
                    comp[w] |= frontier[w];
                    if (next[w]) grew = true;
                    left[w] &= ~next[w];
                }
                if (!grew) break;
                frontier = std::move(next);
            }
            components.push_back(std::move(comp));
        }

        int total = 0;
        std::vector<int> witness;
        for (const WordVec& comp : components) {
            const auto [size, picked] = branch_connected(comp);
            total += size;
            witness.insert(witness.end(), picked.begin(), picked.end());
        }
        return {total, witness};
    }

    // Branch on the largest star of a connected component: one branch per
    // edge through the hub, plus the branch using none of them.
    std::pair<int, std::vector<int>> branch_connected(const WordVec& rem) const {
        const std::vector<int> alive = alive_edges(rem);
        if (alive.size() == 1) return {1, alive};
        auto hit = memo.find(rem);
        if (hit != memo.end()) return hit->second;
        std::vector<int> degree(static_cast<std::size_t>(num_vertices), 0);
        for (int e : alive)
            for (int v : (*edges)[e]) ++degree[v];
        int hub = -1;
        for (int v = num_vertices - 1; v >= 0; --v)
            if (degree[v] > 1 && (hub < 0 || degree[v] > degree[hub])) hub = v;

        int best = -1;
        std::vector<int> witness;
        WordVec rest = rem;
        for (int e : alive) {
            const auto& edge = (*edges)[e];
            if (edge[0] != hub && edge[1] != hub && edge[2] != hub) continue;
            clear_bit(rest, e);
            WordVec included = rem;
            for (std::size_t w = 0; w < rem.size(); ++w) included[w] &= ~conflict[e][w];
            if (1 + star_cover_bound(included) <= best) continue;
            const auto [size, picked] = exact_max(included);
            if (1 + size > best) {
                best = 1 + size;
                witness.clear();
                witness.push_back(e);
                witness.insert(witness.end(), picked.begin(), picked.end());
            }
        }
        if (star_cover_bound(rest) > best) {
            const auto [size, picked] = exact_max(rest);
            if (size > best) {
                best = size;
                witness = picked;
            }
        }
        memo.emplace(rem, std::make_pair(best, witness));
        return {best, witness};
    }
};

inline bool edges_conflict(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int u : a)
        for (int v : b)
            if (u == v) return true;
    return false;
}

} // namespace detail

/// Maximum number of pairwise vertex-disjoint hyperedges, with the first
/// optimum witness found by include/exclude branching on the lowest
/// remaining edge.
inline std::pair<int, std::vector<int>> oracle_max_packing(const Hypergraph3& h) {
    const int m = static_cast<int>(h.edges.size());
    const std::size_t words = static_cast<std::size_t>((m + 63) / 64);
    detail::PackingSearch search;
    search.edges = &h.edges;
    search.num_vertices = h.num_vertices;
    search.conflict.assign(static_cast<std::size_t>(m), detail::WordVec(words, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a == b || detail::edges_conflict(h.edges[a], h.edges[b]))
                search.conflict[a][b >> 6] |= std::uint64_t{1} << (b & 63);
    detail::WordVec rem(words, 0);
    for (int e = 0; e < m; ++e) rem[e >> 6] |= std::uint64_t{1} << (e & 63);
    auto [best, witness] = search.exact_max(rem);
    std::sort(witness.begin(), witness.end());
    return {best, witness};
}

namespace detail {

inline void min_ieds_rec(const Hypergraph3& h, int next_edge, std::vector<int>& current,
                         std::vector<bool>& used, int& best, std::vector<int>& witness) {
    if (best >= 0 && static_cast<int>(current.size()) >= best) return;
    if (next_edge == static_cast<int>(h.edges.size())) {
        for (const auto& e : h.edges)
            if (!used[e[0]] && !used[e[1]] && !used[e[2]]) return;  // not dominating
        best = static_cast<int>(current.size());
        witness = current;
        return;
    }
    const auto& e = h.edges[next_edge];
    if (!used[e[0]] && !used[e[1]] && !used[e[2]]) {
        used[e[0]] = used[e[1]] = used[e[2]] = true;
        current.push_back(next_edge);
        min_ieds_rec(h, next_edge + 1, current, used, best, witness);
        current.pop_back();
        used[e[0]] = used[e[1]] = used[e[2]] = false;
    }
    min_ieds_rec(h, next_edge + 1, current, used, best, witness);
}

} // namespace detail

/// Minimum independent edge dominating set, exhaustively over independent
/// edge families. A hypergraph without edges has the empty answer.
inline std::pair<int, std::vector<int>> oracle_min_ieds(const Hypergraph3& h) {
    std::vector<int> current, witness;
    std::vector<bool> used(static_cast<std::size_t>(h.num_vertices), false);
    int best = -1;
    detail::min_ieds_rec(h, 0, current, used, best, witness);
    return {best, witness};
}

namespace detail {

template <typename EdgeT>
inline bool edge_free(const EdgeT& e, const VertexMask& removed) {
    for (int v : e)
        if (removed.test(v)) return false;
    return true;
}

template <typename EdgeT>
inline bool any_free_edge(const std::vector<EdgeT>& edges, const VertexMask& removed) {
    for (const auto& e : edges)
        if (edge_free(e, removed)) return true;
    return false;
}

// WIN-WITHIN recursion. The mover at t moves made is player (t mod 2)+1;
// a stuck mover loses (checked before the budget), and a position with
// moves left at t == r fails for player 1.
template <typename EdgeT>
inline bool win_within_rec(const std::vector<EdgeT>& edges, VertexMask removed, int t, int r,
                           std::unordered_map<VertexMask, bool, VertexMaskHash>& memo) {
    if (!any_free_edge(edges, removed)) return t % 2 == 1;
    if (t == r) return false;
    auto it = memo.find(removed);
    if (it != memo.end()) return it->second;
    const bool maximizing = (t % 2 == 0);
    bool result = !maximizing;
    for (const auto& e : edges) {
        if (!edge_free(e, removed)) continue;
        VertexMask next = removed;
        for (int v : e) next.set(v);
        const bool child = win_within_rec(edges, next, t + 1, r, memo);
        if (maximizing && child) { result = true; break; }
        if (!maximizing && !child) { result = false; break; }
    }
    memo.emplace(removed, result);
    return result;
}

template <typename EdgeT>
inline bool game_winner_rec(const std::vector<EdgeT>& edges, VertexMask removed, int t,
                            std::unordered_map<VertexMask, bool, VertexMaskHash>& memo) {
    if (!any_free_edge(edges, removed)) return t % 2 == 1;
    auto it = memo.find(removed);
    if (it != memo.end()) return it->second;
    const bool maximizing = (t % 2 == 0);
    bool result = !maximizing;
    for (const auto& e : edges) {
        if (!edge_free(e, removed)) continue;
        VertexMask next = removed;
        for (int v : e) next.set(v);
        const bool child = game_winner_rec(edges, next, t + 1, memo);
        if (maximizing && child) { result = true; break; }
        if (!maximizing && !child) { result = false; break; }
    }
    memo.emplace(removed, result);
    return result;
}

inline void check_game_capacity(int num_vertices) {
    if (num_vertices > kMaxGameVertices)
        throw CapacityError("game search supports at most 128 vertices");
}

} // namespace detail

/// True iff player 1 can force player 2 to be the first player stuck,
/// within r total moves (the WIN-WITHIN decision).
inline bool oracle_win_within(const Hypergraph3& h, int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    detail::check_game_capacity(h.num_vertices);
    std::unordered_map<VertexMask, bool, VertexMaskHash> memo;
    return detail::win_within_rec(h.edges, VertexMask{}, 0, r, memo);
}

/// True iff player 1 wins normal play with unbounded rounds.
inline bool oracle_game_winner(const Hypergraph3& h) {
    detail::check_game_capacity(h.num_vertices);
    std::unordered_map<VertexMask, bool, VertexMaskHash> memo;
    return detail::game_winner_rec(h.edges, VertexMask{}, 0, memo);
}

/// WIN-WITHIN on a simple graph: a move removes an edge's two endpoints.
inline bool oracle_arc_win_within(const SimpleGraph& g, int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    detail::check_game_capacity(g.num_vertices);
    std::unordered_map<VertexMask, bool, VertexMaskHash> memo;
    return detail::win_within_rec(g.edges, VertexMask{}, 0, r, memo);
}

/// Unbounded normal play on a simple graph.
inline bool oracle_arc_game_winner(const SimpleGraph& g) {
    detail::check_game_capacity(g.num_vertices);
    std::unordered_map<VertexMask, bool, VertexMaskHash> memo;
    return detail::game_winner_rec(g.edges, VertexMask{}, 0, memo);
}

namespace detail {

inline bool clause_dead(const Clause& c, const std::vector<signed char>& assign) {
    for (const Literal& l : c) {
        if (assign[l.var] < 0) return false;                  // undecided
        if ((assign[l.var] == 1) == !l.negated) return false; // satisfied
    }
    return true;  // every literal assigned and false
}

inline bool sat_rec(const CnfFormula& f, std::vector<signed char>& assign, int v,
                    std::vector<bool>& out) {
    if (v == f.num_vars) {
        out.assign(assign.begin(), assign.end());
        return true;
    }
    for (int val = 1; val >= 0; --val) {
        assign[v] = static_cast<signed char>(val);
        bool dead = false;
        for (const Clause& c : f.clauses)
            if (clause_dead(c, assign)) { dead = true; break; }
        if (!dead && sat_rec(f, assign, v + 1, out)) return true;
    }
    assign[v] = -1;
    return false;
}

} // namespace detail

inline constexpr int kMaxSatVars = 50;

/// Some satisfying assignment, or nullopt. Plain backtracking over the
/// variables in index order (true first), abandoning a branch as soon as
/// a clause has every literal assigned false.
inline std::optional<std::vector<bool>> oracle_sat(const CnfFormula& f) {
    validate_formula(f);
    if (f.num_vars > kMaxSatVars)
        throw CapacityError("sat oracle is limited to 50 variables");
    for (const Clause& c : f.clauses)
        if (c.empty()) return std::nullopt;
    std::vector<signed char> assign(static_cast<std::size_t>(f.num_vars), -1);
    std::vector<bool> out;
    if (detail::sat_rec(f, assign, 0, out)) return out;
    return std::nullopt;
}

namespace detail {

inline bool pmdm_rec(const PmdmInstance& inst, std::vector<std::vector<bool>>& covered,
                     std::vector<bool>& used, std::vector<int>& chosen) {
    int dim = -1, value = -1;
    for (int d = 0; d < inst.dims && dim < 0; ++d)
        for (int v = 0; v < inst.values; ++v)
            if (!covered[d][v]) { dim = d; value = v; break; }
    if (dim < 0) return true;  // every slot covered
    for (int i = 0; i < static_cast<int>(inst.multiedges.size()); ++i) {
        if (used[i]) continue;
        const auto& me = inst.multiedges[i];
        if (me[dim] != value) continue;
        bool fits = true;
        for (int d = 0; d < inst.dims; ++d)
            if (covered[d][me[d]]) { fits = false; break; }
        if (!fits) continue;
        for (int d = 0; d < inst.dims; ++d) covered[d][me[d]] = true;
        used[i] = true;
        chosen.push_back(i);
        if (pmdm_rec(inst, covered, used, chosen)) return true;
        chosen.pop_back();
        used[i] = false;
        for (int d = 0; d < inst.dims; ++d) covered[d][me[d]] = false;
    }
    return false;
}

} // namespace detail

/// A perfect multi-dimensional matching as multiedge indices, or nullopt.
/// Backtracking exact cover on the first uncovered (dimension, value) slot.
inline std::optional<std::vector<int>> oracle_pmdm(const PmdmInstance& inst) {
    validate_pmdm(inst);
    std::vector<std::vector<bool>> covered(static_cast<std::size_t>(inst.dims),
                                           std::vector<bool>(static_cast<std::size_t>(inst.values), false));
    std::vector<bool> used(inst.multiedges.size(), false);
    std::vector<int> chosen;
    if (detail::pmdm_rec(inst, covered, used, chosen)) {
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }
    return std::nullopt;
}

} // namespace setlab
