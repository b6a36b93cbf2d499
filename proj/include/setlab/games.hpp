#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/hypergraph.hpp"
#include "setlab/oracles.hpp"

namespace setlab {

struct OrderedVertex {
    int level = 0;         // 0-based partite level
    int source_edge = -1;  // hyperedge the copy came from; -1 for collapse replacements
    std::uint32_t colors = 0;  // bitmask over hitting-set vertex indices
};

/// L-partite graph for the ordered vertex-selection game: level i holds one
/// copy of every hyperedge, a vertex's colors are the hitting-set vertices
/// its hyperedge contains, and copies of intersecting (or equal) hyperedges
/// are adjacent across levels.
struct OrderedKaylesGraph {
    int num_levels = 0;
    int hitting_set_size = 0;
    std::vector<OrderedVertex> verts;
    std::vector<std::vector<bool>> adj;

    bool adjacent(int u, int v) const { return adj[u][v]; }
    int size() const { return static_cast<int>(verts.size()); }

    std::vector<int> level_sizes() const {
        std::vector<int> sizes(static_cast<std::size_t>(num_levels), 0);
        for (const OrderedVertex& v : verts) ++sizes[v.level];
        return sizes;
    }
};

/// What the kernelization did to an instance.
struct KernelReport {
    std::vector<int> original_level_sizes;
    std::vector<int> reduced_level_sizes;
    int collapse_events = 0;  // collapsed single-color classes
    int merge_events = 0;     // vertices removed by equivalence merging
};

inline std::uint32_t edge_colors(const std::array<int, 3>& edge, const VertexSet& hitting_set) {
    std::uint32_t colors = 0;
    for (std::size_t i = 0; i < hitting_set.size(); ++i)
        for (int v : edge)
            if (v == hitting_set[i]) colors |= std::uint32_t{1} << i;
    return colors;
}

/// L copies of every hyperedge, one per level; copies of two hyperedges are
/// adjacent across levels when the hyperedges intersect, and copies of one
/// hyperedge are mutually adjacent (a removed Set cannot be replayed).
inline OrderedKaylesGraph build_ordered_kayles(const Hypergraph3& h, int num_levels,
                                               const VertexSet& hitting_set) {
    if (num_levels < 1) throw std::invalid_argument("need at least one level");
    if (hitting_set.size() > 32) throw CapacityError("hitting sets above 32 vertices unsupported");
    std::vector<bool> in_hs(static_cast<std::size_t>(h.num_vertices), false);
    for (int v : hitting_set) {
        if (v < 0 || v >= h.num_vertices)
            throw std::invalid_argument("hitting set vertex out of range");
        in_hs[v] = true;
    }
    for (const auto& e : h.edges)
        if (!in_hs[e[0]] && !in_hs[e[1]] && !in_hs[e[2]])
            throw std::invalid_argument("hitting set misses a hyperedge");

    OrderedKaylesGraph g;
    g.num_levels = num_levels;
    g.hitting_set_size = static_cast<int>(hitting_set.size());
    const int m = static_cast<int>(h.edges.size());
    for (int level = 0; level < num_levels; ++level)
        for (int e = 0; e < m; ++e)
            g.verts.push_back({level, e, edge_colors(h.edges[e], hitting_set)});

    const int n = g.size();
    g.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.verts[u].level == g.verts[v].level) continue;
            const auto& eu = h.edges[g.verts[u].source_edge];
            const auto& ev = h.edges[g.verts[v].source_edge];
            bool share = g.verts[u].source_edge == g.verts[v].source_edge;
            for (int a : eu)
                for (int b : ev)
                    if (a == b) share = true;
            if (share) g.adj[u][v] = g.adj[v][u] = true;
        }
    return g;
}

namespace detail {

inline OrderedKaylesGraph rebuild_without(const OrderedKaylesGraph& g,
                                          const std::vector<bool>& drop) {
    OrderedKaylesGraph out;
    out.num_levels = g.num_levels;
    out.hitting_set_size = g.hitting_set_size;
    std::vector<int> new_id(g.verts.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (drop[v]) continue;
        new_id[v] = static_cast<int>(out.verts.size());
        out.verts.push_back(g.verts[v]);
    }
    const int n = static_cast<int>(out.verts.size());
    out.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < g.size(); ++u) {
        if (drop[u]) continue;
        for (int v = 0; v < g.size(); ++v)
            if (!drop[v] && g.adj[u][v]) out.adj[new_id[u]][new_id[v]] = true;
    }
    return out;
}

} // namespace detail

/// Replaces every single-color class of the last level that has at least
/// 2L vertices by one fresh vertex wired to every color-mate in the other
/// levels. Classes with two or three colors are singletons and untouched.
inline OrderedKaylesGraph collapse_last_level(const OrderedKaylesGraph& g,
                                              KernelReport* report = nullptr) {
    const int last = g.num_levels - 1;
    std::vector<bool> drop(g.verts.size(), false);
    std::vector<std::uint32_t> replacements;
    for (int color = 0; color < g.hitting_set_size; ++color) {
        const std::uint32_t mask = std::uint32_t{1} << color;
        std::vector<int> cls;
        for (int v = 0; v < g.size(); ++v)
            if (g.verts[v].level == last && g.verts[v].colors == mask) cls.push_back(v);
        if (static_cast<int>(cls.size()) < 2 * g.num_levels) continue;
        for (int v : cls) drop[v] = true;
        replacements.push_back(mask);
        if (report) ++report->collapse_events;
    }
    if (replacements.empty()) return g;

    OrderedKaylesGraph out = detail::rebuild_without(g, drop);
    for (std::uint32_t mask : replacements) {
        const int fresh = out.size();
        out.verts.push_back({last, -1, mask});
        for (auto& row : out.adj) row.push_back(false);
        out.adj.emplace_back(static_cast<std::size_t>(out.size()), false);
        for (int v = 0; v < fresh; ++v)
            if (out.verts[v].level != last && (out.verts[v].colors & mask))
                out.adj[fresh][v] = out.adj[v][fresh] = true;
    }
    return out;
}

/// Merges vertices of one level that have identical color sets and
/// identical neighborhoods in all higher levels. The representative is the
/// member with the lowest source edge id and keeps the union of the class's
/// lower-level adjacencies.
inline OrderedKaylesGraph merge_equivalent(const OrderedKaylesGraph& g, int level,
                                           KernelReport* report = nullptr) {
    if (level < 0 || level >= g.num_levels) throw std::invalid_argument("level out of range");
    std::map<std::pair<std::uint32_t, std::vector<int>>, std::vector<int>> classes;
    for (int v = 0; v < g.size(); ++v) {
        if (g.verts[v].level != level) continue;
        std::vector<int> higher;
        for (int u = 0; u < g.size(); ++u)
            if (g.verts[u].level > level && g.adj[v][u]) higher.push_back(u);
        classes[{g.verts[v].colors, std::move(higher)}].push_back(v);
    }

    std::vector<bool> drop(g.verts.size(), false);
    OrderedKaylesGraph merged = g;
    bool any = false;
    for (auto& [key, members] : classes) {
        if (members.size() < 2) continue;
        any = true;
        int rep = members[0];
        for (int v : members)
            if (g.verts[v].source_edge < g.verts[rep].source_edge) rep = v;
        for (int v : members) {
            if (v == rep) continue;
            drop[v] = true;
            if (report) ++report->merge_events;
            for (int u = 0; u < g.size(); ++u)
                if (u != rep && merged.adj[v][u]) merged.adj[rep][u] = merged.adj[u][rep] = true;
        }
    }
    if (!any) return g;
    return detail::rebuild_without(merged, drop);
}

namespace detail {

inline bool ordered_kayles_rec(const OrderedKaylesGraph& g, int level, std::vector<int>& selected,
                               std::map<std::pair<int, std::vector<int>>, bool>& memo) {
    if (level == g.num_levels) return false;  // play ran the full course
    auto key = std::make_pair(level, selected);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<int> legal;
    for (int v = 0; v < g.size(); ++v) {
        if (g.verts[v].level != level) continue;
        bool blocked = false;
        for (int u : selected)
            if (g.adjacent(u, v)) { blocked = true; break; }
        if (!blocked) legal.push_back(v);
    }

    bool result;
    if (legal.empty()) {
        result = level % 2 == 1;  // the stuck mover at an odd level is player 2
    } else {
        const bool maximizing = level % 2 == 0;
        result = !maximizing;
        for (int v : legal) {
            selected.push_back(v);
            const bool child = ordered_kayles_rec(g, level + 1, selected, memo);
            selected.pop_back();
            if (maximizing && child) { result = true; break; }
            if (!maximizing && !child) { result = false; break; }
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

/// True iff player 1 can force player 2 to have no legal vertex at some
/// even level; a play that completes every level fails for player 1.
inline bool solve_ordered_kayles(const OrderedKaylesGraph& g) {
    std::map<std::pair<int, std::vector<int>>, bool> memo;
    std::vector<int> selected;
    return detail::ordered_kayles_rec(g, 0, selected, memo);
}

/// The adjacency bound behind the collapse rule: a vertex without color i
/// has at most 2 neighbors inside any other level's color-i-only class.
/// Holds for graphs built from Set hypergraphs.
inline bool degree_claim_holds(const OrderedKaylesGraph& g) {
    for (int u = 0; u < g.size(); ++u)
        for (int color = 0; color < g.hitting_set_size; ++color) {
            const std::uint32_t mask = std::uint32_t{1} << color;
            if (g.verts[u].colors & mask) continue;
            std::vector<int> count(static_cast<std::size_t>(g.num_levels), 0);
            for (int v = 0; v < g.size(); ++v)
                if (g.verts[v].colors == mask && g.adjacent(u, v)) ++count[g.verts[v].level];
            for (int level = 0; level < g.num_levels; ++level)
                if (level != g.verts[u].level && count[level] > 2) return false;
        }
    return true;
}

/// Structural facts the construction promises: every vertex has 1..3
/// colors, a color pair pins at most one vertex per level, and same-color
/// vertices of different levels are always adjacent.
inline bool color_structure_ok(const OrderedKaylesGraph& g) {
    for (const OrderedVertex& v : g.verts) {
        const int c = std::popcount(v.colors);
        if (c < 1 || c > 3) return false;
    }
    for (int level = 0; level < g.num_levels; ++level) {
        std::map<std::pair<int, int>, int> pair_count;
        for (int v = 0; v < g.size(); ++v) {
            if (g.verts[v].level != level) continue;
            for (int a = 0; a < g.hitting_set_size; ++a)
                for (int b = a + 1; b < g.hitting_set_size; ++b)
                    if ((g.verts[v].colors >> a & 1) && (g.verts[v].colors >> b & 1))
                        if (++pair_count[{a, b}] > 1) return false;
        }
    }
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.verts[u].level != g.verts[v].level && (g.verts[u].colors & g.verts[v].colors) &&
                !g.adjacent(u, v))
                return false;
    return true;
}

enum class TwoPlayerMethod { kernel, brute };

/// WIN-WITHIN on a deck's Set hypergraph. The kernel method computes a
/// hitting set of size at most 3r (none: answer no), builds the ordered
/// graph on r+1 levels, collapses the last level, merges every lower level
/// top-down and solves the reduced game; the brute method searches the
/// game tree directly.
inline bool solve_2p_within(const Deck& deck, int r, TwoPlayerMethod method,
                            KernelReport* report = nullptr) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    const Hypergraph3 h = build_set_hypergraph(deck);
    if (method == TwoPlayerMethod::brute) return oracle_win_within(h, r);

    const auto hitting = min_hitting_set(h, 3 * r);
    if (!hitting) return false;
    OrderedKaylesGraph g = build_ordered_kayles(h, r + 1, *hitting);
    if (report) {
        report->original_level_sizes = g.level_sizes();
        report->collapse_events = 0;
        report->merge_events = 0;
    }
    g = collapse_last_level(g, report);
    for (int level = g.num_levels - 2; level >= 0; --level) g = merge_equivalent(g, level, report);
    if (report) report->reduced_level_sizes = g.level_sizes();
    return solve_ordered_kayles(g);
}

enum class ArcKaylesMethod { fpt, brute };

/// WIN-WITHIN for the edge-removal game on a simple graph. The fpt method
/// needs a vertex cover of size at most 2r (none: answer no), groups the
/// remaining independent vertices by cover neighborhood, truncates every
/// class with t cover neighbors to t members, and runs the brute search on
/// what is left.
inline bool arc_kayles_within(const SimpleGraph& g, int r, ArcKaylesMethod method) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    validate_graph(g);
    if (method == ArcKaylesMethod::brute) return oracle_arc_win_within(g, r);

    const auto cover = min_vertex_cover(g, 2 * r);
    if (!cover) return false;
    std::vector<bool> in_cover(static_cast<std::size_t>(g.num_vertices), false);
    for (int v : *cover) in_cover[v] = true;

    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < g.num_vertices; ++v) {
        if (in_cover[v]) continue;
        std::vector<int> nbhd;
        for (const auto& e : g.edges) {
            if (e[0] == v) nbhd.push_back(e[1]);
            if (e[1] == v) nbhd.push_back(e[0]);
        }
        std::sort(nbhd.begin(), nbhd.end());
        classes[std::move(nbhd)].push_back(v);
    }

    std::vector<bool> keep(static_cast<std::size_t>(g.num_vertices), false);
    for (int v : *cover) keep[v] = true;
    for (const auto& [nbhd, members] : classes) {
        const int limit = static_cast<int>(nbhd.size());
        for (int i = 0; i < limit && i < static_cast<int>(members.size()); ++i)
            keep[members[i]] = true;
    }

    SimpleGraph reduced;
    std::vector<int> new_id(static_cast<std::size_t>(g.num_vertices), -1);
    for (int v = 0; v < g.num_vertices; ++v)
        if (keep[v]) new_id[v] = reduced.num_vertices++;
    for (const auto& e : g.edges)
        if (keep[e[0]] && keep[e[1]])
            reduced.edges.push_back({new_id[e[0]], new_id[e[1]]});
    std::sort(reduced.edges.begin(), reduced.edges.end());
    return oracle_arc_win_within(reduced, r);
}

/// Unbounded normal play on a deck: first player unable to take a Set loses.
inline bool solve_game_winner(const Deck& deck) {
    return oracle_game_winner(build_set_hypergraph(deck));
}

} // namespace setlab
