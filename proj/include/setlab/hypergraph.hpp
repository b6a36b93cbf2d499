#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "setlab/cards.hpp"

namespace setlab {

/// Undirected simple graph; edges are sorted vertex pairs, deduplicated.
struct SimpleGraph {
    int num_vertices = 0;
    std::vector<std::array<int, 2>> edges;
};

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<int>;

inline void validate_graph(const SimpleGraph& g) {
    for (const auto& e : g.edges) {
        if (e[0] >= e[1]) throw std::invalid_argument("edge not sorted/distinct");
        if (e[0] < 0 || e[1] >= g.num_vertices) throw std::invalid_argument("edge vertex out of range");
    }
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge");
}

namespace detail {

inline bool edge_covered(const std::array<int, 3>& e, const std::vector<bool>& in_set) {
    return in_set[e[0]] || in_set[e[1]] || in_set[e[2]];
}

inline int first_uncovered_edge(const Hypergraph3& h, const std::vector<bool>& in_set) {
    for (int i = 0; i < static_cast<int>(h.edges.size()); ++i)
        if (!edge_covered(h.edges[i], in_set)) return i;
    return -1;
}

// Extends a hitting set that closed below the target size by every choice
// of additional vertices, so the enumeration really yields every hitting
// set of the exact target size. The branching alone misses supersets of
// hitting sets that cover all edges early.
inline void complete_to_size(const Hypergraph3& h, std::vector<bool>& in_set, int size, int target,
                             int from_vertex, std::set<VertexSet>& out) {
    if (size == target) {
        VertexSet s;
        for (int v = 0; v < h.num_vertices; ++v)
            if (in_set[v]) s.push_back(v);
        out.insert(std::move(s));
        return;
    }
    for (int v = from_vertex; v < h.num_vertices; ++v) {
        if (in_set[v]) continue;
        in_set[v] = true;
        complete_to_size(h, in_set, size + 1, target, v + 1, out);
        in_set[v] = false;
    }
}

inline void hitting_sets_rec(const Hypergraph3& h, std::vector<bool>& in_set, int size, int target,
                             std::set<VertexSet>& out) {
    const int e = first_uncovered_edge(h, in_set);
    if (e < 0) {
        complete_to_size(h, in_set, size, target, 0, out);
        return;
    }
    if (size >= target) return;
    const std::array<int, 3>& edge = h.edges[e];
    for (int mask = 1; mask < 8; ++mask) {  // the 7 nonempty subsets
        int added = 0;
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) ++added;
        if (size + added > target) continue;
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) in_set[edge[b]] = true;
        hitting_sets_rec(h, in_set, size + added, target, out);
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) in_set[edge[b]] = false;
    }
}

} // namespace detail

/// Every hitting set of size exactly `target`, canonically sorted and
/// deduplicated. Branches on the 7 nonempty vertex subsets of the first
/// uncovered hyperedge; branches that cover all edges below the target
/// size are padded with every choice of extra vertices.
inline std::vector<VertexSet> enumerate_hitting_sets_7way(const Hypergraph3& h, int target) {
    if (target < 0) throw std::invalid_argument("target must be nonnegative");
    std::set<VertexSet> out;
    std::vector<bool> in_set(static_cast<std::size_t>(h.num_vertices), false);
    detail::hitting_sets_rec(h, in_set, 0, target, out);
    return {out.begin(), out.end()};
}

namespace detail {

inline bool min_hitting_rec(const Hypergraph3& h, std::vector<bool>& in_set, int size, int bound,
                            VertexSet& result) {
    const int e = first_uncovered_edge(h, in_set);
    if (e < 0) {
        result.clear();
        for (int v = 0; v < h.num_vertices; ++v)
            if (in_set[v]) result.push_back(v);
        return true;
    }
    if (size == bound) return false;
    for (int b = 0; b < 3; ++b) {  // 3-way branch on the uncovered edge
        const int v = h.edges[e][b];
        in_set[v] = true;
        if (min_hitting_rec(h, in_set, size + 1, bound, result)) {
            in_set[v] = false;
            return true;
        }
        in_set[v] = false;
    }
    return false;
}

} // namespace detail

/// Some hitting set of size at most `bound`, or nullopt when none exists.
inline std::optional<VertexSet> min_hitting_set(const Hypergraph3& h, int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    std::vector<bool> in_set(static_cast<std::size_t>(h.num_vertices), false);
    VertexSet result;
    if (detail::min_hitting_rec(h, in_set, 0, bound, result)) return result;
    return std::nullopt;
}

namespace detail {

inline bool perfect_matching_rec(const Hypergraph3& h, std::vector<bool>& covered,
                                 std::vector<int>& picked) {
    int v = -1;
    for (int i = 0; i < h.num_vertices; ++i)
        if (!covered[i]) { v = i; break; }
    if (v < 0) return true;
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        const auto& edge = h.edges[e];
        if (edge[0] != v && edge[1] != v && edge[2] != v) continue;
        if (covered[edge[0]] || covered[edge[1]] || covered[edge[2]]) continue;
        covered[edge[0]] = covered[edge[1]] = covered[edge[2]] = true;
        picked.push_back(e);
        if (perfect_matching_rec(h, covered, picked)) return true;
        picked.pop_back();
        covered[edge[0]] = covered[edge[1]] = covered[edge[2]] = false;
    }
    return false;
}

} // namespace detail

/// A set of num_vertices/3 disjoint edges covering every vertex, as edge
/// indices, or nullopt. Backtracks on the lowest-index uncovered vertex.
inline std::optional<std::vector<int>> find_perfect_matching(const Hypergraph3& h) {
    if (h.num_vertices % 3 != 0) return std::nullopt;
    std::vector<bool> covered(static_cast<std::size_t>(h.num_vertices), false);
    std::vector<int> picked;
    if (detail::perfect_matching_rec(h, covered, picked)) return picked;
    return std::nullopt;
}

inline bool has_perfect_matching(const Hypergraph3& h) {
    return find_perfect_matching(h).has_value();
}

namespace detail {

inline bool vertex_cover_rec(const SimpleGraph& g, std::vector<bool>& in_cover, int size, int bound,
                             VertexSet& result) {
    int uncovered = -1;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if (!in_cover[g.edges[i][0]] && !in_cover[g.edges[i][1]]) { uncovered = i; break; }
    if (uncovered < 0) {
        result.clear();
        for (int v = 0; v < g.num_vertices; ++v)
            if (in_cover[v]) result.push_back(v);
        return true;
    }
    if (size == bound) return false;
    for (int b = 0; b < 2; ++b) {
        const int v = g.edges[uncovered][b];
        in_cover[v] = true;
        if (vertex_cover_rec(g, in_cover, size + 1, bound, result)) {
            in_cover[v] = false;
            return true;
        }
        in_cover[v] = false;
    }
    return false;
}

} // namespace detail

/// Some vertex cover of size at most `bound`, or nullopt.
inline std::optional<VertexSet> min_vertex_cover(const SimpleGraph& g, int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    std::vector<bool> in_cover(static_cast<std::size_t>(g.num_vertices), false);
    VertexSet result;
    if (detail::vertex_cover_rec(g, in_cover, 0, bound, result)) return result;
    return std::nullopt;
}

/// True iff the picked edges are pairwise vertex-disjoint and every edge of
/// the hypergraph shares a vertex with some picked edge.
inline bool is_independent_dominating_edge_set(const Hypergraph3& h, const std::vector<int>& picked) {
    std::vector<bool> used(static_cast<std::size_t>(h.num_vertices), false);
    for (int e : picked) {
        if (e < 0 || e >= static_cast<int>(h.edges.size()))
            throw std::invalid_argument("picked edge index out of range");
        for (int v : h.edges[e]) {
            if (used[v]) return false;  // overlap
            used[v] = true;
        }
    }
    for (const auto& edge : h.edges)
        if (!used[edge[0]] && !used[edge[1]] && !used[edge[2]]) return false;
    return true;
}

} // namespace setlab
