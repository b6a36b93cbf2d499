#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/errors.hpp"
#include "setlab/hypergraph.hpp"

namespace setlab {

/// Where a constructed multiedge came from in the source k-partite graph.
struct PmdmProvenance {
    enum class Kind { vertex, edge };
    Kind kind = Kind::vertex;
    int part_a = 0, index_a = 0;  // vertex: (part, index within part)
    int part_b = 0, index_b = 0;  // edge: second endpoint; zero for vertices

    auto operator<=>(const PmdmProvenance&) const = default;
};

/// Perfect multi-dimensional matching instance: `dims` dimensions, each
/// with `values` possible values, and a list of multiedges (one value per
/// dimension). Duplicate multiedges are permitted.
struct PmdmInstance {
    int dims = 0;
    int values = 0;
    std::vector<std::vector<int>> multiedges;
    std::vector<PmdmProvenance> provenance;  // empty, or one entry per multiedge
};

/// k-partite graph with n vertices per part; vertex v belongs to part v/n.
struct KPartiteGraph {
    int k = 0;
    int n = 0;
    std::vector<std::array<int, 2>> edges;  // sorted cross-part pairs

    int part_of(int v) const { return v / n; }
    int vertex_id(int part, int index) const { return part * n + index; }
};

inline void validate_pmdm(const PmdmInstance& m) {
    if (m.dims < 1) throw std::invalid_argument("instance needs at least one dimension");
    if (m.values < 1) throw std::invalid_argument("instance needs at least one value");
    for (const auto& me : m.multiedges) {
        if (static_cast<int>(me.size()) != m.dims)
            throw std::invalid_argument("multiedge arity differs from dimension count");
        for (int v : me)
            if (v < 0 || v >= m.values) throw std::invalid_argument("multiedge value out of range");
    }
    if (!m.provenance.empty() && m.provenance.size() != m.multiedges.size())
        throw std::invalid_argument("provenance must cover every multiedge or none");
}

inline void validate_kpartite(const KPartiteGraph& g) {
    if (g.k < 1 || g.n < 1) throw std::invalid_argument("k and n must be positive");
    for (const auto& e : g.edges) {
        if (e[0] >= e[1]) throw std::invalid_argument("edge not sorted/distinct");
        if (e[0] < 0 || e[1] >= g.k * g.n) throw std::invalid_argument("edge vertex out of range");
        if (g.part_of(e[0]) == g.part_of(e[1]))
            throw std::invalid_argument("edge inside one part");
    }
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge");
}

inline bool kpartite_adjacent(const KPartiteGraph& g, int u, int v) {
    std::array<int, 2> e{std::min(u, v), std::max(u, v)};
    return std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end();
}

namespace detail {

// Value labels of the constructed instances: 0..k-1 name the parts, then
// k..k+C(k,2)-1 name the unordered part pairs in lexicographic order.
inline int pair_label(int k, int i, int j) {
    if (i > j) std::swap(i, j);
    int label = k;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            if (a == i && b == j) return label;
            ++label;
        }
    throw std::invalid_argument("pair_label: bad part pair");
}

// Dimensions are grouped by ordered part pair (i, j), i != j, in
// lexicographic order; each group has one dimension per vertex of part i.
inline int group_base(int k, int n, int i, int j) {
    int g = 0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            if (a == i && b == j) return g * n;
            ++g;
        }
    throw std::invalid_argument("group_base: bad ordered pair");
}

} // namespace detail

/// Multicolored-clique to PMDM construction: n*k*(k-1) dimensions in
/// groups (i, j), k + C(k,2) values. Every vertex yields a multiedge
/// labelled with its part everywhere except in its own dimension of each
/// of its groups, which takes the corresponding pair label; every edge
/// yields a multiedge labelled with its pair everywhere except the two
/// endpoint dimensions, which take the endpoint part labels.
inline PmdmInstance build_mcc_to_pmdm(const KPartiteGraph& g) {
    validate_kpartite(g);
    const int k = g.k, n = g.n;
    PmdmInstance inst;
    inst.dims = n * k * (k - 1);
    inst.values = k + k * (k - 1) / 2;

    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> me(static_cast<std::size_t>(inst.dims), i);
            for (int other = 0; other < k; ++other) {
                if (other == i) continue;
                me[detail::group_base(k, n, i, other) + j] = detail::pair_label(k, other, i);
            }
            inst.multiedges.push_back(std::move(me));
            inst.provenance.push_back({PmdmProvenance::Kind::vertex, i, j, 0, 0});
        }
    }
    for (const auto& e : g.edges) {
        const int i = g.part_of(e[0]), a = e[0] % n;
        const int j = g.part_of(e[1]), b = e[1] % n;
        std::vector<int> me(static_cast<std::size_t>(inst.dims), detail::pair_label(k, i, j));
        me[detail::group_base(k, n, i, j) + a] = i;
        me[detail::group_base(k, n, j, i) + b] = j;
        inst.multiedges.push_back(std::move(me));
        inst.provenance.push_back({PmdmProvenance::Kind::edge, i, a, j, b});
    }
    return inst;
}

/// A source vertex as (part, index within part).
using PartVertex = std::pair<int, int>;

/// The source vertices of the matching's vertex-multiedges, one per part,
/// sorted by part. Requires provenance; throws unless the matching's
/// edge-multiedges connect the selected vertices pairwise.
inline std::vector<PartVertex> extract_clique(const PmdmInstance& inst,
                                              const std::vector<int>& matching) {
    if (inst.provenance.empty())
        throw std::invalid_argument("extract_clique: instance has no provenance");
    std::vector<PartVertex> vertices;
    std::set<std::pair<PartVertex, PartVertex>> edges;
    for (int idx : matching) {
        if (idx < 0 || idx >= static_cast<int>(inst.multiedges.size()))
            throw std::invalid_argument("extract_clique: matching index out of range");
        const PmdmProvenance& p = inst.provenance[idx];
        if (p.kind == PmdmProvenance::Kind::vertex)
            vertices.emplace_back(p.part_a, p.index_a);
        else
            edges.insert({{p.part_a, p.index_a}, {p.part_b, p.index_b}});
    }
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!edges.count({vertices[i], vertices[j]}) && !edges.count({vertices[j], vertices[i]}))
                throw std::invalid_argument("extract_clique: selected vertices not pairwise adjacent");
    return vertices;
}

namespace detail {

inline bool dimension_rainbow(const PmdmInstance& inst, const std::vector<int>& chosen, int dim) {
    std::vector<bool> seen(static_cast<std::size_t>(inst.values), false);
    for (int idx : chosen) {
        const int v = inst.multiedges[idx][dim];
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

} // namespace detail

/// True iff the chosen multiedges cover every (dimension, value) slot
/// exactly once.
inline bool is_pmdm(const PmdmInstance& inst, const std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) != inst.values) return false;
    for (int d = 0; d < inst.dims; ++d)
        if (!detail::dimension_rainbow(inst, chosen, d)) return false;
    return true;
}

/// Exhaustively compares two families over the instance's multiedges: the
/// generalized Sets of size `values` and the perfect matchings. True iff
/// the families coincide. Guarded to small instances.
inline bool check_set_matching_corollary(const PmdmInstance& inst) {
    validate_pmdm(inst);
    if (inst.multiedges.size() > 10 || inst.values > 6)
        throw CapacityError("corollary check is limited to 10 multiedges and 6 values");

    const int m = static_cast<int>(inst.multiedges.size());
    const int k = inst.values;
    std::vector<int> chosen;
    bool equal = true;

    auto as_cards = [&](const std::vector<int>& idxs) {
        std::vector<CardVector> cards;
        for (int i : idxs) {
            CardVector c;
            for (int v : inst.multiedges[i]) c.attrs.push_back(static_cast<Trit>(v));
            cards.push_back(std::move(c));
        }
        return cards;
    };

    // every k-subset of multiedges
    std::vector<int> comb(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (!equal) return;
        if (depth == k) {
            std::vector<int> idxs(comb.begin(), comb.end());
            auto cards = as_cards(idxs);
            bool distinct = true;
            for (std::size_t i = 0; i < cards.size() && distinct; ++i)
                for (std::size_t j = i + 1; j < cards.size(); ++j)
                    if (cards[i] == cards[j]) { distinct = false; break; }
            // duplicate tuples can never form a generalized Set or a matching
            const bool gen_set = distinct && is_generalized_set(cards, k);
            const bool matching = is_pmdm(inst, idxs);
            if (gen_set != matching) equal = false;
            return;
        }
        for (int i = start; i < m; ++i) {
            comb[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    if (m >= k) rec(rec, 0, 0);
    return equal;
}

} // namespace setlab
