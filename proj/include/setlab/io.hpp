#pragma once

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "setlab/cards.hpp"
#include "setlab/cnf.hpp"
#include "setlab/errors.hpp"
#include "setlab/hypergraph.hpp"
#include "setlab/pmdm.hpp"
#include "setlab/rng.hpp"

namespace setlab {

namespace detail {

struct Line {
    std::string text;     // content with comment stripped, trimmed
    std::string comment;  // text after '#', trimmed
    int number = 0;
};

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

/// Significant lines of a stream: comments stripped, blanks dropped.
inline std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string comment;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            comment = trim(raw.substr(hash + 1));
            raw = raw.substr(0, hash);
        }
        std::string text = trim(raw);
        if (text.empty() && comment.empty()) continue;
        if (text.empty() && !comment.empty()) continue;  // pure comment line
        out.push_back({text, comment, number});
    }
    return out;
}

inline std::vector<int> parse_ints(const std::string& s, int line) {
    std::istringstream iss(s);
    std::vector<int> out;
    std::string tok;
    while (iss >> tok) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("expected integer, got '" + tok + "'", line);
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Deck format: header "SETDECK <n>", then one card per line as n characters
// from {0,1,2}. '#' starts a comment; blank lines are ignored.
// ---------------------------------------------------------------------------

inline Deck parse_deck(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError("missing SETDECK header", 1);
    std::istringstream header(lines[0].text);
    std::string tag;
    long long n = -1;
    header >> tag >> n;
    if (tag != "SETDECK" || n < 0 || !header.eof())
        throw ParseError("expected 'SETDECK <n>'", lines[0].number);

    Deck deck;
    deck.n = static_cast<int>(n);
    std::set<CardVector> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (static_cast<long long>(ln.text.size()) != n)
            throw ParseError("card has wrong length", ln.number);
        CardVector c;
        for (char ch : ln.text) {
            if (ch < '0' || ch > '2') throw ParseError("card characters must be 0, 1 or 2", ln.number);
            c.attrs.push_back(static_cast<Trit>(ch - '0'));
        }
        if (!seen.insert(c).second) throw ParseError("duplicate card", ln.number);
        deck.cards.push_back(std::move(c));
    }
    validate_deck(deck);
    return deck;
}

inline void emit_deck(const Deck& deck, std::ostream& out) {
    out << "SETDECK " << deck.n << "\n";
    for (const CardVector& c : deck.cards) {
        for (Trit t : c.attrs) out << static_cast<char>('0' + t);
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// Hypergraph format: "H3 <num_vertices>", then one edge per line as three
// vertex indices. Edges are stored sorted and must be distinct.
// ---------------------------------------------------------------------------

inline Hypergraph3 parse_h3(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError("missing H3 header", 1);
    std::istringstream header(lines[0].text);
    std::string tag;
    long long nv = -1;
    header >> tag >> nv;
    if (tag != "H3" || nv < 0 || !header.eof())
        throw ParseError("expected 'H3 <num_vertices>'", lines[0].number);

    Hypergraph3 h;
    h.num_vertices = static_cast<int>(nv);
    std::set<std::array<int, 3>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = detail::parse_ints(lines[i].text, lines[i].number);
        if (vals.size() != 3) throw ParseError("edge needs exactly 3 vertices", lines[i].number);
        std::array<int, 3> e{vals[0], vals[1], vals[2]};
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2])
            throw ParseError("edge vertices must be distinct", lines[i].number);
        if (e[0] < 0 || e[2] >= h.num_vertices)
            throw ParseError("edge vertex out of range", lines[i].number);
        if (!seen.insert(e).second) throw ParseError("duplicate edge", lines[i].number);
        h.edges.push_back(e);
    }
    std::sort(h.edges.begin(), h.edges.end());
    validate_hypergraph(h);
    return h;
}

inline void emit_h3(const Hypergraph3& h, std::ostream& out) {
    out << "H3 " << h.num_vertices << "\n";
    for (const auto& e : h.edges) out << e[0] << " " << e[1] << " " << e[2] << "\n";
}

// ---------------------------------------------------------------------------
// Graph format: "GRAPH <num_vertices>", then "u v" lines.
// ---------------------------------------------------------------------------

inline SimpleGraph parse_graph(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError("missing GRAPH header", 1);
    std::istringstream header(lines[0].text);
    std::string tag;
    long long nv = -1;
    header >> tag >> nv;
    if (tag != "GRAPH" || nv < 0 || !header.eof())
        throw ParseError("expected 'GRAPH <num_vertices>'", lines[0].number);

    SimpleGraph g;
    g.num_vertices = static_cast<int>(nv);
    std::set<std::array<int, 2>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = detail::parse_ints(lines[i].text, lines[i].number);
        if (vals.size() != 2) throw ParseError("edge needs exactly 2 vertices", lines[i].number);
        std::array<int, 2> e{std::min(vals[0], vals[1]), std::max(vals[0], vals[1])};
        if (e[0] == e[1]) throw ParseError("edge endpoints must differ", lines[i].number);
        if (e[0] < 0 || e[1] >= g.num_vertices)
            throw ParseError("edge vertex out of range", lines[i].number);
        if (!seen.insert(e).second) throw ParseError("duplicate edge", lines[i].number);
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end());
    validate_graph(g);
    return g;
}

inline void emit_graph(const SimpleGraph& g, std::ostream& out) {
    out << "GRAPH " << g.num_vertices << "\n";
    for (const auto& e : g.edges) out << e[0] << " " << e[1] << "\n";
}

// ---------------------------------------------------------------------------
// DIMACS CNF: 'c' comment lines, "p cnf <vars> <clauses>" header, clauses as
// whitespace-separated literals terminated by 0 (clauses may span lines).
// ---------------------------------------------------------------------------

inline CnfFormula parse_cnf(std::istream& in) {
    CnfFormula f;
    std::string raw;
    int number = 0;
    long long declared_clauses = -1;
    Clause current;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++number;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (header_seen) throw ParseError("duplicate header", number);
            std::istringstream iss(line);
            std::string p, kind;
            long long vars = -1, clauses = -1;
            iss >> p >> kind >> vars >> clauses;
            if (p != "p" || kind != "cnf" || vars < 0 || clauses < 0)
                throw ParseError("expected 'p cnf <vars> <clauses>'", number);
            f.num_vars = static_cast<int>(vars);
            declared_clauses = clauses;
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("clause before header", number);
        for (int lit : detail::parse_ints(line, number)) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
                continue;
            }
            int var = std::abs(lit) - 1;
            if (var >= f.num_vars) throw ParseError("literal out of range", number);
            current.push_back({var, lit < 0});
        }
    }
    if (!header_seen) throw ParseError("missing header", number == 0 ? 1 : number);
    if (!current.empty()) throw ParseError("unterminated clause", number);
    if (declared_clauses != static_cast<long long>(f.clauses.size()))
        throw ParseError("clause count differs from header", number);
    validate_formula(f);
    return f;
}

inline void emit_cnf(const CnfFormula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c) out << (l.negated ? -(l.var + 1) : l.var + 1) << " ";
        out << "0\n";
    }
}

// ---------------------------------------------------------------------------
// PMDM format: "PMDM <dims> <values>", one multiedge per line as dims values.
// A trailing "# vertex <part> <index>" or "# edge <i> <a> <j> <b>" comment
// records provenance; either every multiedge carries one or none does.
// ---------------------------------------------------------------------------

inline PmdmInstance parse_pmdm(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError("missing PMDM header", 1);
    std::istringstream header(lines[0].text);
    std::string tag;
    long long dims = -1, values = -1;
    header >> tag >> dims >> values;
    if (tag != "PMDM" || dims < 1 || values < 1 || !header.eof())
        throw ParseError("expected 'PMDM <dims> <values>'", lines[0].number);

    PmdmInstance inst;
    inst.dims = static_cast<int>(dims);
    inst.values = static_cast<int>(values);
    int with_provenance = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        auto vals = detail::parse_ints(ln.text, ln.number);
        if (static_cast<long long>(vals.size()) != dims)
            throw ParseError("multiedge needs exactly dims values", ln.number);
        for (int v : vals)
            if (v < 0 || v >= inst.values) throw ParseError("value out of range", ln.number);
        inst.multiedges.push_back(vals);
        if (!ln.comment.empty()) {
            std::istringstream ci(ln.comment);
            std::string kind;
            ci >> kind;
            PmdmProvenance p;
            if (kind == "vertex") {
                p.kind = PmdmProvenance::Kind::vertex;
                if (!(ci >> p.part_a >> p.index_a)) throw ParseError("bad vertex provenance", ln.number);
            } else if (kind == "edge") {
                p.kind = PmdmProvenance::Kind::edge;
                if (!(ci >> p.part_a >> p.index_a >> p.part_b >> p.index_b))
                    throw ParseError("bad edge provenance", ln.number);
            } else {
                continue;  // ordinary comment
            }
            if (inst.provenance.size() != inst.multiedges.size() - 1)
                throw ParseError("provenance must cover every multiedge or none", ln.number);
            inst.provenance.push_back(p);
            ++with_provenance;
        }
    }
    if (with_provenance != 0 && with_provenance != static_cast<int>(inst.multiedges.size()))
        throw ParseError("provenance must cover every multiedge or none",
                         lines.empty() ? 1 : lines.back().number);
    validate_pmdm(inst);
    return inst;
}

inline void emit_pmdm(const PmdmInstance& inst, std::ostream& out) {
    out << "PMDM " << inst.dims << " " << inst.values << "\n";
    for (std::size_t i = 0; i < inst.multiedges.size(); ++i) {
        const auto& me = inst.multiedges[i];
        for (std::size_t d = 0; d < me.size(); ++d) out << (d ? " " : "") << me[d];
        if (!inst.provenance.empty()) {
            const PmdmProvenance& p = inst.provenance[i];
            if (p.kind == PmdmProvenance::Kind::vertex)
                out << "  # vertex " << p.part_a << " " << p.index_a;
            else
                out << "  # edge " << p.part_a << " " << p.index_a << " " << p.part_b << " " << p.index_b;
        }
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// String and file conveniences.
// ---------------------------------------------------------------------------

template <typename T>
inline T parse_string(T (*parser)(std::istream&), const std::string& text) {
    std::istringstream iss(text);
    return parser(iss);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

// ---------------------------------------------------------------------------
// Seeded generators. Identical parameters and seed give identical output on
// every platform; probabilities are integers scaled by 1000.
// ---------------------------------------------------------------------------

inline constexpr int kMaxGenAttributes = 12;

inline CardVector card_from_rank(std::uint64_t rank, int n) {
    CardVector c;
    c.attrs.resize(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        c.attrs[j] = static_cast<Trit>(rank % 3);
        rank /= 3;
    }
    return c;
}

/// All 3^n cards in lexicographic order.
inline Deck gen_full_deck(int n) {
    if (n < 1) throw std::invalid_argument("need at least one attribute");
    if (n > kMaxGenAttributes) throw CapacityError("full deck generation is limited to 12 attributes");
    Deck d;
    d.n = n;
    const std::uint64_t total = pow3(n);
    for (std::uint64_t r = 0; r < total; ++r) d.cards.push_back(card_from_rank(r, n));
    return d;
}

/// m distinct cards sampled without replacement (partial Fisher-Yates over
/// the card ranks).
inline Deck gen_random_deck(int n, int m, std::uint64_t seed) {
    if (n < 1 || m < 0) throw std::invalid_argument("bad deck parameters");
    if (n > kMaxGenAttributes) throw CapacityError("deck generation is limited to 12 attributes");
    const std::uint64_t total = pow3(n);
    if (static_cast<std::uint64_t>(m) > total) throw CapacityError("deck cannot exceed 3^n cards");
    std::vector<std::uint64_t> ranks(total);
    for (std::uint64_t i = 0; i < total; ++i) ranks[i] = i;
    SplitMix64 rng(seed);
    Deck d;
    d.n = n;
    for (int i = 0; i < m; ++i) {
        const std::uint64_t j = i + rng.below(total - i);
        std::swap(ranks[i], ranks[j]);
        d.cards.push_back(card_from_rank(ranks[i], n));
    }
    return d;
}

/// Random 3-CNF: every clause has three distinct variables, random signs.
inline CnfFormula gen_random_3cnf(int vars, int clauses, std::uint64_t seed) {
    if (vars < 3 || clauses < 0) throw std::invalid_argument("need at least 3 variables");
    SplitMix64 rng(seed);
    CnfFormula f;
    f.num_vars = vars;
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> pick;
        while (static_cast<int>(pick.size()) < 3) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
        }
        Clause cl;
        for (int v : pick) cl.push_back({v, rng.below(2) == 1});
        f.clauses.push_back(std::move(cl));
    }
    return f;
}

/// Erdos-Renyi style graph: each pair present with probability p/1000.
inline SimpleGraph gen_random_graph(int v, int p_scaled, std::uint64_t seed) {
    if (v < 0 || p_scaled < 0 || p_scaled > 1000) throw std::invalid_argument("bad graph parameters");
    SplitMix64 rng(seed);
    SimpleGraph g;
    g.num_vertices = v;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (rng.chance(p_scaled)) g.edges.push_back({a, b});
    return g;
}

/// e distinct hyperedges sampled without replacement.
inline Hypergraph3 gen_random_h3(int v, int e, std::uint64_t seed) {
    if (v < 0 || e < 0) throw std::invalid_argument("bad hypergraph parameters");
    const std::uint64_t triples =
        v >= 3 ? static_cast<std::uint64_t>(v) * (v - 1) * (v - 2) / 6 : 0;
    if (static_cast<std::uint64_t>(e) > triples)
        throw CapacityError("more hyperedges requested than distinct triples exist");
    SplitMix64 rng(seed);
    Hypergraph3 h;
    h.num_vertices = v;
    std::set<std::array<int, 3>> seen;
    while (static_cast<int>(seen.size()) < e) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        if (a == b || a == c || b == c) continue;
        std::array<int, 3> edge{a, b, c};
        std::sort(edge.begin(), edge.end());
        seen.insert(edge);
    }
    h.edges.assign(seen.begin(), seen.end());
    return h;
}

/// k parts of n vertices; each cross-part pair present with probability
/// p/1000.
inline KPartiteGraph gen_random_kpartite(int k, int n, int p_scaled, std::uint64_t seed) {
    if (k < 1 || n < 1 || p_scaled < 0 || p_scaled > 1000)
        throw std::invalid_argument("bad k-partite parameters");
    SplitMix64 rng(seed);
    KPartiteGraph g;
    g.k = k;
    g.n = n;
    const int total = k * n;
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b)
            if (g.part_of(a) != g.part_of(b) && rng.chance(p_scaled)) g.edges.push_back({a, b});
    return g;
}

} // namespace setlab
