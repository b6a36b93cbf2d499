#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "setlab/domination.hpp"
#include "setlab/games.hpp"
#include "setlab/io.hpp"
#include "setlab/oracles.hpp"
#include "setlab/packing.hpp"
#include "setlab/pmdm.hpp"
#include "setlab/verify.hpp"

namespace setlab {

// Exit codes: 0 decision yes / success, 1 decision no, 2 usage or input
// error, 3 capacity guard tripped.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

namespace detail {

inline int decide(bool yes, std::ostream& out) {
    out << (yes ? "YES" : "NO") << "\n";
    return yes ? kExitYes : kExitNo;
}

inline void print_triple(const SetTriple& t, std::ostream& out) {
    out << t.idx[0] << " " << t.idx[1] << " " << t.idx[2] << "\n";
}

inline const char* role_token(GadgetRole role) {
    switch (role) {
        case GadgetRole::occurrence: return "x";
        case GadgetRole::var_pair: return "x12";
        case GadgetRole::var_all: return "x123";
        case GadgetRole::clause_lit: return "c";
        case GadgetRole::clause_anchor: return "cm";
    }
    return "?";
}

inline void write_role_map(const GadgetDeck& gd, const std::string& path) {
    std::ostringstream out;
    for (int i = 0; i < static_cast<int>(gd.roles.size()); ++i) {
        const GadgetCard& rc = gd.roles[i];
        out << i << " " << role_token(rc.role) << " ";
        switch (rc.role) {
            case GadgetRole::occurrence: out << rc.var << " " << rc.occurrence; break;
            case GadgetRole::var_pair:
            case GadgetRole::var_all: out << rc.var; break;
            case GadgetRole::clause_lit: out << rc.clause << " " << rc.position; break;
            case GadgetRole::clause_anchor: out << rc.clause; break;
        }
        out << "\n";
    }
    write_text_file(path, out.str());
}

/// True iff the player about to move wins the rest of the normal-play game.
inline bool mover_wins(const Hypergraph3& h, const VertexMask& removed, int moves_made) {
    std::unordered_map<VertexMask, bool, VertexMaskHash> memo;
    const bool player1 = game_winner_rec(h.edges, removed, moves_made, memo);
    return player1 == (moves_made % 2 == 0);
}

inline int play_repl(const Deck& deck, std::istream& moves, std::ostream& out, std::ostream& err,
                     bool script_mode) {
    const Hypergraph3 h = build_set_hypergraph(deck);
    check_game_capacity(h.num_vertices);
    VertexMask removed;
    int moves_made = 0;
    out << "cards: " << deck.cards.size() << "\n";

    auto available = [&]() {
        std::vector<int> avail;
        for (int e = 0; e < static_cast<int>(h.edges.size()); ++e)
            if (edge_free(h.edges[e], removed)) avail.push_back(e);
        return avail;
    };
    auto take = [&](int e, const char* verb) {
        out << verb << " " << h.edges[e][0] << " " << h.edges[e][1] << " " << h.edges[e][2] << "\n";
        for (int v : h.edges[e]) removed.set(v);
        ++moves_made;
    };

    for (;;) {
        const auto avail = available();
        out << "sets: " << avail.size() << "\n";
        for (std::size_t i = 0; i < avail.size(); ++i)
            out << "[" << i << "] " << h.edges[avail[i]][0] << " " << h.edges[avail[i]][1] << " "
                << h.edges[avail[i]][2] << "\n";
        if (avail.empty()) {
            out << "you cannot move: you lose\n";
            return kExitYes;
        }

        int choice = -1;
        for (;;) {
            std::string token;
            if (!(moves >> token)) {
                err << "error: no move supplied\n";
                return kExitUsage;
            }
            try {
                std::size_t pos = 0;
                choice = std::stoi(token, &pos);
                if (pos != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                choice = -1;
            }
            if (choice >= 0 && choice < static_cast<int>(avail.size())) break;
            if (script_mode) {
                err << "error: illegal move '" << token << "'\n";
                return kExitUsage;
            }
            out << "illegal move: " << token << "\n";
        }
        out << "move? " << choice << "\n";
        take(avail[choice], "you take");

        const auto reply = available();
        if (reply.empty()) {
            out << "engine cannot move: you win\n";
            return kExitYes;
        }
        int pick = reply[0];
        for (int e : reply) {
            VertexMask next = removed;
            for (int v : h.edges[e]) next.set(v);
            if (!mover_wins(h, next, moves_made + 1)) { pick = e; break; }
        }
        take(pick, "engine takes");
    }
}

inline std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, int cases) {
    if (name == "cards") return verify_cards(seed, cases);
    if (name == "packing") return verify_packing(seed, cases);
    if (name == "domination") return verify_domination(seed, cases);
    if (name == "reduction") return verify_reduction();
    if (name == "games") return verify_games(seed, cases);
    if (name == "arc-kayles") return verify_arc_kayles(seed, cases);
    if (name == "arc-bridge") return verify_arc_bridge(seed, cases);
    if (name == "pmdm") return verify_pmdm(seed, cases);
    if (name == "io") return verify_io(seed, cases);
    if (name == "hitting") return verify_hitting(seed, cases);
    if (name == "oracles") return verify_oracles(seed, cases);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cards",      "packing", "domination", "reduction",
                                                "games",      "arc-kayles", "arc-bridge", "pmdm",
                                                "io",         "hitting", "oracles"};
    return names;
}

} // namespace detail

/// Dispatches one command line. `args` excludes the program name; `in`
/// feeds the play subcommand, `out` and `err` receive all text.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"setlab: exact solvers for Set-style card game problems"};
    app.require_subcommand(1);

    std::string deck_path, hypergraph_path, graph_path, instance_path, out_path, map_path,
        script_path, suite, kind, input_path;
    int r = -1;
    bool witness = false, report = false;
    std::string method;
    std::uint64_t seed = 1;
    int cases = 20;
    int opt_n = 0, opt_m = 0, opt_vars = 0, opt_clauses = 0, opt_v = 0, opt_e = 0, opt_p = 0,
        opt_k = 3;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list every Set of a deck");
    cmd_enumerate->add_option("--deck", deck_path, "deck file")->required();

    auto* cmd_max = app.add_subcommand("max-set", "are there r pairwise disjoint Sets?");
    cmd_max->add_option("--deck", deck_path)->required();
    cmd_max->add_option("--r", r)->required();
    cmd_max->add_flag("--witness", witness);

    auto* cmd_min = app.add_subcommand("min-set", "do at most r Sets destroy every Set?");
    cmd_min->add_option("--deck", deck_path)->required();
    cmd_min->add_option("--r", r)->required();
    cmd_min->add_flag("--witness", witness);

    auto* cmd_ieds = app.add_subcommand("ieds",
                                        "independent edge dominating set of size at most r?");
    cmd_ieds->add_option("--hypergraph", hypergraph_path)->required();
    cmd_ieds->add_option("--r", r)->required();
    cmd_ieds->add_flag("--witness", witness);

    auto* cmd_two = app.add_subcommand("two-player",
                                       "does player 1 win the alternating Set game?");
    cmd_two->add_option("--deck", deck_path)->required();
    cmd_two->add_option("--r", r, "decide a win within r total moves");
    cmd_two->add_option("--method", method, "kernel or brute (default kernel)");
    cmd_two->add_flag("--report", report, "print kernelization statistics");

    auto* cmd_arc = app.add_subcommand("arc-kayles",
                                       "does the first edge picker win within r moves?");
    cmd_arc->add_option("--graph", graph_path)->required();
    cmd_arc->add_option("--r", r)->required();
    cmd_arc->add_option("--method", method, "fpt or brute (default fpt)");

    auto* cmd_reduce = app.add_subcommand("reduce", "instance reductions");
    cmd_reduce->add_option("kind", kind, "sat2set, ieds2set or mcc2pmdm")->required();
    cmd_reduce->add_option("input", input_path, "input file")->required();
    cmd_reduce->add_option("-o,--output", out_path)->required();
    cmd_reduce->add_option("--map", map_path, "write a card role map (sat2set, ieds2set)");
    cmd_reduce->add_option("--k", opt_k, "parts of the k-partite input (mcc2pmdm)");

    auto* cmd_pmdm = app.add_subcommand("pmdm", "perfect multi-dimensional matching?");
    cmd_pmdm->add_option("--instance", instance_path)->required();
    cmd_pmdm->add_flag("--witness", witness);

    auto* cmd_gen = app.add_subcommand("gen", "seeded instance generators");
    cmd_gen->add_option("kind", kind, "deck, fulldeck, cnf3, graph, h3 or kpartite")->required();
    cmd_gen->add_option("--seed", seed);
    cmd_gen->add_option("--n", opt_n);
    cmd_gen->add_option("--m", opt_m);
    cmd_gen->add_option("--vars", opt_vars);
    cmd_gen->add_option("--clauses", opt_clauses);
    cmd_gen->add_option("--v", opt_v);
    cmd_gen->add_option("--e", opt_e);
    cmd_gen->add_option("--p", opt_p, "edge probability out of 1000");
    cmd_gen->add_option("--k", opt_k);
    cmd_gen->add_option("-o,--output", out_path)->required();

    auto* cmd_play = app.add_subcommand("play", "play the two-player game against the engine");
    cmd_play->add_option("--deck", deck_path)->required();
    cmd_play->add_option("--script", script_path, "replay moves from a file");

    auto* cmd_verify = app.add_subcommand("verify", "run an oracle-equivalence suite");
    cmd_verify->add_option("suite", suite, "suite name or 'all'")->required();
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--cases", cases);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitYes : kExitUsage;
    }

    try {
        if (cmd_enumerate->parsed()) {
            const Deck deck = parse_string(parse_deck, read_text_file(deck_path));
            for (const SetTriple& t : enumerate_sets(deck)) detail::print_triple(t, out);
            return kExitYes;
        }
        if (cmd_max->parsed()) {
            const Deck deck = parse_string(parse_deck, read_text_file(deck_path));
            if (r < 0) throw std::invalid_argument("--r must be nonnegative");
            const auto [yes, triples] = solve_max_rset(deck, r);
            const int code = detail::decide(yes, out);
            if (yes && witness)
                for (const SetTriple& t : triples) detail::print_triple(t, out);
            return code;
        }
        if (cmd_min->parsed()) {
            const Deck deck = parse_string(parse_deck, read_text_file(deck_path));
            if (r < 0) throw std::invalid_argument("--r must be nonnegative");
            const auto [yes, triples] = solve_min_rset(deck, r);
            const int code = detail::decide(yes, out);
            if (yes && witness)
                for (const SetTriple& t : *triples) detail::print_triple(t, out);
            return code;
        }
        if (cmd_ieds->parsed()) {
            const Hypergraph3 h = parse_string(parse_h3, read_text_file(hypergraph_path));
            if (r < 0) throw std::invalid_argument("--r must be nonnegative");
            bool yes = false;
            std::vector<int> picked;
            for (int size = 0; size <= r && !yes; ++size) {
                auto [found, w] = solve_ieds_fpt(h, size);
                if (found) {
                    yes = true;
                    picked = w->edge_ids;
                }
            }
            const int code = detail::decide(yes, out);
            if (yes && witness)
                for (int e : picked)
                    out << h.edges[e][0] << " " << h.edges[e][1] << " " << h.edges[e][2] << "\n";
            return code;
        }
        if (cmd_two->parsed()) {
            const Deck deck = parse_string(parse_deck, read_text_file(deck_path));
            if (!cmd_two->count("--r")) return detail::decide(solve_game_winner(deck), out);
            if (r < 1) throw std::invalid_argument("--r must be at least 1");
            const TwoPlayerMethod m = method == "brute" ? TwoPlayerMethod::brute
                                                        : TwoPlayerMethod::kernel;
            if (!method.empty() && method != "brute" && method != "kernel")
                throw std::invalid_argument("--method must be kernel or brute");
            KernelReport rep;
            const bool yes = solve_2p_within(deck, r, m, report ? &rep : nullptr);
            if (report && m == TwoPlayerMethod::kernel) {
                out << "levels: " << r + 1 << "\n";
                out << "level sizes:";
                for (int s : rep.original_level_sizes) out << " " << s;
                out << " ->";
                for (int s : rep.reduced_level_sizes) out << " " << s;
                out << "\n";
                out << "collapses: " << rep.collapse_events << "\n";
                out << "merges: " << rep.merge_events << "\n";
            }
            return detail::decide(yes, out);
        }
        if (cmd_arc->parsed()) {
            const SimpleGraph g = parse_string(parse_graph, read_text_file(graph_path));
            if (r < 1) throw std::invalid_argument("--r must be at least 1");
            if (!method.empty() && method != "brute" && method != "fpt")
                throw std::invalid_argument("--method must be fpt or brute");
            const ArcKaylesMethod m = method == "brute" ? ArcKaylesMethod::brute
                                                        : ArcKaylesMethod::fpt;
            return detail::decide(arc_kayles_within(g, r, m), out);
        }
        if (cmd_reduce->parsed()) {
            if (kind == "sat2set") {
                CnfFormula f = parse_string(parse_cnf, read_text_file(input_path));
                f = normalize_formula(expand_unit_clauses(f));
                const GadgetDeck gd = build_sat_gadget_deck(f);
                std::ostringstream os;
                emit_deck(gd.deck, os);
                write_text_file(out_path, os.str());
                if (!map_path.empty()) detail::write_role_map(gd, map_path);
                return kExitYes;
            }
            if (kind == "ieds2set") {
                const SimpleGraph g = parse_string(parse_graph, read_text_file(input_path));
                const Deck deck = reduce_ieds_to_deck(g);
                std::ostringstream os;
                emit_deck(deck, os);
                write_text_file(out_path, os.str());
                if (!map_path.empty()) {
                    std::ostringstream ms;
                    for (int v = 0; v < g.num_vertices; ++v) ms << v << " vertex " << v << "\n";
                    for (std::size_t e = 0; e < g.edges.size(); ++e)
                        ms << g.num_vertices + e << " edge " << g.edges[e][0] << " "
                           << g.edges[e][1] << "\n";
                    write_text_file(map_path, ms.str());
                }
                return kExitYes;
            }
            if (kind == "mcc2pmdm") {
                const SimpleGraph g = parse_string(parse_graph, read_text_file(input_path));
                if (opt_k < 1 || g.num_vertices % opt_k != 0)
                    throw std::invalid_argument("--k must divide the vertex count");
                KPartiteGraph kg;
                kg.k = opt_k;
                kg.n = g.num_vertices / opt_k;
                kg.edges = g.edges;
                const PmdmInstance inst = build_mcc_to_pmdm(kg);
                std::ostringstream os;
                emit_pmdm(inst, os);
                write_text_file(out_path, os.str());
                return kExitYes;
            }
            throw std::invalid_argument("unknown reduction '" + kind + "'");
        }
        if (cmd_pmdm->parsed()) {
            const PmdmInstance inst = parse_string(parse_pmdm, read_text_file(instance_path));
            const auto matching = oracle_pmdm(inst);
            const int code = detail::decide(matching.has_value(), out);
            if (matching && witness)
                for (int i : *matching) out << i << "\n";
            return code;
        }
        if (cmd_gen->parsed()) {
            std::ostringstream os;
            if (kind == "deck") emit_deck(gen_random_deck(opt_n, opt_m, seed), os);
            else if (kind == "fulldeck") emit_deck(gen_full_deck(opt_n), os);
            else if (kind == "cnf3") emit_cnf(gen_random_3cnf(opt_vars, opt_clauses, seed), os);
            else if (kind == "graph") emit_graph(gen_random_graph(opt_v, opt_p, seed), os);
            else if (kind == "h3") emit_h3(gen_random_h3(opt_v, opt_e, seed), os);
            else if (kind == "kpartite") {
                const KPartiteGraph kg = gen_random_kpartite(opt_k, opt_n, opt_p, seed);
                SimpleGraph flat;
                flat.num_vertices = kg.k * kg.n;
                flat.edges = kg.edges;
                os << "# kpartite k=" << kg.k << " n=" << kg.n << "\n";
                emit_graph(flat, os);
            } else {
                throw std::invalid_argument("unknown generator '" + kind + "'");
            }
            write_text_file(out_path, os.str());
            return kExitYes;
        }
        if (cmd_play->parsed()) {
            const Deck deck = parse_string(parse_deck, read_text_file(deck_path));
            if (!script_path.empty()) {
                std::istringstream moves(read_text_file(script_path));
                return detail::play_repl(deck, moves, out, err, true);
            }
            return detail::play_repl(deck, in, out, err, false);
        }
        if (cmd_verify->parsed()) {
            std::vector<SuiteResult> results;
            if (suite == "all") {
                for (const std::string& name : detail::suite_names()) {
                    auto part = detail::run_suite(name, seed, cases);
                    results.insert(results.end(), part.begin(), part.end());
                }
            } else {
                results = detail::run_suite(suite, seed, cases);
            }
            log_results(results, out);
            return all_ok(results) ? kExitYes : kExitNo;
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace setlab
