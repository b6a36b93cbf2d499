#include <catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "setlab/cli.hpp"

using namespace setlab;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("setlab_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    std::string name(const std::string& n) const { return (path / n).string(); }
};

const char* kOneSetDeck = "SETDECK 1\n0\n1\n2\n";
const char* kTwoDisjointDeck = "SETDECK 2\n00\n01\n02\n10\n11\n12\n";

} // namespace

TEST_CASE("enumerate prints the Sets") {
    TempDir tmp;
    const auto r = cli({"enumerate", "--deck", tmp.file("one.deck", kOneSetDeck)});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1 2\n");
}

TEST_CASE("decision subcommands map answers to exit codes") {
    TempDir tmp;
    const std::string deck = tmp.file("one.deck", kOneSetDeck);

    auto yes = cli({"max-set", "--deck", deck, "--r", "1", "--witness"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "YES\n0 1 2\n");

    auto no = cli({"max-set", "--deck", deck, "--r", "2"});
    CHECK(no.code == 1);
    CHECK(no.out == "NO\n");

    auto min_yes = cli({"min-set", "--deck", deck, "--r", "1", "--witness"});
    CHECK(min_yes.code == 0);
    CHECK(min_yes.out == "YES\n0 1 2\n");
}

TEST_CASE("two-player decisions") {
    TempDir tmp;
    const std::string deck = tmp.file("two.deck", kTwoDisjointDeck);

    auto kernel = cli({"two-player", "--deck", deck, "--r", "3", "--method", "kernel"});
    CHECK(kernel.code == 1);
    CHECK(kernel.out == "NO\n");

    auto brute = cli({"two-player", "--deck", deck, "--r", "3", "--method", "brute"});
    CHECK(brute.code == 1);

    auto unbounded = cli({"two-player", "--deck", deck});
    CHECK(unbounded.code == 1);

    auto report = cli({"two-player", "--deck", deck, "--r", "2", "--report"});
    CHECK(report.code == 1);
    CHECK(report.out.find("levels: 3") != std::string::npos);
    CHECK(report.out.find("NO\n") != std::string::npos);
}

TEST_CASE("ieds subcommand") {
    TempDir tmp;
    const std::string h3 = tmp.file("two.h3", "H3 6\n0 1 2\n3 4 5\n");
    CHECK(cli({"ieds", "--hypergraph", h3, "--r", "1"}).code == 1);
    auto yes = cli({"ieds", "--hypergraph", h3, "--r", "2", "--witness"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "YES\n0 1 2\n3 4 5\n");
}

TEST_CASE("arc-kayles subcommand") {
    TempDir tmp;
    const std::string graph = tmp.file("path.graph", "GRAPH 3\n0 1\n1 2\n");
    CHECK(cli({"arc-kayles", "--graph", graph, "--r", "1"}).code == 0);
    CHECK(cli({"arc-kayles", "--graph", graph, "--r", "1", "--method", "brute"}).code == 0);
}

TEST_CASE("reduce mcc2pmdm then pmdm") {
    TempDir tmp;
    const std::string triangle = tmp.file("triangle.graph", "GRAPH 3\n0 1\n0 2\n1 2\n");
    const std::string out = tmp.name("t.pmdm");
    CHECK(cli({"reduce", "mcc2pmdm", triangle, "-o", out}).code == 0);
    auto r = cli({"pmdm", "--instance", out, "--witness"});
    CHECK(r.code == 0);
    CHECK(r.out == "YES\n0\n1\n2\n3\n4\n5\n");
}

TEST_CASE("reduce ieds2set writes a deck and a map") {
    TempDir tmp;
    const std::string graph = tmp.file("p3.graph", "GRAPH 3\n0 1\n1 2\n");
    const std::string deck = tmp.name("p3.deck");
    const std::string map = tmp.name("p3.map");
    CHECK(cli({"reduce", "ieds2set", graph, "-o", deck, "--map", map}).code == 0);
    CHECK(read_text_file(deck) == "SETDECK 3\n100\n010\n001\n220\n022\n");
    CHECK(read_text_file(map) == "0 vertex 0\n1 vertex 1\n2 vertex 2\n3 edge 0 1\n4 edge 1 2\n");
}

TEST_CASE("reduce sat2set produces the gadget deck") {
    TempDir tmp;
    const std::string cnf = tmp.file("f.cnf", "p cnf 2 1\n1 2 0\n");
    const std::string deck = tmp.name("f.deck");
    const std::string map = tmp.name("f.map");
    CHECK(cli({"reduce", "sat2set", cnf, "-o", deck, "--map", map}).code == 0);

    const Deck parsed = parse_string(parse_deck, read_text_file(deck));
    const std::string map_text = read_text_file(map);
    CHECK(map_text.find(" x12 ") != std::string::npos);
    CHECK(map_text.find(" cm ") != std::string::npos);

    // the gadget of a satisfiable formula packs to vars + clauses
    std::istringstream in(read_text_file(cnf));
    CnfFormula norm = normalize_formula(expand_unit_clauses(parse_cnf(in)));
    const int target = norm.num_vars + static_cast<int>(norm.clauses.size());
    CHECK(solve_max_rset(parsed, target).first);
}

TEST_CASE("gen produces canonical deterministic files") {
    TempDir tmp;
    const std::string a = tmp.name("a.deck");
    const std::string b = tmp.name("b.deck");
    CHECK(cli({"gen", "deck", "--n", "3", "--m", "9", "--seed", "7", "-o", a}).code == 0);
    CHECK(cli({"gen", "deck", "--n", "3", "--m", "9", "--seed", "7", "-o", b}).code == 0);
    CHECK(read_text_file(a) == read_text_file(b));

    const std::string h3 = tmp.name("x.h3");
    CHECK(cli({"gen", "h3", "--v", "9", "--e", "5", "--seed", "3", "-o", h3}).code == 0);
    const Hypergraph3 h = parse_string(parse_h3, read_text_file(h3));
    CHECK(h.edges.size() == 5);
}

TEST_CASE("play transcripts are reproducible") {
    TempDir tmp;
    const std::string deck = tmp.file("two.deck", kTwoDisjointDeck);
    const std::string script = tmp.file("moves.txt", "0\n");
    auto a = cli({"play", "--deck", deck, "--script", script});
    auto b = cli({"play", "--deck", deck, "--script", script});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out ==
          "cards: 6\n"
          "sets: 2\n"
          "[0] 0 1 2\n"
          "[1] 3 4 5\n"
          "move? 0\n"
          "you take 0 1 2\n"
          "engine takes 3 4 5\n"
          "sets: 0\n"
          "you cannot move: you lose\n");
}

TEST_CASE("play on a one-Set deck lets the human win") {
    TempDir tmp;
    const std::string deck = tmp.file("one.deck", kOneSetDeck);
    const std::string script = tmp.file("moves.txt", "0\n");
    auto r = cli({"play", "--deck", deck, "--script", script});
    CHECK(r.code == 0);
    CHECK(r.out.find("engine cannot move: you win") != std::string::npos);
}

TEST_CASE("play rejects illegal scripted moves") {
    TempDir tmp;
    const std::string deck = tmp.file("one.deck", kOneSetDeck);
    const std::string script = tmp.file("moves.txt", "7\n");
    CHECK(cli({"play", "--deck", deck, "--script", script}).code == 2);
}

TEST_CASE("play on an empty deck") {
    TempDir tmp;
    const std::string deck = tmp.file("empty.deck", "SETDECK 2\n");
    auto r = cli({"play", "--deck", deck});
    CHECK(r.code == 0);
    CHECK(r.out == "cards: 0\nsets: 0\nyou cannot move: you lose\n");
}

TEST_CASE("usage and input errors exit with 2, capacity with 3") {
    TempDir tmp;
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"enumerate"}).code == 2);
    CHECK(cli({"enumerate", "--deck", tmp.file("bad.deck", "SETDECK 2\n0\n")}).code == 2);
    CHECK(cli({"gen", "fulldeck", "--n", "13", "-o", tmp.name("big.deck")}).code == 3);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify suites run deterministically") {
    auto a = cli({"verify", "io", "--seed", "5", "--cases", "4"});
    auto b = cli({"verify", "io", "--seed", "5", "--cases", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("PASS") != std::string::npos);
    CHECK(cli({"verify", "bogus"}).code == 2);
}
