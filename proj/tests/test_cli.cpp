#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "combinlab/bench.hpp"
#include "combinlab/generators.hpp"
#include "combinlab/io.hpp"

using namespace combinlab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("combinlab_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string put(const std::string& name, const std::string& text) const {
        auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

const char* kK5 =
    "p 5 10\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n";

}  // namespace

TEST_CASE("json round trips") {
    Graph g(3, {{1, 2, Rational(5, 2)}, {2, 3, -1}}, true);
    Graph g2 = graph_from_json(graph_to_json(g));
    CHECK(g2.m() == 2);
    CHECK(g2.edge(0).w == Rational(5, 2));
    Digraph d(3, {{3, 1, 4}}, true);
    CHECK(digraph_from_json(digraph_to_json(d)).has_arc(3, 1));

    CnfFormula f{3, {{{1, true}, {3, false}}, {{2, false}}}};
    auto f2 = cnf_from_json(cnf_to_json(f));
    CHECK(f2.n == 3);
    CHECK(f2.clauses == f.clauses);
    CHECK(parse_dimacs(to_dimacs(f)).clauses == f.clauses);

    BigInt huge = BigInt(1) << 100;
    CHECK(bigint_from_json(bigint_to_json(huge)) == huge);
    CHECK(bigint_from_json(bigint_to_json(BigInt(-7))) == -7);

    Rng rng(3);
    std::vector<ProblemInstance> insts = {
        Sat{f},
        Clique{g.complement(), 2},
        VertexCover{random_graph(5, 1, 2, rng), 3},
        ExactCover{random_set_system(4, 3, rng)},
        SetCover{SetSystem{3, {{1, 2}, {3}}}, 2},
        Knapsack01{{4, 1, huge}, 5},
        KnapsackDecision{{3, 4}, {2, 2}, 3, 4},
        Partition{{1, 2, 3}},
        HamCircuit{random_digraph(4, 1, 2, 1, 1, rng)},
        Tsp{{{0, 1}, {1, 0}}, 2},
        Ilp{{{1, 1}}, {1}, {Relation::Ge}, {0, 0}, {1, 1}},
    };
    for (const auto& p : insts) {
        auto j = instance_to_json(p);
        auto back = instance_from_json(j);
        CHECK(problem_name(back) == problem_name(p));
        CHECK(instance_to_json(back) == j);
    }
    std::vector<Witness> ws = {Assignment{{true, false}}, VertexSet{{2, 3}}, ColorMap{{1, 2, 1}},
                               Selection{{1}}, Tour{{1, 3, 2}}, IntPoint{{-1, 2}}};
    for (const auto& w : ws) CHECK(witness_to_json(witness_from_json(witness_to_json(w))) == witness_to_json(w));

    CHECK_THROWS_AS(instance_from_json(Json{{"problem", "chess"}}), InputError);
    CHECK(parse_cost_matrix("0 1\n1 0\n").size() == 2);
    CHECK(parse_rationals("1/2 3")[0] == Rational(1, 2));
}

TEST_CASE("cli exit codes") {
    Scratch s;
    auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"solve", "euler", (s.dir / "missing.g").string()}).code == 2);

    auto k5 = run({"solve", "euler", s.put("k5.g", kK5)});
    CHECK(k5.code == 0);
    CHECK(k5.out.find("closed walk over 10 edges") != std::string::npos);
    CHECK(run({"solve", "euler", s.put("k4e.g", "p 4 5\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")}).code == 1);

    auto sat = run({"twosat", s.put("sat.cnf", "p cnf 2 2\n1 2 0\n-1 2 0\n")});
    CHECK(sat.code == 0);
    CHECK(sat.out.rfind("SAT", 0) == 0);
    auto unsat = run({"--format", "json", "twosat", s.put("unsat.cnf", "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n")});
    CHECK(unsat.code == 1);
    CHECK(Json::parse(unsat.out).at("conflict_var") == 1);
    CHECK(run({"twosat", s.put("wide.cnf", "p cnf 3 1\n1 2 3 0\n")}).code == 2);

    // a 14-cycle is past the default 12-vertex cap
    std::string c14 = "p 14 14\n";
    for (int v = 1; v <= 14; ++v) c14 += "e " + std::to_string(v) + " " + std::to_string(v % 14 + 1) + "\n";
    auto cyc = s.put("c14.g", c14);
    CHECK(run({"solve", "ham-cycle", cyc}).code == 3);
    CHECK(run({"--limit", "vertices=14", "solve", "ham-cycle", cyc}).code == 0);
    ::setenv("COMBINLAB_ORACLE_LIMIT", "vertices=14", 1);
    CHECK(run({"solve", "ham-cycle", cyc}).code == 0);
    ::unsetenv("COMBINLAB_ORACLE_LIMIT");
}

TEST_CASE("cli solvers") {
    Scratch s;
    auto sorted = run({"--format", "json", "sort", "merge-insertion", s.put("keys.txt", "5 3 9 1 7\n"), "--count"});
    REQUIRE(sorted.code == 0);
    auto j = Json::parse(sorted.out);
    CHECK(j.at("sorted") == std::vector<std::int64_t>{1, 3, 5, 7, 9});
    CHECK(j.at("comparisons").get<int>() <= 7);

    auto sel = run({"--format", "json", "select", s.put("sel.txt", "4 8 1 9 3\n"), "--algo", "top2"});
    CHECK(Json::parse(sel.out).at("values") == std::vector<std::int64_t>{9, 8});

    auto ks = run({"solve", "knapsack",
                   s.put("ks.json", R"({"values":[160,250,180,30],"volumes":[40,50,40,20],"capacity":85})")});
    CHECK(ks.out.find("value 340") != std::string::npos);

    auto mc = run({"solve", "matrix-chain", s.put("mc.txt", "10 100 5 50")});
    CHECK(mc.out == "7500 ((A1A2)A3)\n");

    auto scc = run({"--format", "json", "solve", "scc", s.put("d.g", "pd 3 3\na 1 2\na 2 1\na 2 3\n")});
    CHECK(Json::parse(scc.out).at("components").size() == 2);

    auto cf = run({"solve", "counterfeit", s.put("coins.json", R"({"n":12,"coin":7,"heavier":false})")});
    CHECK(cf.out.find("coin 7 lighter") != std::string::npos);

    auto ap = run({"--format", "json", "approx", "vc-matching", s.put("p3.g", "p 3 2\ne 1 2\ne 2 3\n"), "--oracle"});
    auto rep = Json::parse(ap.out);
    CHECK(rep.at("optimal") == 1);
    CHECK(rep.at("ratio") == 2);
}

TEST_CASE("reduce output verifies") {
    Scratch s;
    auto tri = s.put("k3.g", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    auto red = run({"--format", "json", "--limit", "vertices=14", "reduce", "vc-hamcircuit", tri, "--k", "2"});
    REQUIRE(red.code == 0);
    auto j = Json::parse(red.out);
    CHECK(j.at("target").at("problem") == "ham-circuit");
    auto out = s.put("red.json", red.out);
    auto ok = run({"verify", "ham-circuit", out, out});
    CHECK(ok.code == 0);
    CHECK(ok.out == "accepted\n");

    auto cnf = s.put("f.cnf", "p cnf 3 2\n1 -2 0\n2 3 0\n");
    for (std::string kind : {"sat-3sat", "sat-clique"}) {
        auto r = run({"--format", "json", "reduce", kind, cnf});
        REQUIRE(r.code == 0);
        auto f = s.put(kind + ".json", r.out);
        std::string target = Json::parse(r.out).at("target").at("problem");
        CHECK(run({"verify", target, f, f}).code == 0);
    }

    // a witness that fails the check is a negative answer, not an input error
    auto bad = s.put("bad.json", R"({"vertices":[1]})");
    CHECK(run({"verify", "vertex-cover", tri, bad, "--k", "1"}).code == 1);
}

TEST_CASE("bench and gen are deterministic") {
    auto a = run({"--format", "json", "--seed", "5", "bench", "sorting", "--n", "1..24"});
    auto b = run({"--format", "json", "--seed", "5", "bench", "sorting", "--n", "1..24"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto rows = Json::parse(a.out).at("rows");
    CHECK(rows.size() == 24);

    auto g1 = run({"--seed", "9", "gen", "graph", "--n", "7"});
    auto g2 = run({"--seed", "9", "gen", "graph", "--n", "7"});
    CHECK(g1.out == g2.out);
    CHECK(parse_graph(g1.out).n() == 7);
    CHECK(run({"gen", "unicorn"}).code == 2);
}
