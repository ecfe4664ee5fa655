#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "combinlab/approx.hpp"
#include "combinlab/generators.hpp"
#include "combinlab/graph.hpp"
#include "reduction_check.hpp"

using namespace combinlab;

namespace {

Literal pos(std::size_t v) { return {v, true}; }
Literal neg(std::size_t v) { return {v, false}; }

CnfFormula cnf(std::size_t n, std::vector<std::vector<Literal>> clauses) { return {n, std::move(clauses)}; }

Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

Graph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 1; v <= n; ++v) e.push_back({v, v % n + 1});
    return Graph(n, e);
}

template <class T>
const T& as(const ProblemInstance& p) {
    return std::get<T>(p);
}

bool same_component(const CnfFormula& f, std::size_t x) {
    for (const auto& comp : scc_kosaraju(implication_graph(f))) {
        std::set<std::size_t> s(comp.begin(), comp.end());
        if (s.count(literal_vertex(pos(x))) && s.count(literal_vertex(neg(x)))) return true;
    }
    return false;
}

void check_twosat(const CnfFormula& f) {
    auto r = twosat_solve(f);
    bool truth = brute::sat(f);
    REQUIRE(r.satisfiable == truth);
    if (r.satisfiable) {
        REQUIRE(satisfies(f, r.assignment));
    } else {
        REQUIRE(r.conflict_var >= 1);
        REQUIRE(r.conflict_var <= f.n);
        REQUIRE(same_component(f, r.conflict_var));
    }
}

}  // namespace

TEST_CASE("witness verification") {
    CHECK(verify_witness(Sat{cnf(2, {{pos(1), pos(2)}})}, Assignment{{true, false}}));
    CHECK_FALSE(verify_witness(Sat{cnf(2, {{pos(1), pos(2)}})}, Assignment{{false, false}}));
    CHECK(verify_witness(Clique{complete(3), 3}, VertexSet{{1, 2, 3}}));
    CHECK_FALSE(verify_witness(Clique{Graph(3, {{1, 2}}), 3}, VertexSet{{1, 2, 3}}));
    CHECK(verify_witness(Partition{{1, 2, 3}}, Selection{{3}}));
    CHECK_FALSE(verify_witness(Partition{{1, 2, 4}}, Selection{{3}}));

    // wrong witness shape and out-of-range indices are errors, not "false"
    CHECK_THROWS_AS(verify_witness(Sat{cnf(2, {{pos(1)}})}, Tour{{1, 2}}), InputError);
    CHECK_THROWS_AS(verify_witness(Sat{cnf(2, {{pos(1)}})}, Assignment{{true}}), InputError);
    CHECK_THROWS_AS(verify_witness(Clique{complete(3), 2}, VertexSet{{1, 7}}), InputError);
}

TEST_CASE("brute force oracle") {
    CHECK_FALSE(brute_force_decide(Sat{cnf(1, {{pos(1)}, {neg(1)}})}).has_value());

    auto c5 = brute_force_decide(HamCycle{cycle(5)});
    REQUIRE(c5.has_value());
    CHECK(verify_witness(HamCycle{cycle(5)}, *c5));
    CHECK_FALSE(brute_force_decide(HamCycle{Graph(4, {{1, 2}, {2, 3}, {3, 4}})}).has_value());

    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        auto c = random_metric_tsp(4, 20, rng);
        std::vector<std::vector<std::int64_t>> m(4, std::vector<std::int64_t>(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m[i][j] = numerator(c[i][j]).convert_to<std::int64_t>();
        auto opt = numerator(brute::tsp_opt(c)).convert_to<std::int64_t>();
        REQUIRE(brute_force_decide(Tsp{m, opt}).has_value());
        REQUIRE_FALSE(brute_force_decide(Tsp{m, opt - 1}).has_value());
    }

    OracleLimits tight;
    tight.vertices = 4;
    CHECK_THROWS_AS(brute_force_decide(HamCycle{cycle(5)}, tight), LimitError);
    CHECK_THROWS_AS(brute_force_decide(Sat{cnf(21, {{pos(21)}})}), LimitError);

    auto l = parse_oracle_limits("vertices=9,box=2");
    CHECK(l.vertices == 9);
    CHECK(l.box == 2);
    CHECK(l.variables == 20);
    CHECK(parse_oracle_limits("15").vertices == 15);
    CHECK_THROWS_AS(parse_oracle_limits("colors=3"), InputError);
}

TEST_CASE("sat to 3sat") {
    auto unit = sat_to_3sat(cnf(1, {{pos(1)}}));
    const auto& t = as<ThreeSat>(unit.target).f;
    CHECK(t.clauses.size() == 4);
    CHECK(t.n == 3);
    CHECK(t.is_3cnf());

    auto wide = sat_to_3sat(cnf(4, {{pos(1), pos(2), pos(3), pos(4)}}));
    const auto& w = as<ThreeSat>(wide.target).f;
    CHECK(w.clauses.size() == 2);
    CHECK(w.n == 5);

    // distinct variables per clause, n >= 2
    for (std::size_t n = 2; n <= 3; ++n)
        for (const auto& f : brute::all_formulas(n, brute::all_clauses(n, 1, n), 3)) {
            const auto& g = as<ThreeSat>(sat_to_3sat(f).target).f;
            REQUIRE(g.is_3cnf());
            REQUIRE(g.n <= f.n * (f.clauses.size() + 1));
        }
}

TEST_CASE("sat to clique") {
    auto out = sat_to_clique(cnf(2, {{pos(1), pos(2)}, {neg(1), pos(2)}}));
    const auto& c = as<Clique>(out.target);
    CHECK(c.g.n() == 4);
    CHECK(c.k == 2);
    CHECK(brute_force_decide(out.target).has_value());

    auto none = sat_to_clique(cnf(1, {{pos(1)}, {neg(1)}}));
    CHECK(as<Clique>(none.target).k == 2);
    CHECK_FALSE(brute_force_decide(none.target).has_value());

    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& f : brute::all_formulas(n, brute::all_clauses(n, 1, n), 3)) {
            auto r = sat_to_clique(f);
            REQUIRE(as<Clique>(r.target).g.n() <= f.n * f.clauses.size());
        }
}

TEST_CASE("3sat to coloring") {
    auto f = cnf(4, {{pos(1), neg(2), pos(3)}, {neg(1), pos(2), pos(4)}, {pos(2), neg(3), neg(4)}});
    auto out = threesat_to_coloring(f);
    const auto& c = as<GraphColoring>(out.target);
    CHECK(c.g.n() == 3 * 4 + 3);
    CHECK(c.k == 5);
    OracleLimits wide = redcheck::wide_limits();
    auto col = brute_force_decide(out.target, wide);
    REQUIRE(col.has_value());
    CHECK(verify_witness(ThreeSat{f}, out.backward(*col)));

    // n = 3 is padded to 4
    auto small = threesat_to_coloring(cnf(3, {{pos(1), pos(2), pos(3)}}));
    CHECK(as<GraphColoring>(small.target).g.n() == 3 * 4 + 1);

    // All eight sign patterns on x1..x3 leave nothing satisfiable.
    std::vector<std::vector<Literal>> all;
    for (int m = 0; m < 8; ++m) all.push_back({{1, bool(m & 1)}, {2, bool(m & 2)}, {3, bool(m & 4)}});
    auto unsat = threesat_to_coloring(cnf(3, all));
    CHECK(as<GraphColoring>(unsat.target).g.n() == 3 * 4 + 8);
    CHECK_FALSE(brute_force_decide(unsat.target, wide).has_value());

    CHECK_THROWS_AS(threesat_to_coloring(cnf(2, {{pos(1), pos(2)}})), InputError);
}

TEST_CASE("exact cover to knapsack") {
    SetSystem s{2, {{1}, {2}, {1, 2}}};
    auto out = exact_cover_to_knapsack01(s);
    const auto& k = as<Knapsack01>(out.target);
    CHECK(k.a == std::vector<BigInt>{4, 1, 5});
    CHECK(k.b == 5);
    CHECK(verify_witness(out.target, Selection{{1, 2}}));
    CHECK(verify_witness(out.target, Selection{{3}}));
    CHECK_FALSE(verify_witness(out.target, Selection{{1}}));

    auto whole = exact_cover_to_knapsack01(SetSystem{3, {{1, 2, 3}}});
    CHECK(as<Knapsack01>(whole.target).a.size() == 1);
    CHECK(as<Knapsack01>(whole.target).a[0] == as<Knapsack01>(whole.target).b);

    // digits that would overflow 64 bits
    SetSystem big{30, {}};
    for (std::size_t i = 1; i <= 30; ++i) big.sets.push_back({i});
    auto wide = exact_cover_to_knapsack01(big);
    CHECK(as<Knapsack01>(wide.target).b > BigInt(std::numeric_limits<std::uint64_t>::max()));

    // an uncovered element leaves its digit unreachable
    auto gap = exact_cover_to_knapsack01(SetSystem{2, {{1}}});
    CHECK_FALSE(brute_force_decide(gap.target).has_value());
}

TEST_CASE("vertex cover to hamiltonian circuit") {
    OracleLimits wide = redcheck::wide_limits();
    auto k3 = vc_to_ham_circuit(complete(3), 2);
    CHECK(as<HamCircuit>(k3.target).d.n() == 14);
    auto circuit = brute_force_decide(k3.target, wide);
    REQUIRE(circuit.has_value());
    CHECK(verify_witness(VertexCover{complete(3), 2}, k3.backward(*circuit)));
    CHECK(verify_witness(k3.target, k3.forward(VertexSet{{1, 2}})));

    auto edge = vc_to_ham_circuit(Graph(2, {{1, 2}}), 1);
    CHECK(as<HamCircuit>(edge.target).d.n() == 5);
    CHECK(brute_force_decide(edge.target, wide).has_value());

    CHECK_FALSE(brute_force_decide(vc_to_ham_circuit(complete(3), 1).target, wide).has_value());
    CHECK_THROWS_AS(vc_to_ham_circuit(complete(3), 4), InputError);
    CHECK_THROWS_AS(vc_to_ham_circuit(Graph(3), 1), InputError);
}

TEST_CASE("simple reductions") {
    auto is = apply_reduction(ReductionKind::CliqueToIS, Clique{complete(3), 3});
    CHECK(as<IndependentSet>(is.target).g.m() == 0);
    CHECK(as<IndependentSet>(is.target).k == 3);

    auto part = apply_reduction(ReductionKind::Knapsack01ToPartition, Knapsack01{{1, 2}, 2});
    CHECK(as<Partition>(part.target).a == std::vector<BigInt>{1, 2, 4, 3});
    CHECK(verify_witness(part.target, Selection{{1, 3}}));
    CHECK(verify_witness(part.target, Selection{{2, 4}}));

    std::vector<std::vector<std::int64_t>> c{{0, 1, 5, 2}, {1, 0, 1, 5}, {5, 1, 0, 1}, {2, 5, 1, 0}};
    auto ilp = apply_reduction(ReductionKind::TspToIlp, Tsp{c, 5});
    CHECK(brute_force_decide(ilp.target).has_value());
    CHECK_FALSE(brute_force_decide(apply_reduction(ReductionKind::TspToIlp, Tsp{c, 4}).target).has_value());

    CHECK_THROWS_AS(apply_reduction(ReductionKind::CliqueToIS, VertexCover{complete(3), 1}), InputError);
    for (auto kind : all_reductions()) CHECK(parse_reduction_kind(to_string(kind)) == kind);
    CHECK(all_reductions().size() == 16);
    CHECK_THROWS_AS(parse_reduction_kind("sat-tsp"), InputError);
}

TEST_CASE("hamcycle to tsp gives metric matrices") {
    for (std::size_t n = 3; n <= 5; ++n)
        for (const auto& g : brute::all_graphs(n)) {
            auto out = apply_reduction(ReductionKind::HamCycleToTsp, HamCycle{g});
            const auto& t = as<Tsp>(out.target);
            REQUIRE(t.L == std::int64_t(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (i != j && j != k && i != k) REQUIRE(t.c[i][k] <= t.c[i][j] + t.c[j][k]);
        }
}

TEST_CASE("reduction soundness, quick sweep") {
    for (auto kind : all_reductions()) {
        CAPTURE(to_string(kind));
        auto t = redcheck::sweep(kind, 0, redcheck::wide_limits());
        CAPTURE(t.first_failure);
        CHECK(t.failures == 0);
        CHECK(t.instances > 0);
        CHECK(t.yes > 0);
        CHECK(t.yes < t.instances);
    }
}

TEST_CASE("2-sat examples") {
    auto a = twosat_solve(cnf(2, {{pos(1), pos(2)}, {neg(1), pos(2)}}));
    REQUIRE(a.satisfiable);
    CHECK(a.assignment[1]);

    auto b = cnf(2, {{pos(1), pos(2)}, {pos(1), neg(2)}, {neg(1), pos(2)}, {neg(1), neg(2)}});
    auto r = twosat_solve(b);
    CHECK_FALSE(r.satisfiable);
    CHECK(r.conflict_var == 1);
    CHECK(same_component(b, 1));

    auto empty = twosat_solve(cnf(3, {}));
    REQUIRE(empty.satisfiable);
    CHECK(empty.assignment == std::vector<bool>{false, false, false});

    CHECK_THROWS_AS(twosat_solve(cnf(3, {{pos(1), pos(2), pos(3)}})), InputError);
    CHECK(literal_vertex(pos(3)) == 5);
    CHECK(literal_vertex(neg(3)) == 6);
    CHECK(vertex_literal(6) == neg(3));
}

TEST_CASE("implication graph is skew symmetric") {
    Rng rng(13);
    for (int t = 0; t < 500; ++t) {
        auto f = random_cnf(1 + rng.below(8), rng.below(12), 2, rng);
        auto d = implication_graph(f);
        REQUIRE(d.n() == 2 * f.n);
        for (const auto& arc : d.arcs()) {
            auto a = vertex_literal(arc.u), b = vertex_literal(arc.v);
            REQUIRE(d.has_arc(literal_vertex(b.negated()), literal_vertex(a.negated())));
        }
    }
}

TEST_CASE("2-sat agrees with brute force") {
    for (std::size_t n = 1; n <= 2; ++n) {
        auto clauses = brute::all_clauses(n, 1, 2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << clauses.size()); ++mask) {
            CnfFormula f{n, {}};
            for (std::size_t i = 0; i < clauses.size(); ++i)
                if ((mask >> i) & 1) f.clauses.push_back(clauses[i]);
            check_twosat(f);
        }
    }
    for (const auto& f : brute::all_formulas(3, brute::all_clauses(3, 1, 2), 4)) check_twosat(f);
    Rng rng(61);
    for (int t = 0; t < 2000; ++t) check_twosat(random_cnf(1 + rng.below(12), rng.below(30), 2, rng));
}
