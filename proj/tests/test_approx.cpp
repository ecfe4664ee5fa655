#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "combinlab/approx.hpp"
#include "combinlab/dp.hpp"
#include "combinlab/generators.hpp"

using namespace combinlab;

namespace {

Rational harmonic(std::size_t n) {
    Rational h = 0;
    for (std::size_t k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

Graph star(std::size_t leaves) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 2; v <= leaves + 1; ++v) e.push_back({1, v});
    return Graph(leaves + 1, e);
}

CostMatrix matrix(std::vector<std::vector<std::int64_t>> rows) {
    CostMatrix c;
    for (auto& r : rows) c.emplace_back(r.begin(), r.end());
    return c;
}

// Graph with the cycle 1..n planted and other pairs added with probability p.
Graph planted_cycle(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (v == u + 1 || (u == 1 && v == n) || rng.below(den) < num) e.push_back({u, v});
    return Graph(n, e);
}

bool packing_fits(const std::vector<Rational>& sizes, const Packing& p) {
    std::vector<Rational> load(p.bins(), 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (p.bin[i] < 1 || p.bin[i] > p.bins()) return false;
        load[p.bin[i] - 1] += sizes[i];
    }
    for (std::size_t b = 0; b < load.size(); ++b)
        if (load[b] > 1 || load[b] != p.load[b] || load[b] == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("matching cover") {
    auto path = vc_matching_2approx(Graph(3, {{1, 2}, {2, 3}}));
    CHECK(path.size() == 2);
    CHECK(vc_optimum(Graph(3, {{1, 2}, {2, 3}})) == 1);
    CHECK(vc_matching_2approx(Graph(5)).empty());

    Graph pm(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    CHECK(vc_matching_2approx(pm).size() == 8);
    CHECK(vc_optimum(pm) == 4);

    Rng rng(1);
    for (int t = 0; t < 600; ++t) {
        Graph g = random_graph(1 + rng.below(12), 1 + rng.below(3), 4, rng);
        auto c = vc_matching_2approx(g);
        auto opt = brute::vc_opt(g);
        REQUIRE(brute::is_vertex_cover(g, c));
        REQUIRE(vc_optimum(g) == opt);
        REQUIRE(c.size() <= 2 * opt);
        auto d = vc_degree_greedy(g);
        REQUIRE(brute::is_vertex_cover(g, d));
        REQUIRE(d.size() >= opt);
    }
}

TEST_CASE("degree greedy") {
    CHECK(vc_degree_greedy(star(5)) == std::vector<std::size_t>{1});

    auto two = vc_greedy_counterexample(2);
    CHECK(two.core.size() == 2);
    CHECK(brute::is_vertex_cover(two.g, two.core));

    auto six = vc_greedy_counterexample(6);
    auto greedy = vc_degree_greedy(six.g);
    CHECK(greedy.size() == six.greedy_size);
    CHECK(vc_optimum(six.g) == 6);
    CHECK(Rational(greedy.size(), 6) > Rational(7, 5));
    CHECK(Rational(greedy.size(), 6) >= harmonic(6) - 1);

    Rational at6 = 0, last = 0;
    for (std::size_t n = 2; n <= 30; ++n) {
        CAPTURE(n);
        auto ce = vc_greedy_counterexample(n);
        std::size_t expect = 0;
        for (std::size_t k = 1; k <= n; ++k) expect += n / k;
        REQUIRE(ce.greedy_size == expect);
        REQUIRE(ce.core.size() == n);
        REQUIRE(brute::is_vertex_cover(ce.g, ce.core));
        auto d = vc_degree_greedy(ce.g);
        REQUIRE(brute::is_vertex_cover(ce.g, d));
        REQUIRE(d.size() == expect);
        // n pendant gadgets form a matching, so n is optimal
        if (ce.g.n() <= 40) REQUIRE(vc_optimum(ce.g) == n);
        Rational ratio(d.size(), n);
        REQUIRE(ratio >= harmonic(n) - 1);
        if (n == 6) at6 = ratio;
        last = ratio;
    }
    CHECK(last > at6);
}

TEST_CASE("greedy set cover") {
    SetSystem disjoint{5, {{1, 2}, {3}, {4, 5}}};
    CHECK(set_cover_greedy(disjoint).size() == 3);
    CHECK(set_cover_optimum(disjoint) == 3);

    SetSystem trace{3, {{1, 2, 3}, {1, 2}, {3}}};
    CHECK(set_cover_greedy(trace) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(set_cover_greedy(SetSystem{3, {{1}, {2}}}), InputError);

    Rng rng(3);
    for (int t = 0; t < 600; ++t) {
        auto s = random_set_system(1 + rng.below(10), 1 + rng.below(10), rng);
        auto g = set_cover_greedy(s);
        auto opt = brute::set_cover_opt(s);
        REQUIRE(brute::covers(s, g));
        REQUIRE(set_cover_optimum(s) == opt);
        REQUIRE(Rational(g.size()) <= harmonic(max_set_size(s)) * opt);
    }
}

TEST_CASE("metric tsp helpers") {
    CHECK_THROWS_AS(MetricTsp(matrix({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})), InputError);
    CHECK_THROWS_AS(MetricTsp(matrix({{0, 1}, {2, 0}})), InputError);
    MetricTsp eq(matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    auto dt = tsp_double_tree(eq);
    CHECK(dt.length == 6);
    CHECK(tsp_christofides(eq).length == 6);
    CHECK(dt.tour.front() == 1);

    // unit square with diagonals rounded up to 3/2
    CostMatrix sq(4, std::vector<Rational>(4, 1));
    for (std::size_t i = 0; i < 4; ++i) sq[i][i] = 0;
    sq[0][2] = sq[2][0] = sq[1][3] = sq[3][1] = Rational(3, 2);
    MetricTsp square(sq);
    CHECK(tsp_optimum(sq).length == 4);
    CHECK(tsp_double_tree(square).length <= 8);
    CHECK(tour_length(sq, {1, 2, 3, 4}) == 4);
}

TEST_CASE("exact perfect matching") {
    auto c = matrix({{0, 1, 9, 9}, {1, 0, 9, 9}, {9, 9, 0, 1}, {9, 9, 1, 0}});
    auto two = min_perfect_matching_exact({1, 2}, c);
    CHECK(two.pairs.size() == 1);
    CHECK(two.weight == 1);

    auto cross = matrix({{0, 9, 1, 9}, {9, 0, 9, 1}, {1, 9, 0, 9}, {9, 1, 9, 0}});
    auto m = min_perfect_matching_exact({1, 2, 3, 4}, cross);
    CHECK(m.weight == 2);
    CHECK(m.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 4}});

    CHECK(brute::count_matchings(8) == 105);
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        auto cm = random_metric_tsp(10, 30, rng);
        std::vector<std::size_t> vs{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        rng.shuffle(vs);
        vs.resize(8);
        auto r = min_perfect_matching_exact(vs, cm);
        REQUIRE(r.weight == brute::matching_opt(vs, cm));
        REQUIRE(r.pairs.size() == 4);
    }
    CHECK_THROWS_AS(min_perfect_matching_exact({1, 2, 3}, cross), InputError);
}

TEST_CASE("double tree and christofides ratios") {
    Rng rng(7);
    bool strict = false;
    for (int t = 0; t < 600; ++t) {
        std::size_t n = 3 + rng.below(7);
        MetricTsp inst(random_metric_tsp(n, 20, rng));
        auto opt = tsp_optimum(inst.cost()).length;
        if (n <= 7) REQUIRE(brute::tsp_opt(inst.cost()) == opt);
        auto dt = tsp_double_tree(inst);
        auto ch = tsp_christofides(inst);
        REQUIRE(brute::is_tour(dt.tour, n));
        REQUIRE(brute::is_tour(ch.tour, n));
        REQUIRE(dt.length == tour_length(inst.cost(), dt.tour));
        REQUIRE(ch.length == tour_length(inst.cost(), ch.tour));
        REQUIRE(dt.length <= 2 * opt);
        REQUIRE(ch.length * 2 <= 3 * opt);
        if (n == 5 && ch.length < dt.length) strict = true;
    }
    CHECK(strict);
}

TEST_CASE("gap instances") {
    Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    CHECK(tsp_optimum(tsp_gap_instance(c5, 1)).length == 5);

    Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
    for (Rational eps : {Rational(0), Rational(1, 2), Rational(2)}) {
        auto c = tsp_gap_instance(p4, eps);
        CHECK(tsp_optimum(c).length >= (1 + eps) * 4 + 1 + 3);
        if (eps * 4 >= 1) CHECK_FALSE(satisfies_triangle(c));
    }

    // A planted cycle keeps OPT = n while double tree may wander onto a non-edge.
    Rng rng(11);
    Rational worst = 0;
    for (int seed = 0; seed < 200; ++seed) {
        std::size_t n = 5 + rng.below(5);
        Graph g = planted_cycle(n, 1, 3, rng);
        auto c = tsp_gap_instance(g, 1);
        REQUIRE(tsp_optimum(c).length == Rational(n));
        worst = std::max(worst, tsp_double_tree(c).length / n);
    }
    CHECK(worst > 2);
}

TEST_CASE("max cut local search") {
    CHECK(max_cut_local_search(Graph(2, {{1, 2}})).cut == 1);
    Graph k3(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(max_cut_local_search(k3).cut == 2);
    CHECK(max_cut_optimum(k3) == 2);

    Rng rng(13);
    for (int t = 0; t < 600; ++t) {
        Graph g = random_graph(1 + rng.below(12), 1 + rng.below(3), 4, rng);
        auto r = max_cut_local_search(g);
        REQUIRE(r.cut == cut_size(g, r.side));
        REQUIRE(r.moves <= g.m());
        auto opt = brute::max_cut_opt(g);
        REQUIRE(max_cut_optimum(g) == opt);
        REQUIRE(opt <= 2 * r.cut);
        // no single move helps
        for (std::size_t v = 0; v < g.n(); ++v) {
            auto side = r.side;
            side[v] = !side[v];
            REQUIRE(cut_size(g, side) <= r.cut);
        }
    }
}

TEST_CASE("knapsack fptas") {
    std::vector<std::int64_t> c{160, 250, 180, 30}, v{40, 50, 40, 20};
    CHECK(fptas_shift(250, 4, Rational(1, 2)) == 4);
    CHECK(fptas_shift(5, 4, Rational(1, 2)) == 0);
    auto r = knapsack_fptas(c, v, 85, Rational(1, 2));
    CHECK(r.value >= 227);
    CHECK(r.volume <= 85);
    CHECK(knapsack_fptas(c, v, 85, Rational(1000000)).volume <= 85);

    Rng rng(17);
    for (int t = 0; t < 600; ++t) {
        auto k = random_knapsack(1 + rng.below(12), 200, 30, rng);
        Rational eps(1 + rng.below(4), 1 + rng.below(4));
        auto f = knapsack_fptas(k.values, k.volumes, k.capacity, eps);
        std::int64_t val = 0, vol = 0;
        for (auto i : f.set) {
            val += k.values[i - 1];
            vol += k.volumes[i - 1];
        }
        REQUIRE(val == f.value);
        REQUIRE(vol == f.volume);
        REQUIRE(vol <= k.capacity);
        auto opt = brute::knapsack_opt(k.values, k.volumes, k.capacity);
        REQUIRE(Rational(opt) <= (1 + eps) * f.value);
    }
}

TEST_CASE("first fit") {
    std::vector<Rational> three(3, Rational(3, 5));
    auto a = bin_pack_first_fit(three);
    CHECK(a.bins() == 3);
    CHECK(bin_pack_optimum(three) == 3);
    CHECK(bin_pack_first_fit(std::vector<Rational>(4, Rational(1, 2))).bins() == 2);
    CHECK_THROWS_AS(bin_pack_first_fit({Rational(3, 2)}), InputError);

    Rng rng(19);
    for (int t = 0; t < 600; ++t) {
        auto sizes = random_bin_sizes(1 + rng.below(10), 10, rng);
        auto p = bin_pack_first_fit(sizes);
        REQUIRE(packing_fits(sizes, p));
        Rational total = 0;
        for (const auto& s : sizes) total += s;
        Rational twice = 2 * total;
        auto ceil2 = (numerator(twice) + denominator(twice) - 1) / denominator(twice);
        REQUIRE(BigInt(p.bins()) <= ceil2);
        auto opt = brute::bin_opt(sizes);
        REQUIRE(bin_pack_optimum(sizes) == opt);
        REQUIRE(p.bins() <= 2 * opt);
        std::size_t under_half = 0;
        for (const auto& l : p.load) under_half += l <= Rational(1, 2);
        REQUIRE(under_half <= 1);
    }
}
