#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "combinlab/dp.hpp"

using namespace combinlab;

namespace {

const std::vector<std::int64_t> kValues{160, 250, 180, 30};
const std::vector<std::int64_t> kVolumes{40, 50, 40, 20};

bool dominated_pair(const std::vector<ParetoEntry>& level) {
    for (std::size_t i = 0; i < level.size(); ++i)
        for (std::size_t j = 0; j < level.size(); ++j)
            if (i != j && level[i].c >= level[j].c && level[i].w <= level[j].w) return true;
    return false;
}

}  // namespace

TEST_CASE("allocation") {
    auto single = allocate(unit_cost_allocation({{0, 3, 4, 9}}, 2));
    CHECK(single.value == 4);

    auto linear = allocate(unit_cost_allocation({{0, 1, 2, 3}, {0, 2, 4, 6}}, 3));
    CHECK(linear.value == 6);
    CHECK(linear.plan == std::vector<std::int64_t>{0, 3});

    Rng rng(15);
    for (int t = 0; t < 400; ++t) {
        AllocationInstance inst;
        std::size_t N = 1 + rng.below(3);
        for (std::size_t i = 0; i < N; ++i) {
            std::vector<std::int64_t> c{0}, p{0};
            for (int x = 1; x <= 3; ++x) {
                c.push_back(c.back() + rng.range(0, 3));
                p.push_back(p.back() + rng.range(0, 5));
            }
            inst.cost.push_back(c);
            inst.profit.push_back(p);
        }
        inst.budget = rng.range(0, 6);
        auto r = allocate(inst);
        REQUIRE(r.value == brute::allocation_opt(inst));
        std::int64_t spent = 0, got = 0;
        for (std::size_t i = 0; i < N; ++i) {
            spent += inst.cost[i][r.plan[i]];
            got += inst.profit[i][r.plan[i]];
        }
        REQUIRE(spent <= inst.budget);
        REQUIRE(got == r.value);
    }

    AllocationInstance bad;
    bad.cost = {{1, 2}};
    bad.profit = {{0, 1}};
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad.cost = {{0, 2, 1}};
    bad.profit = {{0, 1, 1}};
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("pareto knapsack on the V=85 table") {
    auto r = knapsack_pareto(kValues, kVolumes, 85, true);
    CHECK(r.value == 340);
    CHECK(r.set == std::vector<std::size_t>{1, 3});
    CHECK(r.volume == 80);
    for (const auto& level : r.levels) CHECK_FALSE(dominated_pair(level));

    auto g = greedy_knapsack_by_density(kValues, kVolumes, 85);
    CHECK(g.value == 280);
    CHECK(g.set == std::vector<std::size_t>{2, 4});
    CHECK(g.volume == 70);

    auto empty = knapsack_pareto(kValues, kVolumes, 0);
    CHECK(empty.value == 0);
    CHECK(empty.set.empty());

    auto one = greedy_knapsack_by_density({5}, {3}, 4);
    CHECK(one.set == std::vector<std::size_t>{1});
}

TEST_CASE("pareto knapsack equals subset enumeration") {
    Rng rng(19);
    for (int t = 0; t < 500; ++t) {
        std::size_t n = 1 + rng.below(10);
        std::vector<std::int64_t> c(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = rng.range(0, 30);
            v[i] = rng.range(0, 20);
        }
        std::int64_t cap = rng.range(0, 60);
        auto r = knapsack_pareto(c, v, cap, true);
        REQUIRE(r.value == brute::knapsack_opt(c, v, cap));
        std::int64_t val = 0, vol = 0;
        for (auto i : r.set) {
            val += c[i - 1];
            vol += v[i - 1];
        }
        REQUIRE(val == r.value);
        REQUIRE(vol == r.volume);
        REQUIRE(vol <= cap);
        for (const auto& level : r.levels) REQUIRE_FALSE(dominated_pair(level));
        auto g = greedy_knapsack_by_density(c, v, cap);
        REQUIRE(g.value <= r.value);
        REQUIRE(g.volume <= cap);
    }
}

TEST_CASE("lcs") {
    auto r = lcs(std::string("AAB"), std::string("BAA"));
    CHECK(r.length == 2);
    CHECK(std::string(r.sequence.begin(), r.sequence.end()) == "AA");
    CHECK(lcs(std::string(""), std::string("XYZ")).length == 0);

    Rng rng(21);
    for (int t = 0; t < 600; ++t) {
        std::string x, y;
        std::size_t nx = rng.below(9), ny = rng.below(9);
        for (std::size_t i = 0; i < nx; ++i) x += char('A' + rng.below(3));
        for (std::size_t i = 0; i < ny; ++i) y += char('A' + rng.below(3));
        auto res = lcs(x, y);
        std::string s(res.sequence.begin(), res.sequence.end());
        REQUIRE(res.length == brute::lcs_length(x, y));
        REQUIRE(s.size() == res.length);
        REQUIRE(brute::is_subsequence(s, x));
        REQUIRE(brute::is_subsequence(s, y));
        const auto& c = res.tables.c;
        for (std::size_t i = 0; i <= nx; ++i)
            for (std::size_t j = 0; j <= ny; ++j) {
                REQUIRE(c[i][j] <= std::min(i, j));
                if (i > 0) REQUIRE(c[i - 1][j] <= c[i][j]);
                if (j > 0) REQUIRE(c[i][j - 1] <= c[i][j]);
            }
    }
}

TEST_CASE("matrix chain") {
    auto r = matrix_chain({10, 100, 5, 50});
    CHECK(r.cost == 7500);
    CHECK(r.parenthesization == "((A1A2)A3)");
    CHECK(matrix_chain({4, 7}).cost == 0);

    // Dimensions that force ((A1A2)A3)(A4(A5A6)).
    auto six = matrix_chain({14, 26, 22, 19, 29, 30, 15});
    CHECK(six.cost == 39165);
    CHECK(six.parenthesization == "(((A1A2)A3)(A4(A5A6)))");
    CHECK(matrix_chain({30, 35, 15, 5, 10, 20, 25}).cost == 15125);

    Rng rng(25);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + rng.below(6);
        std::vector<std::int64_t> p(n + 1);
        for (auto& x : p) x = rng.range(1, 30);
        auto res = matrix_chain(p);
        REQUIRE(res.cost == brute::chain_min(p));
        for (std::size_t i = 1; i <= n; ++i) {
            REQUIRE(res.m[i - 1][i - 1] == 0);
            for (std::size_t j = i + 1; j <= n; ++j) {
                REQUIRE(res.s[i - 1][j - 1] >= i);
                REQUIRE(res.s[i - 1][j - 1] < j);
            }
        }
        if (n == 6) REQUIRE(brute::chain_costs(p, 1, 6).size() == 42);
    }
}

TEST_CASE("parenthesization count") {
    CHECK(count_parenthesizations(1) == 1);
    CHECK(count_parenthesizations(4) == 5);
    CHECK(count_parenthesizations(6) == 42);
    CHECK(count_parenthesizations(12) >= 16);
    for (std::size_t n = 3; n <= 40; ++n) CHECK(count_parenthesizations(n) >= BigInt(1) << ((n + 2) / 3));
}

TEST_CASE("polygon triangulation") {
    auto tri = polygon_triangulation(3, [](std::size_t, std::size_t, std::size_t) { return Rational(7); });
    CHECK(tri.cost == 7);
    CHECK(tri.diagonals.empty());
    CHECK(tri.triangles.size() == 1);

    // Convex hexagon: every triangulation has the same total area.
    std::vector<Point> hex{{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}};
    auto area = polygon_triangulation(6, area_weight(hex));
    CHECK(area.cost == 36);
    CHECK(area.diagonals.size() == 3);

    for (std::size_t n = 2; n <= 6; ++n) {
        Rng rng(n);
        for (int t = 0; t < 30; ++t) {
            std::vector<std::int64_t> p(n + 1);
            for (auto& x : p) x = rng.range(1, 20);
            auto res = polygon_triangulation(n + 1, chain_weight(p));
            REQUIRE(res.cost == Rational(matrix_chain(p).cost));
        }
    }

    Rng rng(27);
    for (int t = 0; t < 200; ++t) {
        std::size_t v = 3 + rng.below(5);
        std::vector<Point> pts(v);
        for (auto& q : pts) q = {rng.range(-9, 9), rng.range(-9, 9)};
        auto w = l1_perimeter_weight(pts);
        auto res = polygon_triangulation(v, w);
        REQUIRE(res.cost == brute::triangulation_min(v, w));
        REQUIRE(res.diagonals.size() == v - 3);
        REQUIRE(res.triangles.size() == v - 2);
        Rational sum = 0;
        for (const auto& tr : res.triangles) sum += w(tr[0], tr[1], tr[2]);
        REQUIRE(sum == res.cost);
    }
}
