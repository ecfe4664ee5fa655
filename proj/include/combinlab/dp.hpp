#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "combinlab/common.hpp"

namespace combinlab {

// Task i spends cost[i][x] of the budget and earns profit[i][x] for
// x = 0..b. Tables start at zero and never decrease.
struct AllocationInstance {
    std::vector<std::vector<std::int64_t>> cost;
    std::vector<std::vector<std::int64_t>> profit;
    std::int64_t budget = 0;

    void validate() const;
};

// The case c_i(x) = x with budget L.
AllocationInstance unit_cost_allocation(std::vector<std::vector<std::int64_t>> profit, std::int64_t budget);

struct AllocationResult {
    std::int64_t value = 0;
    std::vector<std::int64_t> plan;  // x_1..x_N
    std::vector<std::vector<std::int64_t>> table;  // F(i, j), i = 0..N, j = 0..budget
};

AllocationResult allocate(const AllocationInstance& inst);

struct ParetoEntry {
    std::vector<std::size_t> set;  // 1-based item numbers, ascending
    std::int64_t c = 0;
    std::int64_t w = 0;
};

struct KnapsackResult {
    std::vector<std::size_t> set;  // 1-based, ascending
    std::int64_t value = 0;
    std::int64_t volume = 0;
    std::vector<std::vector<ParetoEntry>> levels;  // M_0..M_n when tracing
};

KnapsackResult knapsack_pareto(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v,
                               std::int64_t capacity, bool trace = false);
KnapsackResult greedy_knapsack_by_density(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v,
                                          std::int64_t capacity);

enum class Arrow : std::uint8_t { Diag, Up, Left };

struct LcsTables {
    std::vector<std::vector<std::size_t>> c;  // (n+1) x (m+1)
    std::vector<std::vector<Arrow>> b;        // n x m, b[i-1][j-1]
};

template <class T>
struct LcsResult {
    std::size_t length = 0;
    std::vector<T> sequence;
    LcsTables tables;
};

// Ties prefer Diag, then Up, then Left.
template <class T>
LcsResult<T> lcs(const std::vector<T>& x, const std::vector<T>& y) {
    std::size_t n = x.size(), m = y.size();
    LcsResult<T> r;
    auto& c = r.tables.c;
    auto& b = r.tables.b;
    c.assign(n + 1, std::vector<std::size_t>(m + 1, 0));
    b.assign(n, std::vector<Arrow>(m, Arrow::Up));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            if (x[i - 1] == y[j - 1]) {
                c[i][j] = c[i - 1][j - 1] + 1;
                b[i - 1][j - 1] = Arrow::Diag;
            } else if (c[i - 1][j] >= c[i][j - 1]) {
                c[i][j] = c[i - 1][j];
                b[i - 1][j - 1] = Arrow::Up;
            } else {
                c[i][j] = c[i][j - 1];
                b[i - 1][j - 1] = Arrow::Left;
            }
        }
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        Arrow a = b[i - 1][j - 1];
        if (a == Arrow::Diag) {
            r.sequence.push_back(x[i - 1]);
            --i;
            --j;
        } else if (a == Arrow::Up) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(r.sequence.begin(), r.sequence.end());
    r.length = c[n][m];
    return r;
}

LcsResult<char> lcs(const std::string& x, const std::string& y);

struct ChainResult {
    BigInt cost = 0;
    std::string parenthesization;              // e.g. "((A1A2)A3)"
    std::vector<std::vector<BigInt>> m;        // [i-1][j-1] for i <= j
    std::vector<std::vector<std::size_t>> s;   // split k, 0 off the upper triangle
};

// dims = p_0..p_n for n matrices.
ChainResult matrix_chain(const std::vector<std::int64_t>& dims);
BigInt count_parenthesizations(std::size_t n);

// Polygon v_0..v_n; w(i, k, j) weighs triangle v_i v_k v_j.
using TriangleWeight = std::function<Rational(std::size_t, std::size_t, std::size_t)>;

struct TriangulationResult {
    Rational cost = 0;
    std::vector<std::pair<std::size_t, std::size_t>> diagonals;  // (i, j), i < j
    std::vector<std::array<std::size_t, 3>> triangles;
};

TriangulationResult polygon_triangulation(std::size_t vertices, const TriangleWeight& w);

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

// Exact triangle area.
TriangleWeight area_weight(std::vector<Point> polygon);
// Perimeter under the L1 metric, which stays exact on integer points.
TriangleWeight l1_perimeter_weight(std::vector<Point> polygon);
// w(v_i v_k v_j) = p_i p_k p_j.
TriangleWeight chain_weight(std::vector<std::int64_t> dims);

}  // namespace combinlab
