#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "combinlab/common.hpp"
#include "combinlab/complexity.hpp"
#include "combinlab/graph.hpp"

namespace combinlab {

// ---- vertex cover ---------------------------------------------------------

// Scans edges in id order and takes both ends of every uncovered edge.
std::vector<std::size_t> vc_matching_2approx(const Graph& g);
// Highest remaining degree first, smallest index on ties. No guarantee.
std::vector<std::size_t> vc_degree_greedy(const Graph& g);

struct GreedyCounterexample {
    Graph g;
    std::vector<std::size_t> core;     // an optimal cover of size n
    std::size_t greedy_size = 0;       // sum over k = 1..n of floor(n/k)
};

// Bipartite: for k = n..1, floor(n/k) gadget vertices each joined to k
// distinct core vertices. Gadgets are numbered before the core, so the
// smallest-index tie break sends degree greedy to the gadgets every time.
GreedyCounterexample vc_greedy_counterexample(std::size_t n);

// Exact minimum cover size (bounded search); LimitError past 64 vertices.
std::size_t vc_optimum(const Graph& g);

// ---- set cover ------------------------------------------------------------

// Picks the set meeting the most uncovered elements, smallest index on
// ties. Returns 1-based indices in pick order.
std::vector<std::size_t> set_cover_greedy(const SetSystem& s);
std::size_t set_cover_optimum(const SetSystem& s);
std::size_t max_set_size(const SetSystem& s);

// ---- TSP ------------------------------------------------------------------

using CostMatrix = std::vector<std::vector<Rational>>;

// Square, symmetric, non-negative, zero diagonal.
void check_symmetric(const CostMatrix& c);
bool satisfies_triangle(const CostMatrix& c);

class MetricTsp {
public:
    // Throws InputError unless symmetric with the triangle inequality on all triples.
    explicit MetricTsp(CostMatrix c);
    const CostMatrix& cost() const { return c_; }
    std::size_t n() const { return c_.size(); }

private:
    CostMatrix c_;
};

struct TspTour {
    std::vector<std::size_t> tour;  // 1-based, starts at 1
    Rational length = 0;
};

Rational tour_length(const CostMatrix& c, const std::vector<std::size_t>& tour);
// Held-Karp; LimitError past 16 cities.
TspTour tsp_optimum(const CostMatrix& c);

// Minimum spanning tree, shortcut walk of the doubled tree.
TspTour tsp_double_tree(const CostMatrix& c);
TspTour tsp_double_tree(const MetricTsp& inst);

// Pairs (a, b) of entries of `vertices`, a < b.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Rational weight = 0;
};
// Subset DP over vertex masks. Even count <= 20.
Matching min_perfect_matching_exact(const std::vector<std::size_t>& vertices, const CostMatrix& c);

// Tree plus matching on odd vertices, Euler walk, keep first occurrences.
TspTour tsp_christofides(const CostMatrix& c);
TspTour tsp_christofides(const MetricTsp& inst);

// 1 on edges of g, (1 + eps)|V| + 1 elsewhere.
CostMatrix tsp_gap_instance(const Graph& g, const Rational& eps);

// L1 distances between the points.
CostMatrix l1_distance_matrix(const std::vector<std::pair<std::int64_t, std::int64_t>>& points);

// ---- max cut --------------------------------------------------------------

struct CutResult {
    std::vector<bool> side;  // side[v-1]: v in V'
    std::size_t cut = 0;
    std::size_t moves = 0;
};

// Start from V' empty; scan vertices ascending and take the first move
// that grows the cut, restarting the scan after each move.
CutResult max_cut_local_search(const Graph& g);
std::size_t cut_size(const Graph& g, const std::vector<bool>& side);
// Exhaustive; LimitError past 24 vertices.
std::size_t max_cut_optimum(const Graph& g);

// ---- knapsack -------------------------------------------------------------

struct FptasResult {
    std::vector<std::size_t> set;  // 1-based
    std::int64_t value = 0;
    std::int64_t volume = 0;
    int b = 0;                      // truncated bits
};

// Largest b >= 0 with 2^b <= c0 eps / (n (1 + eps)).
int fptas_shift(std::int64_t c0, std::size_t n, const Rational& eps);
// Items heavier than the capacity are dropped first; c0 is the largest
// remaining value. Values are truncated to multiples of 2^b and the
// truncated instance is solved exactly.
FptasResult knapsack_fptas(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v,
                           std::int64_t capacity, const Rational& eps);

// ---- bin packing ----------------------------------------------------------

struct Packing {
    std::vector<std::size_t> bin;     // bin[i]: 1-based bin of item i
    std::vector<Rational> load;       // per bin
    std::size_t bins() const { return load.size(); }
};

Packing bin_pack_first_fit(const std::vector<Rational>& sizes);
// Exhaustive; LimitError past 12 items.
std::size_t bin_pack_optimum(const std::vector<Rational>& sizes);

}  // namespace combinlab
