#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "combinlab/approx.hpp"
#include "combinlab/common.hpp"
#include "combinlab/complexity.hpp"
#include "combinlab/graph.hpp"

namespace combinlab {

// Each pair becomes an edge with probability num/den.
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng);
// Integer weights drawn uniformly from [wmin, wmax].
Graph random_weighted_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::int64_t wmin, std::int64_t wmax,
                            Rng& rng);
Graph random_connected_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::int64_t wmin, std::int64_t wmax,
                             Rng& rng);
Digraph random_digraph(std::size_t n, std::uint64_t num, std::uint64_t den, std::int64_t wmin, std::int64_t wmax,
                       Rng& rng);

std::vector<std::pair<std::int64_t, std::int64_t>> random_points(std::size_t n, std::int64_t range, Rng& rng);
// L1 distances of random integer points in [0, range]^2.
CostMatrix random_metric_tsp(std::size_t n, std::int64_t range, Rng& rng);

// Clause widths uniform in [1, max_width]; literals drawn independently.
CnfFormula random_cnf(std::size_t n, std::size_t r, std::size_t max_width, Rng& rng);

// Every element lands in at least one set.
SetSystem random_set_system(std::size_t n, std::size_t m, Rng& rng);

struct KnapsackInstance {
    std::vector<std::int64_t> values;
    std::vector<std::int64_t> volumes;
    std::int64_t capacity = 0;
};
KnapsackInstance random_knapsack(std::size_t n, std::int64_t max_value, std::int64_t max_volume, Rng& rng);

// Sizes k/den with k uniform in [1, den].
std::vector<Rational> random_bin_sizes(std::size_t n, std::int64_t den, Rng& rng);

}  // namespace combinlab
