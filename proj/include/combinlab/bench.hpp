#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combinlab/io.hpp"

namespace combinlab {

struct BenchOptions {
    std::string suite;
    std::uint64_t lo = 0;  // 0 picks the suite default
    std::uint64_t hi = 0;
    std::uint64_t seed = 1;
    std::size_t trials = 0;  // 0 picks the suite default
};

// Rows are emitted in key order; each row is an object keyed by `keys`.
struct BenchTable {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<std::string> keys;
    std::vector<std::string> headers;  // human column titles, same order as keys
    std::vector<Json> rows;
    std::size_t violations = 0;  // rows where a measured count beats its bound or a ratio check fails
};

// sorting, insertion, mergesort, tournament, select, search, approx, counterexample.
const std::vector<std::string>& bench_suites();

BenchTable run_bench(const BenchOptions& opt);
Json to_json(const BenchTable& t);
std::string to_text(const BenchTable& t);

// Parses "a..b" or a single "a".
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

// Seed of the i-th instance of a stream.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t i);

// ratio is heur/opt for minimisation and opt/heur for maximisation. optimal
// and ratio stay empty without an oracle run; ratio also stays empty when the
// heuristic scores 0 against a positive optimum.
struct ApproxReport {
    std::string algorithm;
    std::size_t n = 0;
    Rational heuristic = 0;
    std::optional<Rational> optimal;
    std::optional<Rational> ratio;
    std::optional<Rational> bound;  // none for heuristics without a guarantee
    std::uint64_t seed = 0;
    Json solution;

    bool within_bound() const;
};
Json to_json(const ApproxReport& r);

// Algorithms: vc-matching, vc-greedy, maxcut (graph); setcover (set system);
// double-tree, christofides (cost matrix); fptas (knapsack, eps); firstfit (sizes).
ApproxReport approx_vertex_cover(const Graph& g, bool greedy, bool oracle);
ApproxReport approx_set_cover(const SetSystem& s, bool oracle);
ApproxReport approx_max_cut(const Graph& g, bool oracle);
ApproxReport approx_tsp(const CostMatrix& c, bool christofides, bool oracle);
ApproxReport approx_knapsack(const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& volumes,
                             std::int64_t capacity, const Rational& eps, bool oracle);
ApproxReport approx_first_fit(const std::vector<Rational>& sizes, bool oracle);

}  // namespace combinlab
