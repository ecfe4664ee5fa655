#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "combinlab/sorting.hpp"

namespace combinlab {

// Knockout bracket. Entrants are paired in order; an odd round gives the last
// entrant a bye. beaten[v] lists v's victims by round; lost_round[v] is 0 for
// the champion and for ids that did not take part.
struct KnockoutTree {
    std::size_t champion = 0;
    std::vector<Ids> beaten;
    std::vector<int> lost_round;
    std::vector<Ids> rounds;  // entrants of each round
    std::uint64_t matches = 0;
};

KnockoutTree knockout(const Ids& entrants, ComparisonOracle& cmp);

struct MaxResult {
    std::size_t index = 0;
    KnockoutTree tree;
};
MaxResult tournament_max(ComparisonOracle& cmp);

// (argmax, argmin) with at most ceil(3n/2) - 2 comparisons.
std::pair<std::size_t, std::size_t> max_and_min(ComparisonOracle& cmp);
std::pair<std::size_t, std::size_t> top_two(ComparisonOracle& cmp);
std::array<std::size_t, 3> top_three(ComparisonOracle& cmp);

// t-th largest (t = 1 is the maximum).
std::size_t select_t_tournament(std::size_t t, ComparisonOracle& cmp);
std::size_t select_t_linear(std::size_t t, ComparisonOracle& cmp);

std::uint64_t max_and_min_bound(std::uint64_t n);
std::uint64_t top_two_bound(std::uint64_t n);
std::uint64_t top_three_bound(std::uint64_t n);
// n - t + (t-1) * ceil(log2(n + 2 - t)).
std::uint64_t select_tournament_bound(std::uint64_t n, std::uint64_t t);
// 15n - 163, meaningful for n > 32.
std::int64_t select_linear_bound(std::int64_t n);

}  // namespace combinlab
