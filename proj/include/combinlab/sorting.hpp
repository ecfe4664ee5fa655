#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "combinlab/oracles.hpp"

namespace combinlab {

using Ids = std::vector<std::size_t>;

// Inserts x into the ascending run with exactly ceil(log2(run.size()+1))
// comparisons, whatever the data.
Ids binary_insert(Ids run, std::size_t x, ComparisonOracle& cmp);

// All functions below sort element ids ascending. The overloads without an
// id list sort 0..cmp.size()-1.
Ids insertion_sort(Ids items, ComparisonOracle& cmp);
Ids insertion_sort(ComparisonOracle& cmp);

Ids merge_runs(const Ids& x, const Ids& y, ComparisonOracle& cmp);

// Merge schedule of the grouped mergesort for n elements: leaves are input
// positions, blocks follow the binary expansion of n, then the two shortest
// runs are merged until one is left.
struct MergePlan {
    struct Node {
        int left = -1;
        int right = -1;
        std::size_t position = 0;  // leaves only
        std::size_t size = 1;
    };
    std::vector<Node> nodes;
    int root = -1;
};
MergePlan merge_plan(std::size_t n);

Ids merge_sort_grouped(Ids items, ComparisonOracle& cmp);
Ids merge_sort_grouped(ComparisonOracle& cmp);

// Keys 1..n arranged so that every merge of the plan costs m + n - 1.
std::vector<std::int64_t> merge_sort_worst_input(std::size_t n);

Ids merge_insertion_sort(Ids items, ComparisonOracle& cmp);
Ids merge_insertion_sort(ComparisonOracle& cmp);

// t_k = (2^{k+1} + (-1)^k) / 3.
std::uint64_t fj_batch(int k);

// A_n = n*ceil(log2 n) - 2^ceil(log2 n) + 1.
std::uint64_t insertion_count(std::uint64_t n);
// Worst case of merge_sort_grouped from the binary expansion of n.
std::uint64_t merge_sort_count(std::uint64_t n);
// F(n) = sum_{k=2}^{n} ceil(log2(3k/4)).
std::uint64_t ford_johnson_count(std::uint64_t n);

struct SortBudget {
    std::uint64_t n = 0;
    std::uint64_t a_n = 0;
    std::uint64_t b_n = 0;
    std::uint64_t f_n = 0;
    std::uint64_t info_lower = 0;
};
SortBudget sort_budgets(std::uint64_t n);

enum class SortAlgo { Insertion, MergeGrouped, MergeInsertion };
SortAlgo parse_sort_algo(const std::string& name);
std::string to_string(SortAlgo algo);

struct KeySortResult {
    std::vector<std::int64_t> sorted;
    std::uint64_t comparisons = 0;
};
KeySortResult sort_keys(SortAlgo algo, const std::vector<std::int64_t>& keys, bool tie_break = false);

}  // namespace combinlab
