#include "combinlab/sorting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace combinlab {

namespace {

Ids all_ids(const ComparisonOracle& cmp) {
    Ids ids(cmp.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return ids;
}

// Slot in 0..limit for x among run[0..limit), fixed-shape search over
// limit+1 slots.
std::size_t search_slot(const Ids& run, std::size_t limit, std::size_t x, ComparisonOracle& cmp) {
    std::size_t base = 0, size = limit + 1;
    while (size > 1) {
        std::size_t half = size / 2;
        if (cmp.greater(x, run[base + half - 1])) base += half;
        size -= half;
    }
    return base;
}

}  // namespace

Ids binary_insert(Ids run, std::size_t x, ComparisonOracle& cmp) {
    std::size_t slot = search_slot(run, run.size(), x, cmp);
    run.insert(run.begin() + static_cast<std::ptrdiff_t>(slot), x);
    return run;
}

Ids insertion_sort(Ids items, ComparisonOracle& cmp) {
    Ids run;
    run.reserve(items.size());
    for (std::size_t x : items) run = binary_insert(std::move(run), x, cmp);
    return run;
}

Ids insertion_sort(ComparisonOracle& cmp) { return insertion_sort(all_ids(cmp), cmp); }

Ids merge_runs(const Ids& x, const Ids& y, ComparisonOracle& cmp) {
    Ids out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (cmp.less(x[i], y[j]))
            out.push_back(x[i++]);
        else
            out.push_back(y[j++]);
    }
    out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
    out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
    return out;
}

MergePlan merge_plan(std::size_t n) {
    MergePlan plan;
    if (n == 0) return plan;
    auto leaf = [&](std::size_t pos) {
        MergePlan::Node node;
        node.position = pos;
        plan.nodes.push_back(node);
        return static_cast<int>(plan.nodes.size() - 1);
    };
    auto join = [&](int a, int b) {
        MergePlan::Node node;
        node.left = a;
        node.right = b;
        node.size = plan.nodes[a].size + plan.nodes[b].size;
        plan.nodes.push_back(node);
        return static_cast<int>(plan.nodes.size() - 1);
    };
    std::function<int(std::size_t, std::size_t)> balanced = [&](std::size_t start, std::size_t len) {
        if (len == 1) return leaf(start);
        int a = balanced(start, len / 2);
        int b = balanced(start + len / 2, len - len / 2);
        return join(a, b);
    };
    // Blocks of the binary expansion, largest first.
    std::vector<int> runs;
    std::size_t start = 0;
    for (int bit = 63; bit >= 0; --bit) {
        std::size_t len = std::size_t{1} << bit;
        if (n & len) {
            runs.push_back(balanced(start, len));
            start += len;
        }
    }
    while (runs.size() > 1) {
        // Two shortest runs; the earlier one wins ties.
        std::vector<std::size_t> order(runs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return plan.nodes[runs[a]].size < plan.nodes[runs[b]].size;
        });
        std::size_t p = std::min(order[0], order[1]), q = std::max(order[0], order[1]);
        int merged = join(runs[p], runs[q]);
        runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(q));
        runs[p] = merged;
    }
    plan.root = runs[0];
    return plan;
}

Ids merge_sort_grouped(Ids items, ComparisonOracle& cmp) {
    if (items.empty()) return items;
    MergePlan plan = merge_plan(items.size());
    std::function<Ids(int)> eval = [&](int id) -> Ids {
        const auto& node = plan.nodes[id];
        if (node.left < 0) return {items[node.position]};
        return merge_runs(eval(node.left), eval(node.right), cmp);
    };
    return eval(plan.root);
}

Ids merge_sort_grouped(ComparisonOracle& cmp) { return merge_sort_grouped(all_ids(cmp), cmp); }

std::vector<std::int64_t> merge_sort_worst_input(std::size_t n) {
    std::vector<std::int64_t> input(n);
    if (n == 0) return input;
    MergePlan plan = merge_plan(n);
    // Split values top-down so the two largest of every merge sit in different runs.
    std::function<void(int, std::vector<std::int64_t>)> assign = [&](int id, std::vector<std::int64_t> z) {
        const auto& node = plan.nodes[id];
        if (node.left < 0) {
            input[node.position] = z[0];
            return;
        }
        std::size_t m = plan.nodes[node.left].size;
        std::vector<std::int64_t> a(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m - 1));
        a.push_back(z.back());
        std::vector<std::int64_t> b(z.begin() + static_cast<std::ptrdiff_t>(m - 1), z.end() - 1);
        assign(node.left, std::move(a));
        assign(node.right, std::move(b));
    };
    std::vector<std::int64_t> values(n);
    std::iota(values.begin(), values.end(), std::int64_t{1});
    assign(plan.root, values);
    return input;
}

// ---------------------------------------------------------------------------

std::uint64_t fj_batch(int k) {
    std::uint64_t p = std::uint64_t{1} << (k + 1);
    return k % 2 == 0 ? (p + 1) / 3 : (p - 1) / 3;
}

Ids merge_insertion_sort(Ids items, ComparisonOracle& cmp) {
    std::size_t n = items.size();
    if (n <= 1) return items;
    std::size_t k = n / 2;
    std::unordered_map<std::size_t, std::size_t> partner;
    Ids winners;
    winners.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t x = items[2 * i], y = items[2 * i + 1];
        if (cmp.greater(x, y)) std::swap(x, y);
        winners.push_back(y);
        partner[y] = x;
    }
    Ids a = merge_insertion_sort(std::move(winners), cmp);
    // b[j] is the partner of a[j]; the unpaired element is b[k] when n is odd.
    Ids b(k);
    for (std::size_t j = 0; j < k; ++j) b[j] = partner[a[j]];
    bool odd = n % 2 == 1;
    std::size_t pending = odd ? k + 1 : k;  // b_1..b_pending in 1-based terms

    Ids chain;
    chain.reserve(n);
    chain.push_back(b[0]);
    chain.insert(chain.end(), a.begin(), a.end());

    auto b_at = [&](std::size_t j) { return j <= k ? b[j - 1] : items[n - 1]; };
    std::size_t done = 1;  // b_1 already placed
    for (int batch = 2; done < pending; ++batch) {
        std::size_t top = std::min<std::size_t>(fj_batch(batch), pending);
        for (std::size_t j = top; j > done; --j) {
            std::size_t x = b_at(j);
            std::size_t limit = chain.size();
            if (j <= k) limit = static_cast<std::size_t>(std::find(chain.begin(), chain.end(), a[j - 1]) - chain.begin());
            std::size_t slot = search_slot(chain, limit, x, cmp);
            chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(slot), x);
        }
        done = top;
    }
    return chain;
}

Ids merge_insertion_sort(ComparisonOracle& cmp) { return merge_insertion_sort(all_ids(cmp), cmp); }

// ---------------------------------------------------------------------------

std::uint64_t insertion_count(std::uint64_t n) {
    if (n == 0) return 0;
    int c = ceil_log2(n);
    return n * static_cast<std::uint64_t>(c) - pow2(c) + 1;
}

std::uint64_t merge_sort_count(std::uint64_t n) {
    if (n == 0) return 0;
    std::vector<std::uint64_t> runs;
    std::uint64_t total = 0;
    for (int bit = 63; bit >= 0; --bit) {
        std::uint64_t len = std::uint64_t{1} << bit;
        if (n & len) {
            total += static_cast<std::uint64_t>(bit) * len - len + 1;
            runs.push_back(len);
        }
    }
    while (runs.size() > 1) {
        std::sort(runs.begin(), runs.end());
        std::uint64_t merged = runs[0] + runs[1];
        total += merged - 1;
        runs.erase(runs.begin());
        runs[0] = merged;
    }
    return total;
}

std::uint64_t ford_johnson_count(std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t k = 2; k <= n; ++k) total += static_cast<std::uint64_t>(ceil_log2(3 * k) - 2);
    return total;
}

SortBudget sort_budgets(std::uint64_t n) {
    if (n < 1 || n > 10000) throw InputError("sort_budgets needs 1 <= n <= 10000");
    SortBudget s;
    s.n = n;
    s.a_n = insertion_count(n);
    s.b_n = merge_sort_count(n);
    s.f_n = ford_johnson_count(n);
    s.info_lower = static_cast<std::uint64_t>(ceil_log2_factorial(static_cast<int>(n)));
    return s;
}

SortAlgo parse_sort_algo(const std::string& name) {
    if (name == "insertion") return SortAlgo::Insertion;
    if (name == "mergesort" || name == "merge") return SortAlgo::MergeGrouped;
    if (name == "merge-insertion" || name == "ford-johnson" || name == "fj") return SortAlgo::MergeInsertion;
    throw InputError("unknown sort algorithm: " + name);
}

std::string to_string(SortAlgo algo) {
    switch (algo) {
        case SortAlgo::Insertion: return "insertion";
        case SortAlgo::MergeGrouped: return "mergesort";
        case SortAlgo::MergeInsertion: return "merge-insertion";
    }
    return "?";
}

KeySortResult sort_keys(SortAlgo algo, const std::vector<std::int64_t>& keys, bool tie_break) {
    CountingComparator cmp(keys, tie_break);
    Ids order;
    switch (algo) {
        case SortAlgo::Insertion: order = insertion_sort(cmp); break;
        case SortAlgo::MergeGrouped: order = merge_sort_grouped(cmp); break;
        case SortAlgo::MergeInsertion: order = merge_insertion_sort(cmp); break;
    }
    KeySortResult r;
    for (std::size_t id : order) r.sorted.push_back(keys[id]);
    r.comparisons = cmp.count();
    return r;
}

}  // namespace combinlab
