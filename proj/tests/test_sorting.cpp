#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "combinlab/sorting.hpp"

using namespace combinlab;

namespace {

std::vector<std::int64_t> keys_of(const Ids& ids, const std::vector<std::int64_t>& keys) {
    std::vector<std::int64_t> out;
    for (auto i : ids) out.push_back(keys[i]);
    return out;
}

}  // namespace

TEST_CASE("binary insertion spends the full tree depth") {
    for (std::size_t k = 1; k <= 40; ++k)
        for (std::size_t pos = 0; pos < k; ++pos) {
            // run holds k-1 even keys, x lands in slot pos
            std::vector<std::int64_t> keys;
            for (std::size_t i = 0; i + 1 < k; ++i) keys.push_back(2 * std::int64_t(i) + 2);
            keys.push_back(2 * std::int64_t(pos) + 1);
            CountingComparator c(keys);
            Ids run(k - 1);
            std::iota(run.begin(), run.end(), 0);
            Ids out = binary_insert(run, k - 1, c);
            REQUIRE(c.count() == std::uint64_t(ceil_log2(k)));
            auto sorted = keys_of(out, keys);
            REQUIRE(std::is_sorted(sorted.begin(), sorted.end()));
        }
}

TEST_CASE("closed forms") {
    CHECK(insertion_count(1) == 0);
    CHECK(insertion_count(4) == 5);
    CHECK(insertion_count(10) == 25);
    CHECK(merge_sort_count(1) == 0);
    CHECK(merge_sort_count(8) == 17);
    CHECK(ford_johnson_count(5) == 7);
    CHECK(ford_johnson_count(10) == 22);
    CHECK(fj_batch(2) == 3);
    CHECK(fj_batch(3) == 5);
    CHECK(fj_batch(4) == 11);
    for (int k = 1; k <= 30; ++k) CHECK(fj_batch(k) + fj_batch(k - 1) == pow2(k));
    auto b3 = sort_budgets(3);
    CHECK(b3.info_lower == 3);
    auto b5 = sort_budgets(5);
    CHECK(b5.info_lower == 7);
    CHECK(b5.f_n == 7);
    auto b1 = sort_budgets(1);
    CHECK(b1.info_lower == 0);
    CHECK(b1.a_n == 0);
    CHECK(b1.b_n == 0);
    CHECK(b1.f_n == 0);
    for (std::uint64_t n = 1; n <= 64; ++n) {
        auto b = sort_budgets(n);
        CHECK(b.info_lower <= b.f_n);
        CHECK(b.f_n <= b.a_n);
    }
}

TEST_CASE("grouped mergesort count for n = 10") {
    // Source formula gives 25; the adversarial input below forces 27.
    CHECK(merge_sort_count(10) == 27);
    auto keys = merge_sort_worst_input(10);
    CountingComparator c(keys);
    merge_sort_grouped(c);
    CHECK(c.count() == 27);
}

TEST_CASE("merge") {
    auto c = counting_comparator({1, 2});
    CHECK(merge_runs({0}, {1}, c) == Ids{0, 1});
    CHECK(c.count() == 1);

    auto adv = adversary_merge(4, 4);
    merge_runs({adv.a(1), adv.a(2), adv.a(3), adv.a(4)}, {adv.b(1), adv.b(2), adv.b(3), adv.b(4)}, adv);
    CHECK(adv.count() == 7);

    std::uint64_t worst = 0;
    for (std::int64_t x = 0; x <= 8; ++x) {
        std::vector<std::int64_t> keys{2 * x + 1, 2, 4, 6, 8, 10, 12, 14};
        CountingComparator cc(keys);
        merge_runs({0}, {1, 2, 3, 4, 5, 6, 7}, cc);
        worst = std::max(worst, cc.count());
    }
    CHECK(worst <= 7);
    CHECK(worst > std::uint64_t(ceil_log2(8)));
}

TEST_CASE("insertion sort count is input independent") {
    Rng rng(4);
    for (std::size_t n = 1; n <= 200; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            auto keys = random_permutation(rng, n);
            CountingComparator c(keys);
            auto out = keys_of(insertion_sort(c), keys);
            REQUIRE(std::is_sorted(out.begin(), out.end()));
            REQUIRE(c.count() == insertion_count(n));
        }
    }
}

TEST_CASE("small sorts") {
    auto one = counting_comparator({7});
    CHECK(insertion_sort(one) == Ids{0});
    CHECK(one.count() == 0);
    auto one2 = counting_comparator({7});
    CHECK(merge_sort_grouped(one2) == Ids{0});
    CHECK(one2.count() == 0);
}

TEST_CASE("exhaustive permutations up to n = 10") {
    for (std::size_t n = 1; n <= 10; ++n) {
        CAPTURE(n);
        std::vector<std::int64_t> keys(n);
        std::iota(keys.begin(), keys.end(), 1);
        std::uint64_t worst_fj = 0, worst_ms = 0;
        do {
            CountingComparator c(keys);
            auto out = keys_of(merge_insertion_sort(c), keys);
            REQUIRE(std::is_sorted(out.begin(), out.end()));
            REQUIRE(c.count() <= ford_johnson_count(n));
            worst_fj = std::max(worst_fj, c.count());
            if (n <= 8) {
                CountingComparator m(keys);
                auto o2 = keys_of(merge_sort_grouped(m), keys);
                REQUIRE(std::is_sorted(o2.begin(), o2.end()));
                REQUIRE(m.count() <= merge_sort_count(n));
                worst_ms = std::max(worst_ms, m.count());
            }
        } while (std::next_permutation(keys.begin(), keys.end()));
        CHECK(worst_fj == ford_johnson_count(n));
        if (n <= 8) CHECK(worst_ms == merge_sort_count(n));
    }
}

TEST_CASE("worst mergesort input hits the count") {
    for (std::size_t n = 1; n <= 300; ++n) {
        auto keys = merge_sort_worst_input(n);
        CountingComparator c(keys);
        auto out = keys_of(merge_sort_grouped(c), keys);
        REQUIRE(std::is_sorted(out.begin(), out.end()));
        REQUIRE(c.count() == merge_sort_count(n));
    }
}

TEST_CASE("all sorts agree with std::sort") {
    Rng rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t n = 1 + rng.below(256);
        std::vector<std::int64_t> keys(n);
        for (auto& k : keys) k = rng.range(-50, 50);
        auto ref = keys;
        std::sort(ref.begin(), ref.end());
        for (auto algo : {SortAlgo::Insertion, SortAlgo::MergeGrouped, SortAlgo::MergeInsertion}) {
            auto r = sort_keys(algo, keys, true);
            REQUIRE(r.sorted == ref);
        }
    }
}

TEST_CASE("merge insertion on larger random inputs") {
    Rng rng(8);
    for (std::size_t n = 11; n <= 500; n += 7) {
        auto keys = random_permutation(rng, n);
        CountingComparator c(keys);
        auto out = keys_of(merge_insertion_sort(c), keys);
        REQUIRE(std::is_sorted(out.begin(), out.end()));
        REQUIRE(c.count() <= ford_johnson_count(n));
    }
}

TEST_CASE("duplicates need a tie break") {
    CHECK_THROWS_AS(sort_keys(SortAlgo::Insertion, {3, 3}), InputError);
    CHECK(sort_keys(SortAlgo::MergeInsertion, {3, 1, 3}, true).sorted == std::vector<std::int64_t>{1, 3, 3});
    CHECK(parse_sort_algo(to_string(SortAlgo::MergeGrouped)) == SortAlgo::MergeGrouped);
}
