#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "combinlab/tournament.hpp"

using namespace combinlab;

namespace {

// Id holding the t-th largest key.
std::size_t rank_id(const std::vector<std::int64_t>& keys, std::size_t t) {
    std::vector<std::size_t> ids(keys.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](auto a, auto b) { return keys[a] > keys[b]; });
    return ids[t - 1];
}

std::vector<std::int64_t> shuffled(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_permutation(rng, n);
}

void check_all(const std::vector<std::int64_t>& keys) {
    std::size_t n = keys.size();
    std::uint64_t lg = ceil_log2(n);
    {
        CountingComparator c(keys);
        auto r = tournament_max(c);
        REQUIRE(r.index == rank_id(keys, 1));
        REQUIRE(c.count() == n - 1);
        REQUIRE(r.tree.beaten[r.index].size() <= lg);
    }
    if (n >= 2) {
        CountingComparator c(keys);
        auto [hi, lo] = max_and_min(c);
        REQUIRE(hi == rank_id(keys, 1));
        REQUIRE(lo == rank_id(keys, n));
        REQUIRE(c.count() <= max_and_min_bound(n));

        CountingComparator c2(keys);
        auto [a, b] = top_two(c2);
        REQUIRE(a == rank_id(keys, 1));
        REQUIRE(b == rank_id(keys, 2));
        REQUIRE(c2.count() <= top_two_bound(n));
    }
    if (n >= 3) {
        CountingComparator c(keys);
        auto t = top_three(c);
        for (std::size_t r = 0; r < 3; ++r) REQUIRE(t[r] == rank_id(keys, r + 1));
        REQUIRE(c.count() <= top_three_bound(n));
    }
    for (std::size_t t = 1; t <= n; ++t) {
        CountingComparator c(keys);
        REQUIRE(select_t_tournament(t, c) == rank_id(keys, t));
        REQUIRE(c.count() <= select_tournament_bound(n, t));
        CountingComparator c2(keys);
        REQUIRE(select_t_linear(t, c2) == rank_id(keys, t));
    }
}

}  // namespace

TEST_CASE("bound formulas") {
    CHECK(max_and_min_bound(2) == 1);
    CHECK(max_and_min_bound(8) == 10);
    CHECK(max_and_min_bound(7) == 9);
    CHECK(top_two_bound(2) == 1);
    CHECK(top_two_bound(8) == 9);
    CHECK(top_two_bound(6) == 7);
    CHECK(top_three_bound(3) == 4);
    CHECK(top_three_bound(8) == 11);
    CHECK(top_three_bound(16) == 21);
    CHECK(select_tournament_bound(10, 3) == 15);
    CHECK(select_tournament_bound(9, 1) == 8);
    CHECK(select_linear_bound(33) == 332);
}

TEST_CASE("knockout max") {
    auto one = counting_comparator({4});
    CHECK(tournament_max(one).index == 0);
    CHECK(one.count() == 0);

    auto keys = shuffled(8, 3);
    CountingComparator c(keys);
    auto r = tournament_max(c);
    CHECK(keys[r.index] == 8);
    CHECK(c.count() == 7);
    CHECK(r.tree.matches == 7);
    std::size_t losers = 0;
    for (std::size_t v = 0; v < 8; ++v)
        if (v != r.index) losers += r.tree.lost_round[v] > 0;
    CHECK(losers == 7);
}

TEST_CASE("n = 8 top three reaches its lower bound") {
    // n + ceil(log2(n(n-1))) - 3 = 11 for n = 8, which equals the upper bound.
    CHECK(8 + ceil_log2(std::uint64_t(56)) - 3 == 11);
    std::vector<std::int64_t> keys{1, 2, 3, 4, 5, 6, 7, 8};
    std::uint64_t worst = 0;
    do {
        CountingComparator c(keys);
        top_three(c);
        worst = std::max(worst, c.count());
    } while (std::next_permutation(keys.begin(), keys.end()));
    CHECK(worst == 11);
}

TEST_CASE("every permutation up to n = 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CAPTURE(n);
        std::vector<std::int64_t> keys(n);
        std::iota(keys.begin(), keys.end(), 1);
        do check_all(keys);
        while (std::next_permutation(keys.begin(), keys.end()));
    }
}

TEST_CASE("random inputs up to n = 512") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 9 + rng.below(504);
        CAPTURE(n);
        auto keys = random_permutation(rng, n);
        std::uint64_t lg = ceil_log2(n);
        CountingComparator c(keys);
        auto r = tournament_max(c);
        REQUIRE(r.index == rank_id(keys, 1));
        REQUIRE(c.count() == n - 1);
        CountingComparator c1(keys);
        auto [hi, lo] = max_and_min(c1);
        REQUIRE(hi == rank_id(keys, 1));
        REQUIRE(lo == rank_id(keys, n));
        REQUIRE(c1.count() <= max_and_min_bound(n));
        CountingComparator c2(keys);
        REQUIRE(top_two(c2).second == rank_id(keys, 2));
        REQUIRE(c2.count() <= n - 2 + lg);
        CountingComparator c3(keys);
        REQUIRE(top_three(c3)[2] == rank_id(keys, 3));
        REQUIRE(c3.count() <= n + 2 * lg - 3);
        std::size_t t = 1 + rng.below(n);
        CountingComparator c4(keys);
        REQUIRE(select_t_tournament(t, c4) == rank_id(keys, t));
        REQUIRE(c4.count() <= select_tournament_bound(n, t));
    }
}

TEST_CASE("linear selection") {
    auto seven = shuffled(7, 11);
    CountingComparator c7(seven);
    CHECK(select_t_linear(4, c7) == rank_id(seven, 4));
    CHECK(c7.count() <= 13);

    auto keys = shuffled(200, 5);
    CountingComparator c(keys);
    CHECK(keys[select_t_linear(100, c)] == 101);

    Rng rng(7);
    for (std::int64_t n = 33; n <= 2000; n += 1 + std::int64_t(rng.below(60))) {
        CAPTURE(n);
        auto k = random_permutation(rng, n);
        std::size_t t = 1 + rng.below(n);
        CountingComparator cc(k);
        REQUIRE(select_t_linear(t, cc) == rank_id(k, t));
        REQUIRE(std::int64_t(cc.count()) <= select_linear_bound(n));
    }
    for (std::size_t t = 1; t <= 33; ++t) {
        auto k = shuffled(33, t);
        CountingComparator cc(k);
        REQUIRE(select_t_linear(t, cc) == rank_id(k, t));
        REQUIRE(cc.count() <= 332);
    }
}

TEST_CASE("t out of range") {
    auto c = counting_comparator({1, 2, 3});
    CHECK_THROWS_AS(select_t_tournament(0, c), InputError);
    CHECK_THROWS_AS(select_t_linear(4, c), InputError);
}
