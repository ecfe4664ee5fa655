#include <doctest.h>

#include "combinlab/search_games.hpp"

using namespace combinlab;

namespace {

// Rises 2, 4, .. to the peak, then falls on odd values.
std::vector<std::int64_t> bitonic(std::size_t n, std::size_t peak) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 1; i <= n; ++i)
        v[i - 1] = i <= peak ? 2 * std::int64_t(i) : 2 * std::int64_t(peak) - 2 * std::int64_t(i - peak) + 1;
    return v;
}

std::vector<std::vector<bool>> majority_worlds(std::size_t n) {
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<bool> h(n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) k += (h[i] = (mask >> i) & 1);
        if (2 * k > n) out.push_back(h);
    }
    return out;
}

}  // namespace

TEST_CASE("radioactive ball") {
    RadioactiveWorld one(1, 1);
    CHECK(find_radioactive(1, one) == 1);
    CHECK(one.count() == 0);

    std::uint64_t worst = 0;
    for (std::size_t hot = 1; hot <= 4; ++hot) {
        RadioactiveWorld w(4, hot);
        CHECK(find_radioactive(4, w) == hot);
        worst = std::max(worst, w.count());
    }
    CHECK(worst == 2);

    for (std::size_t n = 1; n <= 100; ++n)
        for (std::size_t hot = 1; hot <= n; ++hot) {
            RadioactiveWorld w(n, hot);
            REQUIRE(find_radioactive(n, w) == hot);
            REQUIRE(w.count() <= std::uint64_t(ceil_log2(n)));
        }
}

TEST_CASE("counterfeit coin over every world") {
    CHECK(coin_k(1) == 1);
    CHECK(coin_k(2) == 4);
    CHECK(coin_k(3) == 13);
    for (std::size_t n = 1; n <= 40; ++n) {
        CAPTURE(n);
        std::uint64_t worst = 0;
        for (std::size_t c = 0; c <= n; ++c)
            for (bool heavy : {true, false}) {
                if (c == 0 && !heavy) continue;
                CoinWorld w(n, c, heavy);
                CoinVerdict v = find_counterfeit(n, w);
                if (c == 0) {
                    REQUIRE(v.kind == CoinVerdict::Kind::AllGenuine);
                } else {
                    REQUIRE(v.kind == CoinVerdict::Kind::Counterfeit);
                    REQUIRE(v.index == c);
                    REQUIRE(v.heavier == heavy);
                }
                REQUIRE(w.count() <= std::uint64_t(counterfeit_bound(n)));
                worst = std::max(worst, w.count());
            }
        for (int l = 1; l <= 3; ++l)
            if (n == coin_k(l)) CHECK(worst == std::uint64_t(l));
    }
    CHECK(counterfeit_bound(1) == 1);
    CHECK(counterfeit_bound(4) == 2);
    CHECK(counterfeit_bound(13) == 3);
}

TEST_CASE("fibonacci table") {
    auto t = fib_table(30);
    CHECK(t[0] == 1);
    CHECK(t[1] == 1);
    for (int k = 2; k <= 30; ++k) CHECK(t[k] == t[k - 1] + t[k - 2]);
    CHECK(fib_lambda(4) == fib(5) - 1);
    CHECK(fib_index(5) == 4);
    CHECK(fib_index(7) == 4);
    CHECK(fib_index(8) == 5);
}

TEST_CASE("bitonic peak") {
    SequenceProbe one({9});
    CHECK(bitonic_max(1, one).index == 1);
    CHECK(one.count() == 1);

    SequenceProbe seven({1, 3, 5, 7, 6, 4, 2});
    auto r = bitonic_max(7, seven);
    CHECK(r.index == 4);
    CHECK(r.value == 7);
    CHECK(seven.count() <= 4);

    std::uint64_t worst5 = 0;
    for (std::size_t p = 1; p <= 5; ++p) {
        SequenceProbe s(bitonic(5, p));
        CHECK(bitonic_max(5, s).index == p);
        worst5 = std::max(worst5, s.count());
    }
    CHECK(worst5 == 4);

    for (std::size_t n = 1; n <= 60; ++n)
        for (std::size_t p = 1; p <= n; ++p) {
            SequenceProbe s(bitonic(n, p));
            auto res = bitonic_max(n, s);
            REQUIRE(res.index == p);
            if (n >= 3) REQUIRE(s.count() <= std::uint64_t(fib_index(n)));
            auto seen = s.probed();
            std::sort(seen.begin(), seen.end());
            REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        }
}

TEST_CASE("bitonic rejects a flat sequence") {
    SequenceProbe s({4, 4, 4, 4, 4, 4, 4});
    CHECK_THROWS_AS(bitonic_max(7, s), InputError);
}

TEST_CASE("set equality by scanning") {
    TruthfulEquality disjoint({1}, {2});
    CHECK_FALSE(sets_equal(1, disjoint));
    CHECK(disjoint.count() == 1);

    TruthfulEquality same({1, 2, 3, 4}, {1, 2, 3, 4});
    CHECK(sets_equal(4, same));
    CHECK(same.count() <= 10);

    auto adv = adversary_set_equality(3);
    CHECK(sets_equal(3, adv));
    CHECK(adv.count() == 6);

    TruthfulEquality differ({1, 2, 3}, {3, 2, 5});
    CHECK_FALSE(sets_equal(3, differ));
}

TEST_CASE("who is who in every majority world") {
    CHECK(whoiswho_bound(3) == 3);
    CHECK(whoiswho_bound(4) == 5);
    CHECK(whoiswho_bound(5) == 6);
    for (std::size_t n = 3; n <= 12; ++n) {
        CAPTURE(n);
        for (const auto& h : majority_worlds(n))
            for (auto policy : {LiarPolicy::AlwaysLie, LiarPolicy::AlwaysTruth, LiarPolicy::AlwaysYes,
                                LiarPolicy::AlwaysNo, LiarPolicy::Random}) {
                GroupWorld w(h, policy, n * 1000 + 7);
                auto labels = classify_group(n, w);
                REQUIRE(labels == h);
                REQUIRE(w.count() <= whoiswho_bound(n));
                std::size_t honest = std::count(labels.begin(), labels.end(), true);
                REQUIRE(2 * honest > n);
            }
    }
}

TEST_CASE("who is who small cases") {
    GroupWorld all3({true, true, true}, LiarPolicy::AlwaysLie);
    CHECK(classify_group(3, all3) == std::vector<bool>{true, true, true});
    CHECK(all3.count() <= 3);

    GroupWorld five({true, false, true, false, true}, LiarPolicy::AlwaysLie);
    CHECK(classify_group(5, five) == std::vector<bool>{true, false, true, false, true});
    CHECK(five.count() <= 6);
}
