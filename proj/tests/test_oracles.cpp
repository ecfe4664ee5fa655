#include <doctest.h>

#include "combinlab/oracles.hpp"
#include "combinlab/search_games.hpp"
#include "combinlab/sorting.hpp"

using namespace combinlab;

TEST_CASE("counting comparator reads the key order") {
    auto cmp = counting_comparator({3, 1, 2});
    CHECK(cmp.compare(0, 1) == Order::Greater);
    CHECK(cmp.count() == 1);
    auto single = counting_comparator({5});
    CHECK(single.count() == 0);
}

TEST_CASE("equal keys need the tie break") {
    auto strict = counting_comparator({4, 4});
    CHECK_THROWS_AS(strict.compare(0, 1), InputError);
    auto loose = counting_comparator({4, 4}, true);
    CHECK(loose.compare(0, 1) == Order::Less);
    CHECK(loose.compare(1, 0) == Order::Greater);
}

TEST_CASE("merge adversary answers by index") {
    auto adv = adversary_merge(3, 3);
    CHECK(adv.compare(adv.a(1), adv.b(1)) == Order::Greater);
    CHECK(adv.compare(adv.a(1), adv.b(2)) == Order::Less);
    CHECK(adv.compare(adv.b(3), adv.a(2)) == Order::Greater);
}

TEST_CASE("merge adversary forces 2n - 1 and certifies") {
    for (std::size_t n = 1; n <= 64; ++n) {
        auto adv = adversary_merge(n, n);
        adv.set_recording(true);
        Ids x, y;
        for (std::size_t i = 1; i <= n; ++i) {
            x.push_back(adv.a(i));
            y.push_back(adv.b(i));
        }
        Ids out = merge_runs(x, y, adv);
        REQUIRE(adv.count() == 2 * n - 1);
        auto keys = adversary_certify(adv);
        CountingComparator replay(keys);
        replay.set_recording(true);
        Ids again = merge_runs(x, y, replay);
        CHECK(again == out);
        REQUIRE(replay.transcript().size() == adv.transcript().size());
        for (std::size_t q = 0; q < adv.transcript().size(); ++q) {
            CHECK(replay.transcript()[q].i == adv.transcript()[q].i);
            CHECK(replay.transcript()[q].j == adv.transcript()[q].j);
            CHECK(replay.transcript()[q].answer == adv.transcript()[q].answer);
        }
    }
}

TEST_CASE("fresh merge adversary certifies the interleaving") {
    auto adv = adversary_merge(2, 2);
    auto keys = adversary_certify(adv);
    // a1, a2, b1, b2 with b1 < a1 < b2 < a2
    CHECK(keys[2] < keys[0]);
    CHECK(keys[0] < keys[3]);
    CHECK(keys[3] < keys[1]);
}

TEST_CASE("set equality adversary") {
    auto one = adversary_set_equality(1);
    CHECK(one.equal(0, 0));

    auto two = adversary_set_equality(2);
    CHECK_FALSE(two.equal(0, 0));
    CHECK(two.count() == 1);
    two.equal(0, 0);
    CHECK(two.count() == 1);  // repeats are not recounted

    for (std::size_t n = 1; n <= 12; ++n) {
        auto adv = adversary_set_equality(n);
        bool eq = sets_equal(n, adv);
        CHECK(eq);
        REQUIRE(adv.count() == n * (n + 1) / 2);
        auto pair = adversary_certify(adv);
        TruthfulEquality replay(pair.a, pair.b);
        CHECK(sets_equal(n, replay) == eq);
        CHECK(replay.count() == adv.count());
        std::vector<std::int64_t> a = pair.a, b = pair.b;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("who-is-who adversary basics") {
    auto adv = adversary_whoiswho(5);
    CHECK(adv.first_phase_length() == 1);
    CHECK_FALSE(adv.ask(0, 1));
    CHECK_THROWS_AS(adv.ask(2, 2), InputError);
    CHECK_THROWS_AS(adversary_whoiswho(2), InputError);
}

TEST_CASE("who-is-who adversary against classify_group") {
    for (std::size_t n = 3; n <= 15; ++n) {
        CAPTURE(n);
        auto adv = adversary_whoiswho(n);
        auto labels = classify_group(n, adv);
        std::uint64_t asked = adv.count();
        CHECK(asked <= whoiswho_bound(n));
        // At even n the classifier never needs more than floor(3(n-1)/2),
        // so that is what the adversary can force; odd n gets the ceiling.
        CHECK(asked >= 3 * (n - 1) / 2);
        if (n % 2 == 1) CHECK(asked == whoiswho_bound(n));
        auto certified = adversary_certify(adv);
        CHECK(labels_consistent(certified, adv.transcript()));
        CHECK(certified == labels);
        auto world = GroupWorld::scripted(certified, adv.transcript());
        auto again = classify_group(n, world);
        CHECK(again == labels);
        CHECK(world.count() == asked);
    }
}

TEST_CASE("who-is-who adversary forces at least 3 and 9") {
    auto a3 = adversary_whoiswho(3);
    classify_group(3, a3);
    CHECK(a3.count() >= 3);
    auto a7 = adversary_whoiswho(7);
    classify_group(7, a7);
    CHECK(a7.count() >= 9);
}

TEST_CASE("certified who-is-who labels keep an honest majority") {
    auto adv = adversary_whoiswho(5);
    classify_group(5, adv);
    auto labels = adversary_certify(adv);
    std::size_t honest = std::count(labels.begin(), labels.end(), true);
    CHECK(2 * honest > labels.size());
}

TEST_CASE("query counters") {
    RadioactiveWorld w(8, 3);
    w.test({1, 2});
    w.test({3});
    CHECK(w.count() == 2);
    CoinWorld c(4, 2, true);
    CHECK(c.weigh({1}, {2}) == BalanceOutcome::Right);
    CHECK(c.weigh({2}, {0}) == BalanceOutcome::Left);
    CHECK(c.weigh({1}, {3}) == BalanceOutcome::Equal);
    CHECK(c.count() == 3);
    CHECK_THROWS_AS(c.weigh({1}, {1}), InputError);
}
