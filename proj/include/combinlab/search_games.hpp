#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "combinlab/oracles.hpp"

namespace combinlab {

struct CoinVerdict {
    enum class Kind { AllGenuine, Counterfeit };
    Kind kind = Kind::AllGenuine;
    std::size_t index = 0;  // 1..n when Counterfeit
    bool heavier = false;

    bool operator==(const CoinVerdict&) const = default;
};

// Returns the radioactive ball (1-based) with at most ceil(log2 n) tests.
std::size_t find_radioactive(std::size_t n, GroupTester& tester);

// K_j = (3^j - 1) / 2.
std::uint64_t coin_k(int j);
// ceil(log3(2n + 1)).
int counterfeit_bound(std::size_t n);
CoinVerdict find_counterfeit(std::size_t n, BalanceOracle& balance);

// Phi_0..Phi_K with Phi_0 = Phi_1 = 1.
std::vector<std::uint64_t> fib_table(int K);
std::uint64_t fib(int k);
// lambda_k = Phi_{k+1} - 1.
std::uint64_t fib_lambda(int k);
// The k with Phi_k <= n < Phi_{k+1}; n >= 1. Returns 1 for n = 1.
int fib_index(std::uint64_t n);

struct PeakResult {
    std::size_t index = 0;  // 1-based
    std::int64_t value = 0;
};

// Peak of a strictly bitonic sequence; never probes an index twice.
PeakResult bitonic_max(std::size_t n, ProbeOracle& probe);

// Scans B for each a_i and removes matched elements.
bool sets_equal(std::size_t n, EqualityOracle& probe);

// ceil(3(n-1)/2).
std::uint64_t whoiswho_bound(std::size_t n);

// Labels every member honest (true) or dishonest. Throws when the answers
// contradict every majority-honest world.
std::vector<bool> classify_group(std::size_t n, QuestionOracle& ask);

}  // namespace combinlab
