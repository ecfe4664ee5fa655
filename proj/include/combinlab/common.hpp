#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace combinlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base for every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class InputError : public Error {
public:
    using Error::Error;
};

// Instance exceeds a configured size cap (brute-force oracles, exact matching).
class LimitError : public Error {
public:
    using Error::Error;
};

// Smallest c with 2^c >= n. n must be >= 1.
int ceil_log2(std::uint64_t n);
// Largest c with 2^c <= n. n must be >= 1.
int floor_log2(std::uint64_t n);
// Smallest c with 3^c >= n. n must be >= 1.
int ceil_log3(std::uint64_t n);
std::uint64_t pow2(int e);
std::uint64_t pow3(int e);

// ceil(log2(n!)) computed exactly with big integers.
int ceil_log2_factorial(int n);
// ceil(log2(x)) for a big integer x >= 1.
int ceil_log2(const BigInt& x);

// Harmonic number H(n) as an exact rational.
Rational harmonic(int n);

std::string to_string(const Rational& r);
// Accepts "p", "-p" and "p/q".
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

// Deterministic generator. Uniform draws are done by rejection so the
// stream does not depend on the standard library's distribution classes.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi);
    bool coin();
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
};

std::vector<std::int64_t> random_permutation(Rng& rng, std::size_t n);

}  // namespace combinlab
