#include "combinlab/common.hpp"

#include <cctype>

namespace combinlab {

int ceil_log2(std::uint64_t n) {
    if (n == 0) throw InputError("ceil_log2 of zero");
    int c = 0;
    std::uint64_t p = 1;
    while (p < n) {
        p <<= 1;
        ++c;
    }
    return c;
}

int floor_log2(std::uint64_t n) {
    if (n == 0) throw InputError("floor_log2 of zero");
    int c = 0;
    while (n > 1) {
        n >>= 1;
        ++c;
    }
    return c;
}

int ceil_log3(std::uint64_t n) {
    if (n == 0) throw InputError("ceil_log3 of zero");
    int c = 0;
    std::uint64_t p = 1;
    while (p < n) {
        p *= 3;
        ++c;
    }
    return c;
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

std::uint64_t pow3(int e) {
    std::uint64_t p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return p;
}

int ceil_log2(const BigInt& x) {
    if (x <= 0) throw InputError("ceil_log2 of non-positive value");
    int c = 0;
    BigInt p = 1;
    while (p < x) {
        p <<= 1;
        ++c;
    }
    return c;
}

int ceil_log2_factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return ceil_log2(f);
}

Rational harmonic(int n) {
    Rational h = 0;
    for (int k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw InputError("bad number: '" + text + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw InputError("bad number: '" + text + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigInt p = parse_int(text.substr(0, slash));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0) throw InputError("zero denominator: '" + text + "'");
    return Rational(p, q);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {
std::uint64_t splitmix(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

// xoshiro256** seeded through splitmix64.
Rng::Rng(std::uint64_t seed) {
    for (auto& s : state_) s = splitmix(seed);
}

std::uint64_t Rng::next() {
    std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InputError("Rng::range with hi < lo");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

bool Rng::coin() { return (next() >> 63) != 0; }

std::vector<std::int64_t> random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i + 1);
    rng.shuffle(v);
    return v;
}

}  // namespace combinlab
