#include "combinlab/search_games.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace combinlab {

std::size_t find_radioactive(std::size_t n, GroupTester& tester) {
    if (n == 0) throw InputError("find_radioactive needs n >= 1");
    std::size_t lo = 1, hi = n;
    while (lo < hi) {
        std::size_t size = hi - lo + 1;
        std::size_t first = (size + 1) / 2;
        std::vector<std::size_t> half;
        for (std::size_t x = lo; x < lo + first; ++x) half.push_back(x);
        if (tester.test(half))
            hi = lo + first - 1;
        else
            lo = lo + first;
    }
    return lo;
}

std::uint64_t coin_k(int j) { return (pow3(j) - 1) / 2; }

int counterfeit_bound(std::size_t n) { return ceil_log3(2 * static_cast<std::uint64_t>(n) + 1); }

namespace {

class CoinSolver {
public:
    CoinSolver(std::size_t n, BalanceOracle& balance) : n_(n), balance_(balance), suspect_(n + 1, true) {
        suspect_[0] = false;
    }

    CoinVerdict unknown(std::vector<std::size_t> pool, int j) {
        if (pool.empty()) return {};
        if (j <= 0) throw Error("coin scheme ran out of weighings");
        std::size_t aside = std::min<std::size_t>(pool.size(), coin_k(j - 1));
        std::size_t s = pool.size() - aside;
        if (s == 0) return unknown(std::move(pool), j - 1);
        std::vector<std::size_t> rest(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(aside));
        std::vector<std::size_t> left(pool.begin() + static_cast<std::ptrdiff_t>(aside),
                                      pool.begin() + static_cast<std::ptrdiff_t>(aside + (s + 1) / 2));
        std::vector<std::size_t> right(pool.begin() + static_cast<std::ptrdiff_t>(aside + (s + 1) / 2), pool.end());
        std::vector<std::size_t> right_pan = right;
        if (left.size() != right.size()) right_pan.push_back(0);
        BalanceOutcome out = balance_.weigh(left, right_pan);
        if (out == BalanceOutcome::Equal) {
            mark_genuine(left);
            mark_genuine(right);
            return unknown(std::move(rest), j - 1);
        }
        mark_genuine(rest);
        if (out == BalanceOutcome::Left) return suspects(right, left, j - 1);
        return suspects(left, right, j - 1);
    }

    // The counterfeit is either light and in `light`, or heavy and in `heavy`.
    CoinVerdict suspects(std::vector<std::size_t> light, std::vector<std::size_t> heavy, int k) {
        std::size_t x = light.size(), y = heavy.size();
        if (x + y == 0) throw Error("inconsistent balance");
        if (x + y == 1) {
            CoinVerdict v;
            v.kind = CoinVerdict::Kind::Counterfeit;
            v.index = x == 1 ? light[0] : heavy[0];
            v.heavier = y == 1;
            return v;
        }
        if (k <= 0 || x + y > pow3(k)) throw Error("coin scheme ran out of weighings");
        std::size_t c = pow3(k - 1);
        auto plan = choose(x, y, c);
        if (!plan) throw Error("no admissible weighing");
        auto [ha, la, hb, lb] = *plan;
        // Bucket A: heavies left, lights right. Bucket B: lights left, heavies right.
        std::vector<std::size_t> HA(heavy.begin(), heavy.begin() + static_cast<std::ptrdiff_t>(ha));
        std::vector<std::size_t> HB(heavy.begin() + static_cast<std::ptrdiff_t>(ha),
                                    heavy.begin() + static_cast<std::ptrdiff_t>(ha + hb));
        std::vector<std::size_t> HC(heavy.begin() + static_cast<std::ptrdiff_t>(ha + hb), heavy.end());
        std::vector<std::size_t> LA(light.begin(), light.begin() + static_cast<std::ptrdiff_t>(la));
        std::vector<std::size_t> LB(light.begin() + static_cast<std::ptrdiff_t>(la),
                                    light.begin() + static_cast<std::ptrdiff_t>(la + lb));
        std::vector<std::size_t> LC(light.begin() + static_cast<std::ptrdiff_t>(la + lb), light.end());

        std::vector<std::size_t> left = HA, right = LA;
        left.insert(left.end(), LB.begin(), LB.end());
        right.insert(right.end(), HB.begin(), HB.end());
        std::vector<std::size_t> spare;
        for (std::size_t i = 0; i <= n_; ++i)
            if (!suspect_[i]) spare.push_back(i);
        std::size_t next = 0;
        while (left.size() < right.size()) left.push_back(spare.at(next++));
        while (right.size() < left.size()) right.push_back(spare.at(next++));

        BalanceOutcome out = balance_.weigh(left, right);
        if (out == BalanceOutcome::Left) {
            settle({&HB, &HC, &LB, &LC});
            return suspects(LA, HA, k - 1);
        }
        if (out == BalanceOutcome::Right) {
            settle({&HA, &HC, &LA, &LC});
            return suspects(LB, HB, k - 1);
        }
        settle({&HA, &HB, &LA, &LB});
        return suspects(LC, HC, k - 1);
    }

private:
    using Plan = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

    // Bucket sizes, each at most c, with the smallest pan imbalance the
    // known-genuine coins can pad. Symmetric splits come first.
    std::optional<Plan> choose(std::size_t x, std::size_t y, std::size_t c) const {
        std::size_t genuine = n_ + 1 - (x + y);
        for (std::size_t xp = 0; 2 * xp <= x; ++xp) {
            if (xp > c) break;
            std::size_t lo_sum = x + y > c ? (x + y - c + 1) / 2 : 0;
            std::size_t need = lo_sum > xp ? lo_sum - xp : 0;
            std::size_t yp = need;
            if (2 * yp <= y && xp + yp <= c) return Plan{yp, xp, yp, xp};
        }
        std::optional<Plan> best;
        std::size_t best_gap = 0;
        for (std::size_t ha = 0; ha <= std::min(y, c); ++ha)
            for (std::size_t la = 0; la <= std::min(x, c - ha); ++la)
                for (std::size_t hb = 0; hb <= std::min(y - ha, c); ++hb)
                    for (std::size_t lb = 0; lb <= std::min(x - la, c - hb); ++lb) {
                        if (x + y - ha - la - hb - lb > c) continue;
                        std::size_t l = ha + lb, r = la + hb;
                        std::size_t gap = l > r ? l - r : r - l;
                        if (gap > genuine) continue;
                        if (!best || gap < best_gap) {
                            best = Plan{ha, la, hb, lb};
                            best_gap = gap;
                        }
                    }
        return best;
    }

    void mark_genuine(const std::vector<std::size_t>& coins) {
        for (std::size_t c : coins) suspect_[c] = false;
    }
    void settle(std::initializer_list<const std::vector<std::size_t>*> groups) {
        for (const auto* g : groups) mark_genuine(*g);
    }

    std::size_t n_;
    BalanceOracle& balance_;
    std::vector<bool> suspect_;
};

}  // namespace

CoinVerdict find_counterfeit(std::size_t n, BalanceOracle& balance) {
    if (n == 0) throw InputError("find_counterfeit needs n >= 1");
    if (balance.coins() != n) throw InputError("balance oracle size mismatch");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i + 1;
    CoinSolver solver(n, balance);
    return solver.unknown(std::move(pool), counterfeit_bound(n));
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> fib_table(int K) {
    std::vector<std::uint64_t> phi(static_cast<std::size_t>(std::max(K, 1)) + 1, 1);
    for (int k = 2; k <= K; ++k) phi[k] = phi[k - 1] + phi[k - 2];
    phi.resize(static_cast<std::size_t>(K) + 1);
    return phi;
}

std::uint64_t fib(int k) {
    if (k < 0 || k > 90) throw InputError("fib index out of range");
    return fib_table(k)[k];
}

std::uint64_t fib_lambda(int k) { return fib(k + 1) - 1; }

int fib_index(std::uint64_t n) {
    if (n == 0) throw InputError("fib_index needs n >= 1");
    int k = 1;
    while (fib(k + 1) <= n) ++k;
    return k;
}

namespace {

// Value at a padded position. Positions past n rank below every real value
// and decrease with the index.
struct Key {
    bool real;
    std::int64_t value;
    std::size_t pos;
    bool operator>(const Key& o) const {
        if (real != o.real) return real;
        if (real) return value > o.value;
        return pos < o.pos;
    }
};

}  // namespace

PeakResult bitonic_max(std::size_t n, ProbeOracle& probe) {
    if (n == 0) throw InputError("bitonic_max needs n >= 1");
    if (probe.size() != n) throw InputError("probe oracle size mismatch");
    std::map<std::size_t, std::int64_t> seen;
    auto at = [&](std::size_t pos) -> Key {
        if (pos > n) return {false, 0, pos};
        auto it = seen.find(pos);
        if (it == seen.end()) it = seen.emplace(pos, probe.probe(pos)).first;
        return {true, it->second, pos};
    };

    std::size_t peak = 1;
    if (n <= 2) {
        for (std::size_t p = 1; p <= n; ++p) at(p);
        peak = (n == 2 && seen[2] > seen[1]) ? 2 : 1;
    } else {
        int k = fib_index(n);
        auto phi = fib_table(k + 1);
        // Window of length phi[p]-1; local t maps to start + dir*(t-1).
        std::size_t start = 1;
        int dir = 1;
        auto global = [&](std::uint64_t t) {
            return dir > 0 ? start + (t - 1) : start - (t - 1);
        };
        int p = k + 1;
        at(global(phi[p - 1]));
        while (p > 2) {
            Key probe_key = at(global(phi[p - 2]));
            Key known = at(global(phi[p - 1]));
            if (probe_key > known) {
                // Peak lies in 1..phi[p-1]-1; orientation kept.
            } else {
                std::size_t new_start = global(phi[p] - 1);
                start = new_start;
                dir = -dir;
            }
            --p;
        }
        peak = global(1);
    }

    // Probed values must be unimodal in index order.
    bool falling = false;
    std::optional<std::int64_t> prev;
    for (const auto& [pos, v] : seen) {
        if (prev) {
            if (v == *prev) throw InputError("not bitonic");
            if (v < *prev) falling = true;
            else if (falling) throw InputError("not bitonic");
        }
        prev = v;
    }
    if (peak > n || !seen.count(peak)) throw InputError("not bitonic");
    for (const auto& [pos, v] : seen)
        if (v > seen[peak]) throw InputError("not bitonic");
    return {peak, seen[peak]};
}

// ---------------------------------------------------------------------------

bool sets_equal(std::size_t n, EqualityOracle& probe) {
    if (probe.size() != n) throw InputError("equality oracle size mismatch");
    std::vector<std::size_t> rest(n);
    for (std::size_t j = 0; j < n; ++j) rest[j] = j;
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (probe.equal(i, rest[t])) {
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::uint64_t whoiswho_bound(std::size_t n) {
    if (n == 0) return 0;
    return (3 * (static_cast<std::uint64_t>(n) - 1) + 1) / 2;
}

namespace {

class GroupSolver {
public:
    explicit GroupSolver(QuestionOracle& ask) : ask_(ask) {}

    bool question(std::size_t i, std::size_t j) {
        bool a = ask_.ask(i, j);
        transcript_.push_back({i, j, a});
        return a;
    }

    // Requires a strict honest majority inside s.
    void solve(const std::vector<std::size_t>& s, std::vector<bool>& label) {
        std::size_t m = s.size();
        if (m <= 2) {
            for (std::size_t v : s) label[v] = true;
            return;
        }
        std::size_t t = (m - 1) / 2;
        std::size_t cand = s[0];
        std::vector<std::size_t> yes, no;
        std::size_t next = 1;
        while (no.size() <= yes.size() && yes.size() < t) {
            std::size_t v = s[next++];
            (question(v, cand) ? yes : no).push_back(v);
        }
        if (yes.size() == t) {
            label[cand] = true;
            for (std::size_t v : no) label[v] = false;
            for (std::size_t v : s) {
                if (v == cand || std::find(no.begin(), no.end(), v) != no.end()) continue;
                label[v] = question(cand, v);
            }
            return;
        }
        // no = j + 1, yes = j: at least j + 1 of these 2j + 2 are dishonest.
        std::vector<std::size_t> rest(s.begin() + static_cast<std::ptrdiff_t>(next), s.end());
        std::size_t j = yes.size();
        if (j + 1 == t) {
            for (std::size_t v : rest) label[v] = true;
        } else {
            solve(rest, label);
        }
        auto pick = std::find_if(rest.begin(), rest.end(), [&](std::size_t v) { return label[v]; });
        if (pick == rest.end()) throw Error("inconsistent answers");
        std::size_t r = *pick;
        bool cand_honest = question(r, cand);
        label[cand] = cand_honest;
        if (cand_honest) {
            for (std::size_t v : no) label[v] = false;
            for (std::size_t v : yes) label[v] = question(r, v);
        } else {
            for (std::size_t v : yes) label[v] = false;
            for (std::size_t v : no) label[v] = question(r, v);
        }
    }

    const std::vector<QuestionRecord>& transcript() const { return transcript_; }

private:
    QuestionOracle& ask_;
    std::vector<QuestionRecord> transcript_;
};

}  // namespace

std::vector<bool> classify_group(std::size_t n, QuestionOracle& ask) {
    if (n < 3) throw InputError("classify_group needs n >= 3");
    if (ask.size() != n) throw InputError("question oracle size mismatch");
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    std::vector<bool> label(n, false);
    GroupSolver solver(ask);
    solver.solve(all, label);
    if (!labels_consistent(label, solver.transcript())) throw Error("inconsistent answers");
    return label;
}

}  // namespace combinlab
