#include "combinlab/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace combinlab {

Order ComparisonOracle::compare(std::size_t i, std::size_t j) {
    if (i >= size() || j >= size()) throw InputError("comparison index out of range");
    if (i == j) throw InputError("element compared with itself");
    Order o = answer(i, j);
    counter_.tick();
    if (recording_) transcript_.push_back({i, j, o});
    return o;
}

CountingComparator::CountingComparator(std::vector<std::int64_t> keys, bool tie_break)
    : keys_(std::move(keys)), tie_break_(tie_break) {}

Order CountingComparator::answer(std::size_t i, std::size_t j) {
    if (keys_[i] == keys_[j]) {
        if (!tie_break_) throw InputError("non-strict order");
        return i < j ? Order::Less : Order::Greater;
    }
    return keys_[i] < keys_[j] ? Order::Less : Order::Greater;
}

CountingComparator counting_comparator(std::vector<std::int64_t> items, bool tie_break) {
    return CountingComparator(std::move(items), tie_break);
}

MergeAdversary::MergeAdversary(std::size_t m, std::size_t n) : m_(m), n_(n) {
    if (m == 0 || n == 0) throw InputError("adversary_merge needs m, n >= 1");
    set_recording(true);
}

Order MergeAdversary::answer(std::size_t i, std::size_t j) {
    bool ia = i < m_, ja = j < m_;
    if (ia == ja) return i < j ? Order::Less : Order::Greater;
    // Cross query. Rank a_p = 2p, b_q = 2q - 1.
    std::size_t pi = ia ? 2 * (i + 1) : 2 * (i - m_ + 1) - 1;
    std::size_t pj = ja ? 2 * (j + 1) : 2 * (j - m_ + 1) - 1;
    return pi < pj ? Order::Less : Order::Greater;
}

MergeAdversary adversary_merge(std::size_t m, std::size_t n) { return MergeAdversary(m, n); }

std::vector<std::int64_t> adversary_certify(const MergeAdversary& adv) {
    std::vector<std::int64_t> keys(adv.m() + adv.n());
    for (std::size_t i = 1; i <= adv.m(); ++i) keys[adv.a(i)] = static_cast<std::int64_t>(2 * i);
    for (std::size_t j = 1; j <= adv.n(); ++j) keys[adv.b(j)] = static_cast<std::int64_t>(2 * j - 1);
    for (const auto& r : adv.transcript()) {
        Order truth = keys[r.i] < keys[r.j] ? Order::Less : Order::Greater;
        if (truth != r.answer) throw Error("adversary broke soundness");
    }
    return keys;
}

// ---------------------------------------------------------------------------

TruthfulEquality::TruthfulEquality(std::vector<std::int64_t> a, std::vector<std::int64_t> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw InputError("sets must have equal size");
}

bool TruthfulEquality::equal(std::size_t i, std::size_t j) {
    if (i >= a_.size() || j >= b_.size()) throw InputError("equality index out of range");
    counter_.tick();
    return a_[i] == b_[j];
}

SetEqualityAdversary::SetEqualityAdversary(std::size_t n) : n_(n), table_(n * n, Cell::Unknown) {
    if (n == 0) throw InputError("adversary_set_equality needs n >= 1");
}

std::optional<std::vector<std::size_t>> SetEqualityAdversary::admissible_matching() const {
    const std::size_t none = n_;
    std::vector<std::size_t> row_of(n_, none);  // column -> row
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t r) {
        for (std::size_t c = 0; c < n_; ++c) {
            if (table_[r * n_ + c] == Cell::No || seen[c]) continue;
            seen[c] = 1;
            if (row_of[c] == none || augment(row_of[c])) {
                row_of[c] = r;
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = 0; r < n_; ++r) {
        seen.assign(n_, 0);
        if (!augment(r)) return std::nullopt;
    }
    std::vector<std::size_t> match(n_);
    for (std::size_t c = 0; c < n_; ++c) match[row_of[c]] = c;
    return match;
}

bool SetEqualityAdversary::equal(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw InputError("equality index out of range");
    Cell& cell = table_[i * n_ + j];
    if (cell != Cell::Unknown) return cell == Cell::Yes;
    cell = Cell::No;
    bool answer = false;
    if (!admissible_matching()) {
        cell = Cell::Yes;
        answer = true;
    }
    counter_.tick();
    transcript_.push_back({i, j, answer});
    return answer;
}

SetEqualityAdversary adversary_set_equality(std::size_t n) { return SetEqualityAdversary(n); }

SetPair adversary_certify(const SetEqualityAdversary& adv) {
    auto match = adv.admissible_matching();
    if (!match) throw Error("adversary broke soundness");
    std::size_t n = adv.size();
    SetPair out;
    out.a.resize(n);
    out.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.a[i] = static_cast<std::int64_t>(i + 1);
        out.b[(*match)[i]] = static_cast<std::int64_t>(i + 1);
    }
    for (const auto& r : adv.transcript())
        if ((out.a[r.i] == out.b[r.j]) != r.answer) throw Error("adversary broke soundness");
    return out;
}

// ---------------------------------------------------------------------------

GroupWorld::GroupWorld(std::vector<bool> honest, LiarPolicy policy, std::uint64_t seed)
    : honest_(std::move(honest)), policy_(policy), rng_(seed) {}

GroupWorld GroupWorld::scripted(std::vector<bool> honest, const std::vector<QuestionRecord>& script) {
    GroupWorld w(std::move(honest), LiarPolicy::Scripted);
    for (const auto& r : script) w.script_[{r.i, r.j}] = r.answer;
    return w;
}

bool GroupWorld::ask(std::size_t i, std::size_t j) {
    if (i >= honest_.size() || j >= honest_.size()) throw InputError("member index out of range");
    if (i == j) throw InputError("self-question not allowed");
    counter_.tick();
    bool truth = honest_[j];
    if (honest_[i]) return truth;
    switch (policy_) {
        case LiarPolicy::AlwaysLie: return !truth;
        case LiarPolicy::AlwaysTruth: return truth;
        case LiarPolicy::AlwaysYes: return true;
        case LiarPolicy::AlwaysNo: return false;
        case LiarPolicy::Random: return rng_.coin();
        case LiarPolicy::Scripted: {
            auto it = script_.find({i, j});
            return it == script_.end() ? !truth : it->second;
        }
    }
    return truth;
}

WhoIsWhoAdversary::WhoIsWhoAdversary(std::size_t n) : n_(n) {
    if (n < 3) throw InputError("adversary_whoiswho needs n >= 3");
    k_ = (n - 1) / 2 - 1;
    if (k_ == 0) close_first_phase();
}

void WhoIsWhoAdversary::close_first_phase() {
    phase_two_ = true;
    // Components of the graph spanned by the first-phase pairs.
    std::vector<std::size_t> parent(n_);
    for (std::size_t v = 0; v < n_; ++v) parent[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    std::vector<bool> touched(n_, false);
    for (const auto& r : transcript_) {
        touched[r.i] = touched[r.j] = true;
        parent[find(r.i)] = find(r.j);
    }
    component_.assign(n_, -1);
    std::map<std::size_t, int> ids;
    for (std::size_t v = 0; v < n_; ++v) {
        if (!touched[v]) continue;
        auto [it, fresh] = ids.emplace(find(v), static_cast<int>(members_.size()));
        if (fresh) members_.emplace_back();
        component_[v] = it->second;
        members_[it->second].push_back(v);
    }
    verdict_.assign(n_, 0);
}

bool WhoIsWhoAdversary::ask(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw InputError("member index out of range");
    if (i == j) throw InputError("self-question not allowed");
    counter_.tick();
    bool answer;
    if (!phase_two_) {
        answer = false;
        transcript_.push_back({i, j, answer});
        if (transcript_.size() == k_) close_first_phase();
        return answer;
    }
    if (component_[j] < 0) {
        answer = true;
    } else if (verdict_[j] != 0) {
        answer = verdict_[j] == 1;
    } else {
        bool open = false;
        for (std::size_t u : members_[component_[j]])
            if (u != j && verdict_[u] != 2) open = true;
        answer = !open;
        verdict_[j] = answer ? 1 : 2;
    }
    transcript_.push_back({i, j, answer});
    return answer;
}

std::vector<bool> WhoIsWhoAdversary::unrefuted() const {
    std::vector<bool> l(n_, true);
    if (!phase_two_) return l;
    for (std::size_t v = 0; v < n_; ++v)
        if (verdict_[v] == 2) l[v] = false;
    return l;
}

std::vector<bool> WhoIsWhoAdversary::honest_candidate() const {
    std::vector<bool> star(n_, false);
    if (!phase_two_) {
        // Still inside the first phase: treat the adversary as if it closed now.
        WhoIsWhoAdversary copy = *this;
        copy.close_first_phase();
        return copy.honest_candidate();
    }
    std::vector<bool> l = unrefuted();
    for (std::size_t v = 0; v < n_; ++v)
        if (component_[v] < 0 || verdict_[v] == 1) star[v] = true;
    for (const auto& comp : members_) {
        bool has_yes = false;
        for (std::size_t u : comp) has_yes = has_yes || verdict_[u] == 1;
        if (has_yes) continue;
        for (std::size_t u : comp) {  // members are listed in increasing order
            if (l[u]) {
                star[u] = true;
                break;
            }
        }
    }
    return star;
}

WhoIsWhoAdversary adversary_whoiswho(std::size_t n) { return WhoIsWhoAdversary(n); }

bool labels_consistent(const std::vector<bool>& honest, const std::vector<QuestionRecord>& transcript) {
    std::size_t good = static_cast<std::size_t>(std::count(honest.begin(), honest.end(), true));
    if (2 * good <= honest.size()) return false;
    for (const auto& r : transcript)
        if (honest[r.i] && r.answer != honest[r.j]) return false;
    return true;
}

std::vector<bool> adversary_certify(const WhoIsWhoAdversary& adv) {
    std::vector<bool> labels = adv.honest_candidate();
    if (!labels_consistent(labels, adv.transcript())) throw Error("adversary broke soundness");
    return labels;
}

// ---------------------------------------------------------------------------

CoinWorld::CoinWorld(std::size_t n, std::size_t counterfeit, bool heavier)
    : n_(n), counterfeit_(counterfeit), heavier_(heavier) {
    if (counterfeit > n) throw InputError("counterfeit index out of range");
}

BalanceOutcome CoinWorld::weigh(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right) {
    if (left.size() != right.size()) throw InputError("pans must hold the same number of coins");
    std::set<std::size_t> used;
    for (const auto* pan : {&left, &right})
        for (std::size_t c : *pan) {
            if (c > n_) throw InputError("coin index out of range");
            if (!used.insert(c).second) throw InputError("coin placed twice");
        }
    counter_.tick();
    auto on = [&](const std::vector<std::size_t>& pan) {
        return counterfeit_ != 0 && std::find(pan.begin(), pan.end(), counterfeit_) != pan.end();
    };
    if (on(left)) return heavier_ ? BalanceOutcome::Left : BalanceOutcome::Right;
    if (on(right)) return heavier_ ? BalanceOutcome::Right : BalanceOutcome::Left;
    return BalanceOutcome::Equal;
}

RadioactiveWorld::RadioactiveWorld(std::size_t n, std::size_t hot) : n_(n), hot_(hot) {
    if (hot < 1 || hot > n) throw InputError("radioactive index out of range");
}

bool RadioactiveWorld::test(const std::vector<std::size_t>& items) {
    for (std::size_t x : items)
        if (x < 1 || x > n_) throw InputError("ball index out of range");
    counter_.tick();
    return std::find(items.begin(), items.end(), hot_) != items.end();
}

SequenceProbe::SequenceProbe(std::vector<std::int64_t> values) : values_(std::move(values)) {}

std::int64_t SequenceProbe::probe(std::size_t position) {
    if (position < 1 || position > values_.size()) throw InputError("probe position out of range");
    counter_.tick();
    probed_.push_back(position);
    return values_[position - 1];
}

}  // namespace combinlab
