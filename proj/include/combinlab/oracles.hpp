#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "combinlab/common.hpp"

namespace combinlab {

enum class Order { Less, Greater };

// Outcome of a weighing. Left means the left pan is heavier.
enum class BalanceOutcome { Left, Right, Equal };

class QueryCounter {
public:
    std::uint64_t count() const { return count_; }
    void tick() { ++count_; }

private:
    std::uint64_t count_ = 0;
};

struct ComparisonRecord {
    std::size_t i;
    std::size_t j;
    Order answer;
};

// Answers compare(i, j) over element ids 0..size()-1 and counts every call.
class ComparisonOracle {
public:
    virtual ~ComparisonOracle() = default;
    virtual std::size_t size() const = 0;

    Order compare(std::size_t i, std::size_t j);
    bool less(std::size_t i, std::size_t j) { return compare(i, j) == Order::Less; }
    bool greater(std::size_t i, std::size_t j) { return compare(i, j) == Order::Greater; }
    std::uint64_t count() const { return counter_.count(); }
    const std::vector<ComparisonRecord>& transcript() const { return transcript_; }
    void set_recording(bool on) { recording_ = on; }

protected:
    virtual Order answer(std::size_t i, std::size_t j) = 0;

private:
    QueryCounter counter_;
    bool recording_ = false;
    std::vector<ComparisonRecord> transcript_;
};

// Truthful comparator over a list of keys. Equal keys are an error unless
// tie_break is set, in which case the smaller index counts as smaller.
class CountingComparator final : public ComparisonOracle {
public:
    explicit CountingComparator(std::vector<std::int64_t> keys, bool tie_break = false);
    std::size_t size() const override { return keys_.size(); }
    const std::vector<std::int64_t>& keys() const { return keys_; }

protected:
    Order answer(std::size_t i, std::size_t j) override;

private:
    std::vector<std::int64_t> keys_;
    bool tie_break_;
};

CountingComparator counting_comparator(std::vector<std::int64_t> items, bool tie_break = false);

// Element ids: a_i is i-1, b_j is m+j-1. Both runs are taken as sorted.
// A cross query answers a_i < b_j exactly when i < j.
class MergeAdversary final : public ComparisonOracle {
public:
    MergeAdversary(std::size_t m, std::size_t n);
    std::size_t size() const override { return m_ + n_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t a(std::size_t i) const { return i - 1; }
    std::size_t b(std::size_t j) const { return m_ + j - 1; }

protected:
    Order answer(std::size_t i, std::size_t j) override;

private:
    std::size_t m_;
    std::size_t n_;
};

MergeAdversary adversary_merge(std::size_t m, std::size_t n);

// Keys (a_1..a_m then b_1..b_n) realising b_1 < a_1 < b_2 < a_2 < ...
// Throws if the recorded transcript disagrees with them.
std::vector<std::int64_t> adversary_certify(const MergeAdversary& adv);

// ---------------------------------------------------------------------------
// Equality queries "a_i = b_j ?" between two n-element sets (0-based ids).

class EqualityOracle {
public:
    virtual ~EqualityOracle() = default;
    virtual std::size_t size() const = 0;
    virtual bool equal(std::size_t i, std::size_t j) = 0;
    std::uint64_t count() const { return counter_.count(); }

protected:
    QueryCounter counter_;
};

class TruthfulEquality final : public EqualityOracle {
public:
    TruthfulEquality(std::vector<std::int64_t> a, std::vector<std::int64_t> b);
    std::size_t size() const override { return a_.size(); }
    bool equal(std::size_t i, std::size_t j) override;

private:
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> b_;
};

struct EqualityRecord {
    std::size_t i;
    std::size_t j;
    bool answer;
};

// Says "no" whenever the cells not yet marked "no" would still hold a
// perfect matching after marking this one; says "yes" otherwise.
class SetEqualityAdversary final : public EqualityOracle {
public:
    enum class Cell : std::uint8_t { Unknown, Yes, No };

    explicit SetEqualityAdversary(std::size_t n);
    std::size_t size() const override { return n_; }
    bool equal(std::size_t i, std::size_t j) override;
    Cell cell(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    const std::vector<EqualityRecord>& transcript() const { return transcript_; }
    // Perfect matching on admissible cells: match[i] = column of row i.
    std::optional<std::vector<std::size_t>> admissible_matching() const;

private:
    std::size_t n_;
    std::vector<Cell> table_;
    std::vector<EqualityRecord> transcript_;
};

SetEqualityAdversary adversary_set_equality(std::size_t n);

struct SetPair {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
};

SetPair adversary_certify(const SetEqualityAdversary& adv);

// ---------------------------------------------------------------------------
// Questions (i, j): "member i, is member j honest?" (0-based ids).

struct QuestionRecord {
    std::size_t i;
    std::size_t j;
    bool answer;
};

class QuestionOracle {
public:
    virtual ~QuestionOracle() = default;
    virtual std::size_t size() const = 0;
    virtual bool ask(std::size_t i, std::size_t j) = 0;
    std::uint64_t count() const { return counter_.count(); }

protected:
    QueryCounter counter_;
};

enum class LiarPolicy { AlwaysLie, AlwaysTruth, AlwaysYes, AlwaysNo, Random, Scripted };

// A fixed world. Honest members answer truthfully; dishonest ones follow the
// policy. Scripted worlds replay dishonest answers from a transcript.
class GroupWorld final : public QuestionOracle {
public:
    GroupWorld(std::vector<bool> honest, LiarPolicy policy, std::uint64_t seed = 0);
    static GroupWorld scripted(std::vector<bool> honest, const std::vector<QuestionRecord>& script);

    std::size_t size() const override { return honest_.size(); }
    bool ask(std::size_t i, std::size_t j) override;
    const std::vector<bool>& honest() const { return honest_; }

private:
    std::vector<bool> honest_;
    LiarPolicy policy_;
    Rng rng_;
    std::map<std::pair<std::size_t, std::size_t>, bool> script_;
};

// The first floor((n-1)/2) - 1 questions get "no"; later ones follow the
// component rule.
class WhoIsWhoAdversary final : public QuestionOracle {
public:
    explicit WhoIsWhoAdversary(std::size_t n);
    std::size_t size() const override { return n_; }
    bool ask(std::size_t i, std::size_t j) override;

    std::size_t first_phase_length() const { return k_; }
    const std::vector<QuestionRecord>& transcript() const { return transcript_; }
    // Members never answered "no" about during the second phase.
    std::vector<bool> unrefuted() const;
    // W, the yes-members, and the smallest unrefuted member of each component without a yes.
    std::vector<bool> honest_candidate() const;

private:
    void close_first_phase();

    std::size_t n_;
    std::size_t k_;
    std::vector<QuestionRecord> transcript_;
    bool phase_two_ = false;
    std::vector<int> component_;  // -1 for members outside the first-phase graph
    std::vector<std::vector<std::size_t>> members_;
    // Second-phase state per member: 0 untouched, 1 said "yes", 2 said "no".
    std::vector<std::uint8_t> verdict_;
};

WhoIsWhoAdversary adversary_whoiswho(std::size_t n);

// Honest/dishonest labels consistent with every answer given so far.
std::vector<bool> adversary_certify(const WhoIsWhoAdversary& adv);

// True when honest askers answered truthfully and honest members are a strict majority.
bool labels_consistent(const std::vector<bool>& honest, const std::vector<QuestionRecord>& transcript);

// ---------------------------------------------------------------------------
// Weighings, group tests and value probes.

class BalanceOracle {
public:
    virtual ~BalanceOracle() = default;
    virtual std::size_t coins() const = 0;  // suspects are 1..coins(), coin 0 is genuine
    virtual BalanceOutcome weigh(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right) = 0;
    std::uint64_t count() const { return counter_.count(); }

protected:
    QueryCounter counter_;
};

// counterfeit == 0 means every coin is genuine.
class CoinWorld final : public BalanceOracle {
public:
    CoinWorld(std::size_t n, std::size_t counterfeit, bool heavier);
    std::size_t coins() const override { return n_; }
    BalanceOutcome weigh(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right) override;

private:
    std::size_t n_;
    std::size_t counterfeit_;
    bool heavier_;
};

class GroupTester {
public:
    virtual ~GroupTester() = default;
    virtual std::size_t size() const = 0;
    // Items are 1-based.
    virtual bool test(const std::vector<std::size_t>& items) = 0;
    std::uint64_t count() const { return counter_.count(); }

protected:
    QueryCounter counter_;
};

class RadioactiveWorld final : public GroupTester {
public:
    RadioactiveWorld(std::size_t n, std::size_t hot);
    std::size_t size() const override { return n_; }
    bool test(const std::vector<std::size_t>& items) override;

private:
    std::size_t n_;
    std::size_t hot_;
};

class ProbeOracle {
public:
    virtual ~ProbeOracle() = default;
    virtual std::size_t size() const = 0;
    // 1-based position.
    virtual std::int64_t probe(std::size_t position) = 0;
    std::uint64_t count() const { return counter_.count(); }

protected:
    QueryCounter counter_;
};

class SequenceProbe final : public ProbeOracle {
public:
    explicit SequenceProbe(std::vector<std::int64_t> values);
    std::size_t size() const override { return values_.size(); }
    std::int64_t probe(std::size_t position) override;
    const std::vector<std::size_t>& probed() const { return probed_; }

private:
    std::vector<std::int64_t> values_;
    std::vector<std::size_t> probed_;
};

}  // namespace combinlab
