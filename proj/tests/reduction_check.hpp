#pragma once

// Decision equivalence and witness transport for every reduction kind.

#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "combinlab/complexity.hpp"
#include "combinlab/generators.hpp"

namespace redcheck {

using namespace combinlab;

struct Tally {
    std::size_t instances = 0;
    std::size_t yes = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

inline OracleLimits wide_limits() {
    OracleLimits l;
    l.variables = 24;
    l.vertices = 64;
    l.elements = 80;
    l.box = 3;
    return l;
}

inline void check(ReductionKind kind, const ProblemInstance& source, const OracleLimits& limits, Tally& t) {
    ++t.instances;
    std::string tag = to_string(kind) + " #" + std::to_string(t.instances);
    try {
        auto out = apply_reduction(kind, source);
        validate(out.target);
        auto s = brute_force_decide(source, limits);
        auto d = brute_force_decide(out.target, limits);
        if (s.has_value() != d.has_value()) return t.fail(tag + ": decisions differ");
        if (s) {
            ++t.yes;
            if (!verify_witness(out.target, out.forward(*s))) return t.fail(tag + ": forward witness rejected");
        }
        if (d && !verify_witness(source, out.backward(*d))) return t.fail(tag + ": backward witness rejected");
    } catch (const std::exception& e) {
        t.fail(tag + ": " + e.what());
    }
}

// Scale 0 is the quick unit-test sweep, scale 1 the full acceptance sweep.
inline std::vector<ProblemInstance> sources(ReductionKind kind, int scale) {
    std::vector<ProblemInstance> out;
    auto graphs = [&](std::size_t lo, std::size_t hi, bool classes) {
        std::vector<Graph> gs;
        for (std::size_t n = lo; n <= hi; ++n) {
            auto part = classes ? brute::graph_classes(n) : brute::all_graphs(n);
            gs.insert(gs.end(), part.begin(), part.end());
        }
        return gs;
    };
    auto set_systems = [&](std::size_t max_n, std::size_t max_m, bool must_cover) {
        std::vector<SetSystem> ss;
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::vector<std::vector<std::size_t>> subsets;
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
                std::vector<std::size_t> s;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1) s.push_back(i + 1);
                subsets.push_back(s);
            }
            std::vector<std::size_t> idx;
            std::function<void(std::size_t)> go = [&](std::size_t from) {
                if (!idx.empty()) {
                    SetSystem sys;
                    sys.n = n;
                    for (auto i : idx) sys.sets.push_back(subsets[i]);
                    if (!must_cover || brute::covers(sys, [&] {
                            std::vector<std::size_t> all(sys.sets.size());
                            std::iota(all.begin(), all.end(), 1);
                            return all;
                        }()))
                        ss.push_back(sys);
                }
                if (idx.size() == max_m) return;
                for (std::size_t i = from; i < subsets.size(); ++i) {
                    idx.push_back(i);
                    go(i);
                    idx.pop_back();
                }
            };
            go(0);
        }
        return ss;
    };
    auto knapsacks = [&](std::size_t max_n) {
        std::vector<Knapsack01> ks;
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::vector<std::int64_t> a(n, 1);
            std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t from) {
                if (i == n) {
                    std::int64_t sum = 0;
                    for (auto x : a) sum += x;
                    std::vector<std::int64_t> bs;
                    if (n <= 2) {
                        for (std::int64_t b = 0; b <= sum + 1; ++b) bs.push_back(b);
                    } else {
                        bs = {0, 1, sum / 2, sum - 1, sum, sum + 1, a[0] + a[n - 1]};
                    }
                    for (auto b : bs) {
                        Knapsack01 k;
                        for (auto x : a) k.a.push_back(x);
                        k.b = b;
                        ks.push_back(k);
                    }
                    return;
                }
                // n <= 2 runs over all tuples, larger n over sorted ones
                for (std::int64_t v = n <= 2 ? 1 : from; v <= 10; ++v) {
                    a[i] = v;
                    go(i + 1, v);
                }
            };
            go(0, 1);
        }
        return ks;
    };

    std::size_t max_sat_clauses = scale ? 3 : 2;
    switch (kind) {
        case ReductionKind::SatTo3Sat:
        case ReductionKind::SatToClique:
            for (std::size_t n = 1; n <= 3; ++n)
                for (auto& f : brute::all_formulas(n, brute::all_clauses(n, 1, n), max_sat_clauses)) out.push_back(Sat{f});
            break;
        case ReductionKind::ThreeSatToColoring: {
            auto fs = brute::all_formulas(3, brute::all_clauses(3, 3, 3), scale ? 3 : 2);
            for (auto& f : fs) out.push_back(ThreeSat{f});
            CnfFormula all{3, {}};
            for (int m = 0; m < 8; ++m) all.clauses.push_back({{1, bool(m & 1)}, {2, bool(m & 2)}, {3, bool(m & 4)}});
            out.push_back(ThreeSat{all});
            break;
        }
        case ReductionKind::CliqueToIS:
            for (auto& g : graphs(1, scale ? 5 : 4, false))
                for (std::size_t k = 1; k <= g.n(); ++k) out.push_back(Clique{g, k});
            break;
        case ReductionKind::ISToVC:
            for (auto& g : graphs(1, scale ? 5 : 4, false))
                for (std::size_t k = 1; k <= g.n(); ++k) out.push_back(IndependentSet{g, k});
            break;
        case ReductionKind::VCToSetCover:
            for (auto& g : graphs(1, scale ? 5 : 4, false))
                for (std::size_t k = 1; k <= g.n(); ++k) out.push_back(VertexCover{g, k});
            break;
        case ReductionKind::VCToHamCircuit:
            for (auto& g : graphs(2, scale ? 5 : 4, true))
                if (g.m() > 0)
                    for (std::size_t k = 1; k <= g.n(); ++k) out.push_back(VertexCover{g, k});
            break;
        case ReductionKind::ColoringToExactCover:
            for (auto& g : graphs(1, scale ? 5 : 4, scale == 0))
                for (std::size_t k = 1; k <= std::min<std::size_t>(g.n(), 4); ++k) out.push_back(GraphColoring{g, k});
            break;
        case ReductionKind::ExactCoverToRepresentatives:
            for (auto& s : set_systems(scale ? 4 : 3, scale ? 4 : 3, false)) out.push_back(ExactCover{s});
            break;
        case ReductionKind::ExactCoverToKnapsack01:
            for (auto& s : set_systems(scale ? 4 : 3, scale ? 4 : 3, true)) out.push_back(ExactCover{s});
            break;
        case ReductionKind::SetCoverToIlp:
            for (auto& s : set_systems(scale ? 4 : 3, scale ? 4 : 3, false))
                for (std::size_t k = 1; k <= s.sets.size(); ++k) out.push_back(SetCover{s, k});
            break;
        case ReductionKind::Knapsack01ToPartition:
        case ReductionKind::Knapsack01ToIlp:
            for (auto& k : knapsacks(scale ? 5 : 3)) out.push_back(k);
            break;
        case ReductionKind::HamCircuitToHamCycle: {
            for (std::size_t n = 1; n <= (scale ? 4u : 3u); ++n)
                for (auto& d : brute::all_digraphs(n)) out.push_back(HamCircuit{d});
            Rng rng(505);
            for (int i = 0; i < (scale ? 300 : 30); ++i)
                out.push_back(HamCircuit{random_digraph(5, 1 + rng.below(3), 4, 1, 1, rng)});
            break;
        }
        case ReductionKind::HamCycleToTsp:
            for (auto& g : graphs(3, scale ? 5 : 4, false)) out.push_back(HamCycle{g});
            break;
        case ReductionKind::TspToIlp: {
            // every 3-city matrix with costs 0..3, then random 4-city ones
            for (std::uint64_t code = 0; code < (scale ? 4096u : 256u); ++code) {
                std::vector<std::vector<std::int64_t>> c(3, std::vector<std::int64_t>(3, 0));
                std::uint64_t x = code;
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        if (i != j) {
                            c[i][j] = std::int64_t(x % 4);
                            x /= 4;
                        }
                std::int64_t opt = std::min(c[0][1] + c[1][2] + c[2][0], c[0][2] + c[2][1] + c[1][0]);
                out.push_back(Tsp{c, opt});
                out.push_back(Tsp{c, opt - 1});
            }
            Rng rng(404);
            for (int i = 0; i < (scale ? 200 : 20); ++i) {
                std::vector<std::vector<std::int64_t>> c(4, std::vector<std::int64_t>(4, 0));
                for (std::size_t a = 0; a < 4; ++a)
                    for (std::size_t b = 0; b < 4; ++b)
                        if (a != b) c[a][b] = rng.range(0, 5);
                std::int64_t L = rng.range(4, 14);
                out.push_back(Tsp{c, L});
            }
            break;
        }
    }
    return out;
}

inline Tally sweep(ReductionKind kind, int scale, const OracleLimits& limits) {
    Tally t;
    for (const auto& s : sources(kind, scale)) check(kind, s, limits, t);
    return t;
}

}  // namespace redcheck
