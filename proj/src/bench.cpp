#include "combinlab/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "combinlab/dp.hpp"
#include "combinlab/generators.hpp"
#include "combinlab/search_games.hpp"
#include "combinlab/sorting.hpp"
#include "combinlab/tournament.hpp"

namespace combinlab {

namespace {

std::string fixed4(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", to_double(r));
    return buf;
}

Rational ratio_of(const Rational& heur, const Rational& opt, bool minimise, bool& finite) {
    finite = true;
    if (heur == opt) return Rational(1);
    const Rational& den = minimise ? opt : heur;
    if (den == 0) {
        finite = false;
        return Rational(0);
    }
    return minimise ? heur / opt : opt / heur;
}

void set_ratio(ApproxReport& r, bool minimise) {
    bool finite = true;
    Rational q = ratio_of(r.heuristic, *r.optimal, minimise, finite);
    if (finite) r.ratio = q;
}

// ---- suites ---------------------------------------------------------------

struct Suite {
    std::uint64_t lo, hi;
    std::size_t trials;
};

BenchTable sorting_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"n", "log2_nfact", "F", "measured"};
    t.headers = {"n", "⌈log₂ n!⌉", "F(n)", "measured"};
    for (std::uint64_t n = lo; n <= hi; ++n) {
        Rng rng(instance_seed(seed, 1, n));
        std::uint64_t worst = 0;
        for (std::size_t k = 0; k < trials; ++k) {
            auto keys = random_permutation(rng, n);
            worst = std::max(worst, sort_keys(SortAlgo::MergeInsertion, keys).comparisons);
        }
        std::uint64_t f = ford_johnson_count(n);
        if (worst > f) ++t.violations;
        t.rows.push_back(Json{{"n", n}, {"log2_nfact", ceil_log2_factorial(static_cast<int>(n))}, {"F", f}, {"measured", worst}});
    }
    return t;
}

BenchTable insertion_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"n", "A", "measured"};
    t.headers = {"n", "A(n)", "measured"};
    for (std::uint64_t n = lo; n <= hi; ++n) {
        Rng rng(instance_seed(seed, 2, n));
        std::uint64_t worst = 0;
        for (std::size_t k = 0; k < trials; ++k)
            worst = std::max(worst, sort_keys(SortAlgo::Insertion, random_permutation(rng, n)).comparisons);
        std::uint64_t a = insertion_count(n);
        if (worst > a) ++t.violations;
        t.rows.push_back(Json{{"n", n}, {"A", a}, {"measured", worst}});
    }
    return t;
}

BenchTable mergesort_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"n", "B", "worst_input", "random"};
    t.headers = {"n", "B(n)", "worst input", "random max"};
    for (std::uint64_t n = lo; n <= hi; ++n) {
        Rng rng(instance_seed(seed, 3, n));
        std::uint64_t worst = 0;
        for (std::size_t k = 0; k < trials; ++k)
            worst = std::max(worst, sort_keys(SortAlgo::MergeGrouped, random_permutation(rng, n)).comparisons);
        std::uint64_t forced = sort_keys(SortAlgo::MergeGrouped, merge_sort_worst_input(n)).comparisons;
        std::uint64_t b = merge_sort_count(n);
        if (worst > b || forced != b) ++t.violations;
        t.rows.push_back(Json{{"n", n}, {"B", b}, {"worst_input", forced}, {"random", worst}});
    }
    return t;
}

BenchTable tournament_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"n", "max_bound", "max", "maxmin_bound", "maxmin", "top2_bound", "top2", "top3_bound", "top3"};
    t.headers = {"n", "n-1", "max", "⌈3n/2⌉-2", "max+min", "top-2 bound", "top-2", "top-3 bound", "top-3"};
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n <= hi; ++n) {
        Rng rng(instance_seed(seed, 4, n));
        std::uint64_t w[4] = {0, 0, 0, 0};
        bool wrong = false;
        for (std::size_t k = 0; k < trials; ++k) {
            auto keys = random_permutation(rng, n);
            auto rank_of = [&](std::size_t id) { return static_cast<std::uint64_t>(keys[id]); };  // n is the largest
            {
                auto c = counting_comparator(keys);
                wrong |= rank_of(tournament_max(c).index) != n;
                w[0] = std::max(w[0], c.count());
            }
            if (n >= 2) {
                auto c = counting_comparator(keys);
                auto [mx, mn] = max_and_min(c);
                wrong |= rank_of(mx) != n || rank_of(mn) != 1;
                w[1] = std::max(w[1], c.count());
            }
            if (n >= 2) {
                auto c = counting_comparator(keys);
                auto [a, b] = top_two(c);
                wrong |= rank_of(a) != n || rank_of(b) != n - 1;
                w[2] = std::max(w[2], c.count());
            }
            if (n >= 3) {
                auto c = counting_comparator(keys);
                auto top = top_three(c);
                wrong |= rank_of(top[0]) != n || rank_of(top[1]) != n - 1 || rank_of(top[2]) != n - 2;
                w[3] = std::max(w[3], c.count());
            }
        }
        Json row{{"n", n}, {"max_bound", n - 1}, {"max", w[0]}};
        bool bad = wrong || w[0] != n - 1;
        if (n >= 2) {
            row["maxmin_bound"] = max_and_min_bound(n);
            row["maxmin"] = w[1];
            bad |= w[1] > max_and_min_bound(n);
            row["top2_bound"] = top_two_bound(n);
            row["top2"] = w[2];
            bad |= w[2] > top_two_bound(n);
        } else {
            row["maxmin_bound"] = nullptr;
            row["maxmin"] = nullptr;
            row["top2_bound"] = nullptr;
            row["top2"] = nullptr;
        }
        if (n >= 3) {
            row["top3_bound"] = top_three_bound(n);
            row["top3"] = w[3];
            bad |= w[3] > top_three_bound(n);
        } else {
            row["top3_bound"] = nullptr;
            row["top3"] = nullptr;
        }
        if (bad) ++t.violations;
        t.rows.push_back(row);
    }
    return t;
}

BenchTable select_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"n", "t", "tournament_bound", "tournament", "linear_bound", "linear"};
    t.headers = {"n", "t", "tournament bound", "tournament", "15n-163", "linear"};
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n <= hi; ++n) {
        std::uint64_t rank = (n + 1) / 2;
        Rng rng(instance_seed(seed, 5, n));
        std::uint64_t wt = 0, wl = 0;
        bool wrong = false;
        for (std::size_t k = 0; k < trials; ++k) {
            auto keys = random_permutation(rng, n);
            auto want = static_cast<std::int64_t>(n - rank + 1);
            auto c1 = counting_comparator(keys);
            wrong |= keys[select_t_tournament(rank, c1)] != want;
            wt = std::max(wt, c1.count());
            auto c2 = counting_comparator(keys);
            wrong |= keys[select_t_linear(rank, c2)] != want;
            wl = std::max(wl, c2.count());
        }
        std::uint64_t tb = select_tournament_bound(n, rank);
        std::int64_t lb = select_linear_bound(static_cast<std::int64_t>(n));
        bool bad = wrong || wt > tb || (n >= 33 && static_cast<std::int64_t>(wl) > lb);
        if (bad) ++t.violations;
        Json row{{"n", n}, {"t", rank}, {"tournament_bound", tb}, {"tournament", wt}};
        if (n >= 33)
            row["linear_bound"] = lb;
        else
            row["linear_bound"] = nullptr;
        row["linear"] = wl;
        t.rows.push_back(row);
    }
    return t;
}

std::vector<std::int64_t> random_bitonic(std::size_t n, std::size_t peak, Rng& rng) {
    std::vector<std::int64_t> rest(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) rest[i] = static_cast<std::int64_t>(i + 1);
    rng.shuffle(rest);
    std::vector<std::int64_t> left(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(peak - 1));
    std::vector<std::int64_t> right(rest.begin() + static_cast<std::ptrdiff_t>(peak - 1), rest.end());
    std::sort(left.begin(), left.end());
    std::sort(right.rbegin(), right.rend());
    left.push_back(static_cast<std::int64_t>(n));
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

BenchTable search_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"n", "radioactive_bound", "radioactive", "coin_bound", "coin", "bitonic_bound", "bitonic", "whoiswho_bound",
              "whoiswho"};
    t.headers = {"n", "⌈log₂ n⌉", "radioactive", "⌈log₃(2n+1)⌉", "weighings", "k", "probes", "⌈3(n-1)/2⌉", "questions"};
    const LiarPolicy policies[] = {LiarPolicy::AlwaysLie, LiarPolicy::AlwaysTruth, LiarPolicy::AlwaysYes, LiarPolicy::AlwaysNo,
                                   LiarPolicy::Random};
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n <= hi; ++n) {
        bool bad = false;
        std::uint64_t radio = 0, coin = 0, probes = 0, questions = 0;
        for (std::size_t hot = 1; hot <= n; ++hot) {
            RadioactiveWorld w(n, hot);
            bad |= find_radioactive(n, w) != hot;
            radio = std::max(radio, w.count());
        }
        for (std::size_t c = 0; c <= n; ++c)
            for (int heavy = 0; heavy < (c == 0 ? 1 : 2); ++heavy) {
                CoinWorld w(n, c, heavy == 1);
                CoinVerdict v = find_counterfeit(n, w);
                CoinVerdict want;
                if (c > 0) want = {CoinVerdict::Kind::Counterfeit, c, heavy == 1};
                bad |= !(v == want);
                coin = std::max(coin, w.count());
            }
        Rng rng(instance_seed(seed, 6, n));
        for (std::size_t peak = 1; peak <= n; ++peak)
            for (std::size_t k = 0; k < std::max<std::size_t>(1, trials / n); ++k) {
                auto seq = random_bitonic(n, peak, rng);
                SequenceProbe p(seq);
                bad |= bitonic_max(n, p).index != peak;
                probes = std::max(probes, p.count());
            }
        for (std::size_t k = 0; n >= 3 && k < trials; ++k) {
            std::vector<bool> honest(n, true);
            std::size_t liars = static_cast<std::size_t>(rng.below((n - 1) / 2 + 1));
            std::vector<std::size_t> ids(n);
            for (std::size_t i = 0; i < n; ++i) ids[i] = i;
            rng.shuffle(ids);
            for (std::size_t i = 0; i < liars; ++i) honest[ids[i]] = false;
            GroupWorld w(honest, policies[rng.below(5)], rng.next());
            bad |= classify_group(n, w) != honest;
            questions = std::max(questions, w.count());
        }
        if (n >= 3) {
            auto adv = adversary_whoiswho(n);
            auto labels = classify_group(n, adv);
            bad |= labels != adversary_certify(adv);
            questions = std::max(questions, adv.count());
        }
        int k = fib_index(n);
        bad |= radio > static_cast<std::uint64_t>(ceil_log2(n)) || coin > static_cast<std::uint64_t>(counterfeit_bound(n));
        if (n >= 3) bad |= probes > static_cast<std::uint64_t>(k) || questions > whoiswho_bound(n);
        if (bad) ++t.violations;
        t.rows.push_back(Json{{"n", n},
                              {"radioactive_bound", ceil_log2(n)},
                              {"radioactive", radio},
                              {"coin_bound", counterfeit_bound(n)},
                              {"coin", coin},
                              {"bitonic_bound", k},
                              {"bitonic", probes},
                              {"whoiswho_bound", n >= 3 ? Json(whoiswho_bound(n)) : Json(nullptr)},
                              {"whoiswho", n >= 3 ? Json(questions) : Json(nullptr)}});
    }
    return t;
}

BenchTable approx_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, std::size_t trials) {
    BenchTable t;
    t.keys = {"algorithm", "instances", "worst_ratio", "worst_ratio_approx", "bound", "worst_seed", "violations"};
    t.headers = {"algorithm", "instances", "worst ratio", "≈", "bound", "seed", "violations"};
    struct Algo {
        const char* name;
        std::uint64_t cap;  // largest n the exact optimum handles quickly
    };
    const Algo algos[] = {{"vc-matching", 12}, {"setcover", 10},  {"maxcut", 12},     {"double-tree", 9},   {"christofides", 9},
                          {"firstfit", 10},   {"fptas-1", 12},   {"fptas-1/2", 12}, {"fptas-1/4", 12}};
    for (std::uint64_t a = 0; a < std::size(algos); ++a) {
        const Algo& algo = algos[a];
        std::optional<ApproxReport> worst;
        std::size_t count = 0, bad = 0;
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= std::min(hi, algo.cap); ++n)
            for (std::size_t k = 0; k < trials; ++k) {
                std::uint64_t s = instance_seed(seed, 100 + a, n * 100000 + k);
                Rng rng(s);
                ApproxReport r;
                std::string name = algo.name;
                if (name == "vc-matching") {
                    r = approx_vertex_cover(random_graph(n, 1, 2, rng), false, true);
                } else if (name == "setcover") {
                    r = approx_set_cover(random_set_system(n, 2 + rng.below(n), rng), true);
                } else if (name == "maxcut") {
                    r = approx_max_cut(random_graph(n, 1, 2, rng), true);
                } else if (name == "double-tree" || name == "christofides") {
                    r = approx_tsp(random_metric_tsp(n, 20, rng), name == "christofides", true);
                } else if (name == "firstfit") {
                    r = approx_first_fit(random_bin_sizes(n, 12, rng), true);
                } else {
                    Rational eps = name == "fptas-1" ? Rational(1) : name == "fptas-1/2" ? Rational(1, 2) : Rational(1, 4);
                    auto kn = random_knapsack(n, 1000, 30, rng);
                    r = approx_knapsack(kn.values, kn.volumes, kn.capacity, eps, true);
                }
                r.algorithm = name;
                r.seed = s;
                ++count;
                if (!r.within_bound()) ++bad;
                if (!worst || (worst->ratio && (!r.ratio || *r.ratio > *worst->ratio))) worst = r;
            }
        Json row{{"algorithm", algo.name}, {"instances", count}};
        if (worst && worst->ratio) {
            row["worst_ratio"] = to_string(*worst->ratio);
            row["worst_ratio_approx"] = fixed4(*worst->ratio);
        } else {
            row["worst_ratio"] = nullptr;
            row["worst_ratio_approx"] = nullptr;
        }
        row["bound"] = worst && worst->bound ? Json(to_string(*worst->bound)) : Json(nullptr);
        row["worst_seed"] = worst ? Json(worst->seed) : Json(nullptr);
        row["violations"] = bad;
        if (bad) ++t.violations;
        t.rows.push_back(row);
    }
    return t;
}

BenchTable counterexample_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t, std::size_t) {
    BenchTable t;
    t.keys = {"n", "vertices", "greedy", "optimal", "ratio", "ratio_approx", "H"};
    t.headers = {"n", "|V|", "greedy", "OPT", "ratio", "≈", "H(n)"};
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n <= hi; ++n) {
        auto ce = vc_greedy_counterexample(n);
        auto greedy = vc_degree_greedy(ce.g);
        Rational ratio(static_cast<std::int64_t>(greedy.size()), static_cast<std::int64_t>(ce.core.size()));
        if (greedy.size() != ce.greedy_size) ++t.violations;
        t.rows.push_back(Json{{"n", n},
                              {"vertices", ce.g.n()},
                              {"greedy", greedy.size()},
                              {"optimal", ce.core.size()},
                              {"ratio", to_string(ratio)},
                              {"ratio_approx", fixed4(ratio)},
                              {"H", fixed4(harmonic(static_cast<int>(n)))}});
    }
    return t;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
    // splitmix64 finaliser over the three words.
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ stream) ^ i);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    auto num = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw InputError("bad range: " + text);
        return static_cast<std::uint64_t>(std::stoull(s));
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = num(text);
        return {v, v};
    }
    auto lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
    if (lo > hi) throw InputError("empty range: " + text);
    return {lo, hi};
}

const std::vector<std::string>& bench_suites() {
    static const std::vector<std::string> names = {"sorting", "insertion", "mergesort", "tournament",
                                                   "select",  "search",    "approx",    "counterexample"};
    return names;
}

BenchTable run_bench(const BenchOptions& opt) {
    struct Entry {
        const char* name;
        Suite defaults;
        BenchTable (*run)(std::uint64_t, std::uint64_t, std::uint64_t, std::size_t);
        std::uint64_t max_hi;
    };
    static const Entry entries[] = {
        {"sorting", {1, 64, 32}, sorting_suite, 4096},
        {"insertion", {1, 64, 32}, insertion_suite, 4096},
        {"mergesort", {1, 64, 32}, mergesort_suite, 4096},
        {"tournament", {1, 64, 32}, tournament_suite, 4096},
        {"select", {33, 128, 8}, select_suite, 4096},
        {"search", {1, 12, 64}, search_suite, 64},
        {"approx", {4, 9, 20}, approx_suite, 12},
        {"counterexample", {1, 30, 1}, counterexample_suite, 200},
    };
    for (const auto& e : entries) {
        if (opt.suite != e.name) continue;
        std::uint64_t lo = opt.lo ? opt.lo : e.defaults.lo;
        std::uint64_t hi = opt.hi ? opt.hi : e.defaults.hi;
        std::size_t trials = opt.trials ? opt.trials : e.defaults.trials;
        if (lo > hi) throw InputError("empty range");
        if (hi > e.max_hi) throw LimitError("suite " + opt.suite + " caps n at " + std::to_string(e.max_hi));
        BenchTable t = e.run(lo, hi, opt.seed, trials);
        t.suite = opt.suite;
        t.seed = opt.seed;
        t.trials = trials;
        return t;
    }
    throw InputError("unknown bench suite: " + opt.suite);
}

Json to_json(const BenchTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json o = Json::object();
        for (const auto& k : t.keys) o[k] = r.contains(k) ? r.at(k) : Json(nullptr);
        rows.push_back(o);
    }
    return Json{{"suite", t.suite}, {"seed", t.seed},     {"trials", t.trials},
                {"columns", t.keys}, {"rows", rows},      {"violations", t.violations}};
}

std::string to_text(const BenchTable& t) {
    auto cell = [](const Json& v) -> std::string {
        if (v.is_null()) return "-";
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    // Column widths count code points so the unicode headers line up.
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80) ++w;
        return w;
    };
    std::vector<std::vector<std::string>> grid;
    grid.push_back(t.headers);
    for (const auto& r : t.rows) {
        std::vector<std::string> line;
        for (const auto& k : t.keys) line.push_back(r.contains(k) ? cell(r.at(k)) : "-");
        grid.push_back(line);
    }
    std::vector<std::size_t> w(t.keys.size(), 0);
    for (const auto& line : grid)
        for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], width(line[i]));
    std::ostringstream out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t i = 0; i < grid[r].size(); ++i) {
            if (i) out << "  ";
            out << std::string(w[i] - width(grid[r][i]), ' ') << grid[r][i];
        }
        out << '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (auto x : w) total += x;
            out << std::string(total + 2 * (w.size() - 1), '-') << '\n';
        }
    }
    out << "suite " << t.suite << ", seed " << t.seed << ", trials " << t.trials << ", violations " << t.violations << '\n';
    return out.str();
}

// ---- approximation reports ------------------------------------------------

bool ApproxReport::within_bound() const {
    if (!optimal) return true;
    if (!ratio) return false;
    return !bound || *ratio <= *bound;
}

Json to_json(const ApproxReport& r) {
    auto opt = [](const std::optional<Rational>& x) { return x ? rational_to_json(*x) : Json(nullptr); };
    Json j{{"algorithm", r.algorithm},         {"n", r.n},          {"heuristic", rational_to_json(r.heuristic)},
           {"optimal", opt(r.optimal)},        {"ratio", opt(r.ratio)}, {"bound", opt(r.bound)},
           {"seed", r.seed}};
    if (!r.solution.is_null()) j["solution"] = r.solution;
    return j;
}

ApproxReport approx_vertex_cover(const Graph& g, bool greedy, bool oracle) {
    ApproxReport r;
    r.algorithm = greedy ? "vc-greedy" : "vc-matching";
    r.n = g.n();
    auto cover = greedy ? vc_degree_greedy(g) : vc_matching_2approx(g);
    std::sort(cover.begin(), cover.end());
    r.heuristic = static_cast<std::int64_t>(cover.size());
    if (!greedy) r.bound = Rational(2);
    r.solution = Json{{"vertices", cover}};
    if (oracle) {
        r.optimal = Rational(static_cast<std::int64_t>(vc_optimum(g)));
        set_ratio(r, true);
    }
    return r;
}

ApproxReport approx_set_cover(const SetSystem& s, bool oracle) {
    ApproxReport r;
    r.algorithm = "setcover";
    r.n = s.n;
    auto pick = set_cover_greedy(s);
    r.heuristic = static_cast<std::int64_t>(pick.size());
    r.bound = harmonic(static_cast<int>(std::max<std::size_t>(1, max_set_size(s))));
    r.solution = Json{{"selection", pick}};
    if (oracle) {
        r.optimal = Rational(static_cast<std::int64_t>(set_cover_optimum(s)));
        set_ratio(r, true);
    }
    return r;
}

ApproxReport approx_max_cut(const Graph& g, bool oracle) {
    ApproxReport r;
    r.algorithm = "maxcut";
    r.n = g.n();
    auto cut = max_cut_local_search(g);
    r.heuristic = static_cast<std::int64_t>(cut.cut);
    r.bound = Rational(2);
    std::vector<std::size_t> side;
    for (std::size_t v = 1; v <= g.n(); ++v)
        if (cut.side[v - 1]) side.push_back(v);
    r.solution = Json{{"vertices", side}, {"moves", cut.moves}};
    if (oracle) {
        r.optimal = Rational(static_cast<std::int64_t>(max_cut_optimum(g)));
        set_ratio(r, false);
    }
    return r;
}

ApproxReport approx_tsp(const CostMatrix& c, bool christofides, bool oracle) {
    ApproxReport r;
    r.algorithm = christofides ? "christofides" : "double-tree";
    r.n = c.size();
    TspTour tour = christofides ? tsp_christofides(c) : tsp_double_tree(c);
    r.heuristic = tour.length;
    // The guarantee needs the triangle inequality.
    if (satisfies_triangle(c)) r.bound = christofides ? Rational(3, 2) : Rational(2);
    r.solution = Json{{"tour", tour.tour}};
    if (oracle) {
        r.optimal = tsp_optimum(c).length;
        set_ratio(r, true);
    }
    return r;
}

ApproxReport approx_knapsack(const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& volumes,
                             std::int64_t capacity, const Rational& eps, bool oracle) {
    ApproxReport r;
    r.algorithm = "fptas";
    r.n = values.size();
    auto f = knapsack_fptas(values, volumes, capacity, eps);
    r.heuristic = f.value;
    r.bound = 1 + eps;
    r.solution = Json{{"selection", f.set}, {"volume", f.volume}, {"b", f.b}};
    if (oracle) {
        r.optimal = Rational(knapsack_pareto(values, volumes, capacity).value);
        set_ratio(r, false);
    }
    return r;
}

ApproxReport approx_first_fit(const std::vector<Rational>& sizes, bool oracle) {
    ApproxReport r;
    r.algorithm = "firstfit";
    r.n = sizes.size();
    auto p = bin_pack_first_fit(sizes);
    r.heuristic = static_cast<std::int64_t>(p.bins());
    r.bound = Rational(2);
    r.solution = Json{{"bins", p.bin}};
    if (oracle) {
        r.optimal = Rational(static_cast<std::int64_t>(bin_pack_optimum(sizes)));
        set_ratio(r, true);
    }
    return r;
}

}  // namespace combinlab
