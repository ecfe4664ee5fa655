#include "combinlab/dp.hpp"

#include <functional>
#include <numeric>

namespace combinlab {

void AllocationInstance::validate() const {
    if (cost.size() != profit.size()) throw InputError("cost and profit tables differ in task count");
    if (budget < 0) throw InputError("budget must be non-negative");
    for (std::size_t i = 0; i < cost.size(); ++i) {
        const auto& c = cost[i];
        const auto& p = profit[i];
        if (c.empty() || c.size() != p.size()) throw InputError("task " + std::to_string(i + 1) + ": table sizes differ");
        if (c[0] != 0 || p[0] != 0) throw InputError("task " + std::to_string(i + 1) + ": tables must start at 0");
        for (std::size_t x = 1; x < c.size(); ++x)
            if (c[x] < c[x - 1] || p[x] < p[x - 1])
                throw InputError("task " + std::to_string(i + 1) + ": tables must be non-decreasing");
    }
}

AllocationInstance unit_cost_allocation(std::vector<std::vector<std::int64_t>> profit, std::int64_t budget) {
    AllocationInstance inst;
    for (const auto& p : profit) {
        std::vector<std::int64_t> c(p.size());
        std::iota(c.begin(), c.end(), std::int64_t{0});
        inst.cost.push_back(std::move(c));
    }
    inst.profit = std::move(profit);
    inst.budget = budget;
    return inst;
}

AllocationResult allocate(const AllocationInstance& inst) {
    inst.validate();
    std::size_t N = inst.cost.size();
    auto K = static_cast<std::size_t>(inst.budget);
    AllocationResult r;
    auto& F = r.table;
    F.assign(N + 1, std::vector<std::int64_t>(K + 1, 0));
    std::vector<std::vector<std::int64_t>> choice(N + 1, std::vector<std::int64_t>(K + 1, 0));
    for (std::size_t i = 1; i <= N; ++i) {
        const auto& c = inst.cost[i - 1];
        const auto& p = inst.profit[i - 1];
        for (std::size_t j = 0; j <= K; ++j) {
            std::int64_t best = -1, arg = 0;
            for (std::size_t x = 0; x < c.size(); ++x) {
                if (c[x] > static_cast<std::int64_t>(j)) break;
                std::int64_t val = p[x] + F[i - 1][j - static_cast<std::size_t>(c[x])];
                if (val > best) {
                    best = val;
                    arg = static_cast<std::int64_t>(x);
                }
            }
            F[i][j] = best;
            choice[i][j] = arg;
        }
    }
    r.value = F[N][K];
    r.plan.assign(N, 0);
    std::size_t j = K;
    for (std::size_t i = N; i >= 1; --i) {
        std::int64_t x = choice[i][j];
        r.plan[i - 1] = x;
        j -= static_cast<std::size_t>(inst.cost[i - 1][static_cast<std::size_t>(x)]);
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

void check_knapsack(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v, std::int64_t capacity) {
    if (c.size() != v.size()) throw InputError("values and volumes differ in length");
    if (capacity < 0) throw InputError("capacity must be non-negative");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < 0 || v[i] < 0) throw InputError("values and volumes must be non-negative");
}

// Drops dominated entries. Among equal (c, w) the smallest set survives.
std::vector<ParetoEntry> prune(std::vector<ParetoEntry> all) {
    std::sort(all.begin(), all.end(), [](const ParetoEntry& a, const ParetoEntry& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.c != b.c) return a.c > b.c;
        return a.set < b.set;
    });
    std::vector<ParetoEntry> kept;
    for (auto& e : all)
        if (kept.empty() || e.c > kept.back().c) kept.push_back(std::move(e));
    return kept;
}

}  // namespace

KnapsackResult knapsack_pareto(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v,
                               std::int64_t capacity, bool trace) {
    check_knapsack(c, v, capacity);
    std::vector<ParetoEntry> level{ParetoEntry{}};
    KnapsackResult r;
    if (trace) r.levels.push_back(level);
    for (std::size_t k = 0; k < c.size(); ++k) {
        std::vector<ParetoEntry> next = level;
        for (const auto& e : level) {
            if (e.w + v[k] > capacity) continue;
            ParetoEntry f = e;
            f.set.push_back(k + 1);
            f.c += c[k];
            f.w += v[k];
            next.push_back(std::move(f));
        }
        level = prune(std::move(next));
        if (trace) r.levels.push_back(level);
    }
    // Entries are sorted by volume with strictly rising value: the last is best.
    const ParetoEntry& best = level.back();
    r.set = best.set;
    r.value = best.c;
    r.volume = best.w;
    return r;
}

KnapsackResult greedy_knapsack_by_density(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v,
                                          std::int64_t capacity) {
    check_knapsack(c, v, capacity);
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // c_a / v_a > c_b / v_b without division; zero volume ranks first.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        BigInt lhs = BigInt(c[a]) * v[b], rhs = BigInt(c[b]) * v[a];
        if (v[a] == 0 || v[b] == 0) return v[a] == 0 && v[b] != 0;
        return lhs > rhs;
    });
    KnapsackResult r;
    for (std::size_t i : order) {
        if (r.volume + v[i] > capacity) continue;
        r.volume += v[i];
        r.value += c[i];
        r.set.push_back(i + 1);
    }
    std::sort(r.set.begin(), r.set.end());
    return r;
}

LcsResult<char> lcs(const std::string& x, const std::string& y) {
    return lcs(std::vector<char>(x.begin(), x.end()), std::vector<char>(y.begin(), y.end()));
}

// ---------------------------------------------------------------------------

ChainResult matrix_chain(const std::vector<std::int64_t>& dims) {
    if (dims.size() < 2) throw InputError("matrix_chain needs at least one matrix");
    for (auto p : dims)
        if (p < 1) throw InputError("dimensions must be positive");
    std::size_t n = dims.size() - 1;
    ChainResult r;
    r.m.assign(n, std::vector<BigInt>(n, 0));
    r.s.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 1; i + len - 1 <= n; ++i) {
            std::size_t j = i + len - 1;
            bool first = true;
            for (std::size_t k = i; k < j; ++k) {
                BigInt q = r.m[i - 1][k - 1] + r.m[k][j - 1] + BigInt(dims[i - 1]) * dims[k] * dims[j];
                if (first || q < r.m[i - 1][j - 1]) {
                    r.m[i - 1][j - 1] = q;
                    r.s[i - 1][j - 1] = k;
                    first = false;
                }
            }
        }
    std::function<std::string(std::size_t, std::size_t)> paren = [&](std::size_t i, std::size_t j) -> std::string {
        if (i == j) return "A" + std::to_string(i);
        std::size_t k = r.s[i - 1][j - 1];
        return "(" + paren(i, k) + paren(k + 1, j) + ")";
    };
    r.cost = r.m[0][n - 1];
    r.parenthesization = paren(1, n);
    return r;
}

BigInt count_parenthesizations(std::size_t n) {
    if (n < 1) throw InputError("count_parenthesizations needs n >= 1");
    std::vector<BigInt> P(n + 1, 0);
    P[1] = 1;
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t i = 1; i < k; ++i) P[k] += P[i] * P[k - i];
    return P[n];
}

TriangulationResult polygon_triangulation(std::size_t vertices, const TriangleWeight& w) {
    if (vertices < 3) throw InputError("a polygon needs at least 3 vertices");
    std::size_t n = vertices - 1;  // chain length: vertices v_0..v_n
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1, 0));
    std::vector<std::vector<std::size_t>> s(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 1; i + len - 1 <= n; ++i) {
            std::size_t j = i + len - 1;
            bool first = true;
            for (std::size_t k = i; k < j; ++k) {
                Rational q = m[i][k] + m[k + 1][j] + w(i - 1, k, j);
                if (first || q < m[i][j]) {
                    m[i][j] = q;
                    s[i][j] = k;
                    first = false;
                }
            }
        }
    TriangulationResult r;
    r.cost = m[1][n];
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        if (i >= j) return;
        std::size_t k = s[i][j];
        r.triangles.push_back({i - 1, k, j});
        if (k - (i - 1) >= 2) r.diagonals.emplace_back(i - 1, k);
        if (j - k >= 2) r.diagonals.emplace_back(k, j);
        walk(i, k);
        walk(k + 1, j);
    };
    walk(1, n);
    // The side v_0 v_n is the polygon edge closing the chain, never a diagonal.
    std::erase_if(r.diagonals, [&](const auto& d) { return d.first == 0 && d.second == n; });
    std::sort(r.diagonals.begin(), r.diagonals.end());
    return r;
}

TriangleWeight area_weight(std::vector<Point> polygon) {
    return [poly = std::move(polygon)](std::size_t i, std::size_t k, std::size_t j) {
        const Point &a = poly.at(i), &b = poly.at(k), &c = poly.at(j);
        BigInt cross = BigInt(b.x - a.x) * (c.y - a.y) - BigInt(b.y - a.y) * (c.x - a.x);
        if (cross < 0) cross = -cross;
        return Rational(cross, 2);
    };
}

TriangleWeight l1_perimeter_weight(std::vector<Point> polygon) {
    return [poly = std::move(polygon)](std::size_t i, std::size_t k, std::size_t j) {
        auto d = [&](const Point& p, const Point& q) {
            return Rational(std::llabs(p.x - q.x) + std::llabs(p.y - q.y));
        };
        return d(poly.at(i), poly.at(k)) + d(poly.at(k), poly.at(j)) + d(poly.at(j), poly.at(i));
    };
}

TriangleWeight chain_weight(std::vector<std::int64_t> dims) {
    return [p = std::move(dims)](std::size_t i, std::size_t k, std::size_t j) {
        return Rational(BigInt(p.at(i)) * p.at(k) * p.at(j));
    };
}

}  // namespace combinlab
