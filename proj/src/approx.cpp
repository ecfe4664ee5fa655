#include "combinlab/approx.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "combinlab/dp.hpp"
#include "combinlab/paths_mst.hpp"

namespace combinlab {

// ---- vertex cover ---------------------------------------------------------

std::vector<std::size_t> vc_matching_2approx(const Graph& g) {
    std::vector<bool> in(g.n() + 1, false);
    for (const auto& e : g.edges())
        if (!in[e.u] && !in[e.v]) in[e.u] = in[e.v] = true;
    std::vector<std::size_t> out;
    for (std::size_t v = 1; v <= g.n(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

std::vector<std::size_t> vc_degree_greedy(const Graph& g) {
    std::vector<std::size_t> deg(g.n() + 1, 0);
    std::vector<bool> gone(g.n() + 1, false);
    for (std::size_t v = 1; v <= g.n(); ++v) deg[v] = g.degree(v);
    std::size_t left = g.m();
    std::vector<std::size_t> out;
    while (left > 0) {
        std::size_t best = 0;
        for (std::size_t v = 1; v <= g.n(); ++v)
            if (!gone[v] && (best == 0 || deg[v] > deg[best])) best = v;
        gone[best] = true;
        out.push_back(best);
        for (const auto& a : g.adj(best))
            if (!gone[a.vertex]) {
                --deg[a.vertex];
                --left;
            }
        deg[best] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

GreedyCounterexample vc_greedy_counterexample(std::size_t n) {
    if (n < 1) throw InputError("counterexample needs n >= 1");
    std::size_t gadgets = 0;
    for (std::size_t k = 1; k <= n; ++k) gadgets += n / k;
    GreedyCounterexample r;
    r.greedy_size = gadgets;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t id = 0;
    for (std::size_t k = n; k >= 1; --k)
        for (std::size_t t = 0; t < n / k; ++t) {
            ++id;
            for (std::size_t c = t * k + 1; c <= t * k + k; ++c) edges.emplace_back(id, gadgets + c);
        }
    r.g = Graph(gadgets + n, edges);
    for (std::size_t c = 1; c <= n; ++c) r.core.push_back(gadgets + c);
    return r;
}

std::size_t vc_optimum(const Graph& g) {
    if (g.n() > 64) throw LimitError("instance too large for oracle (vertex cover beyond 64 vertices)");
    std::vector<bool> in(g.n() + 1, false);
    std::size_t best = g.n();
    std::function<void(std::size_t)> go = [&](std::size_t used) {
        if (used >= best) return;
        auto it = std::find_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return !in[e.u] && !in[e.v]; });
        if (it == g.edges().end()) {
            best = used;
            return;
        }
        for (std::size_t v : {it->u, it->v}) {
            in[v] = true;
            go(used + 1);
            in[v] = false;
        }
    };
    go(0);
    return best;
}

// ---- set cover ------------------------------------------------------------

std::vector<std::size_t> set_cover_greedy(const SetSystem& s) {
    s.validate();
    std::vector<bool> covered(s.n + 1, false), used(s.sets.size(), false);
    std::size_t left = s.n;
    std::vector<std::size_t> out;
    while (left > 0) {
        std::size_t best = s.sets.size(), gain = 0;
        for (std::size_t i = 0; i < s.sets.size(); ++i) {
            if (used[i]) continue;
            std::size_t g = static_cast<std::size_t>(
                std::count_if(s.sets[i].begin(), s.sets[i].end(), [&](std::size_t e) { return !covered[e]; }));
            if (g > gain) {
                gain = g;
                best = i;
            }
        }
        if (gain == 0) throw InputError("family does not cover the ground set");
        used[best] = true;
        out.push_back(best + 1);
        for (auto e : s.sets[best])
            if (!covered[e]) {
                covered[e] = true;
                --left;
            }
    }
    return out;
}

std::size_t set_cover_optimum(const SetSystem& s) {
    OracleLimits lim;
    lim.elements = 64;
    for (std::size_t k = 0; k <= s.sets.size(); ++k)
        if (brute_force_decide(SetCover{s, k}, lim)) return k;
    throw InputError("family does not cover the ground set");
}

std::size_t max_set_size(const SetSystem& s) {
    std::size_t m = 0;
    for (const auto& set : s.sets) m = std::max(m, set.size());
    return m;
}

// ---- TSP ------------------------------------------------------------------

void check_symmetric(const CostMatrix& c) {
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) throw InputError("cost matrix must be square");
        if (c[i][i] != 0) throw InputError("cost matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (c[i][j] < 0) throw InputError("costs must be non-negative");
            if (c[i][j] != c[j][i]) throw InputError("cost matrix must be symmetric");
        }
    }
}

bool satisfies_triangle(const CostMatrix& c) {
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (c[i][j] > c[i][k] + c[k][j]) return false;
    return true;
}

MetricTsp::MetricTsp(CostMatrix c) : c_(std::move(c)) {
    check_symmetric(c_);
    if (!satisfies_triangle(c_)) throw InputError("cost matrix violates the triangle inequality");
}

Rational tour_length(const CostMatrix& c, const std::vector<std::size_t>& tour) {
    Rational len = 0;
    for (std::size_t i = 0; i < tour.size(); ++i) len += c[tour[i] - 1][tour[(i + 1) % tour.size()] - 1];
    return len;
}

TspTour tsp_optimum(const CostMatrix& c) {
    std::size_t n = c.size();
    if (n > 16) throw LimitError("instance too large for oracle (Held-Karp beyond 16 cities)");
    TspTour r;
    if (n == 0) return r;
    if (n == 1) {
        r.tour = {1};
        return r;
    }
    std::size_t full = std::size_t{1} << (n - 1);
    std::vector<std::vector<std::optional<Rational>>> best(full, std::vector<std::optional<Rational>>(n));
    std::vector<std::vector<std::size_t>> from(full, std::vector<std::size_t>(n, 0));
    for (std::size_t j = 1; j < n; ++j) best[std::size_t{1} << (j - 1)][j] = c[0][j];
    for (std::size_t mask = 1; mask < full; ++mask)
        for (std::size_t j = 1; j < n; ++j) {
            if (!(mask >> (j - 1) & 1) || !best[mask][j]) continue;
            for (std::size_t x = 1; x < n; ++x) {
                if (mask >> (x - 1) & 1) continue;
                std::size_t next = mask | (std::size_t{1} << (x - 1));
                Rational cand = *best[mask][j] + c[j][x];
                if (!best[next][x] || cand < *best[next][x]) {
                    best[next][x] = cand;
                    from[next][x] = j;
                }
            }
        }
    std::size_t last = 0;
    for (std::size_t j = 1; j < n; ++j) {
        Rational cand = *best[full - 1][j] + c[j][0];
        if (last == 0 || cand < r.length) {
            r.length = cand;
            last = j;
        }
    }
    std::size_t mask = full - 1, j = last;
    while (j != 0) {
        r.tour.push_back(j + 1);
        std::size_t prev = from[mask][j];
        mask &= ~(std::size_t{1} << (j - 1));
        j = prev;
    }
    r.tour.push_back(1);
    std::reverse(r.tour.begin(), r.tour.end());
    return r;
}

namespace {

Graph complete_graph(const CostMatrix& c) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= c.size(); ++i)
        for (std::size_t j = i + 1; j <= c.size(); ++j) edges.push_back({i, j, c[i - 1][j - 1]});
    return Graph(c.size(), std::move(edges), true);
}

TspTour shortcut(const CostMatrix& c, const std::vector<std::size_t>& walk) {
    TspTour r;
    std::vector<bool> seen(c.size() + 1, false);
    for (auto v : walk)
        if (!seen[v]) {
            seen[v] = true;
            r.tour.push_back(v);
        }
    r.length = tour_length(c, r.tour);
    return r;
}

// Closed Euler walk from vertex 1 of a connected multigraph with even degrees.
std::vector<std::size_t> euler_walk(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n + 1);  // (neighbour, edge)
    for (std::size_t id = 0; id < edges.size(); ++id) {
        adj[edges[id].first].push_back({edges[id].second, id});
        adj[edges[id].second].push_back({edges[id].first, id});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<bool> used(edges.size(), false);
    std::vector<std::size_t> next(n + 1, 0), stack{1}, walk;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
        if (next[v] == adj[v].size()) {
            walk.push_back(v);
            stack.pop_back();
        } else {
            used[adj[v][next[v]].second] = true;
            stack.push_back(adj[v][next[v]].first);
        }
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

std::vector<std::pair<std::size_t, std::size_t>> mst_edges(const CostMatrix& c) {
    Graph k = complete_graph(c);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto id : prim(k).edges) out.emplace_back(k.edge(id).u, k.edge(id).v);
    return out;
}

void check_tour_input(const CostMatrix& c) {
    check_symmetric(c);
    if (c.size() < 3) throw InputError("tour heuristics need at least 3 cities");
}

}  // namespace

TspTour tsp_double_tree(const CostMatrix& c) {
    check_tour_input(c);
    auto tree = mst_edges(c);
    auto doubled = tree;
    doubled.insert(doubled.end(), tree.begin(), tree.end());
    return shortcut(c, euler_walk(c.size(), doubled));
}

TspTour tsp_double_tree(const MetricTsp& inst) { return tsp_double_tree(inst.cost()); }

Matching min_perfect_matching_exact(const std::vector<std::size_t>& vertices, const CostMatrix& c) {
    std::size_t k = vertices.size();
    if (k % 2 != 0) throw InputError("perfect matching needs an even vertex count");
    if (k > 20) throw LimitError("exact matching limited to 20 vertices; use the double-tree heuristic instead");
    for (auto v : vertices)
        if (v < 1 || v > c.size()) throw InputError("matching vertex out of range");
    std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<std::optional<Rational>> memo(full + 1);
    std::vector<std::size_t> partner(full + 1, 0);
    std::function<Rational(std::size_t)> solve = [&](std::size_t mask) -> Rational {
        if (mask == full) return 0;
        if (memo[mask]) return *memo[mask];
        std::size_t i = 0;
        while (mask >> i & 1) ++i;
        std::optional<Rational> best;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (mask >> j & 1) continue;
            Rational cand = c[vertices[i] - 1][vertices[j] - 1] + solve(mask | (std::size_t{1} << i) | (std::size_t{1} << j));
            if (!best || cand < *best) {
                best = cand;
                partner[mask] = j;
            }
        }
        memo[mask] = *best;
        return *best;
    };
    Matching m;
    m.weight = solve(0);
    std::size_t mask = 0;
    while (mask != full) {
        std::size_t i = 0;
        while (mask >> i & 1) ++i;
        std::size_t j = partner[mask];
        m.pairs.emplace_back(std::min(vertices[i], vertices[j]), std::max(vertices[i], vertices[j]));
        mask |= (std::size_t{1} << i) | (std::size_t{1} << j);
    }
    return m;
}

TspTour tsp_christofides(const CostMatrix& c) {
    check_tour_input(c);
    auto tree = mst_edges(c);
    std::vector<std::size_t> deg(c.size() + 1, 0);
    for (auto [u, v] : tree) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<std::size_t> odd;
    for (std::size_t v = 1; v <= c.size(); ++v)
        if (deg[v] % 2) odd.push_back(v);
    auto multigraph = tree;
    for (const auto& p : min_perfect_matching_exact(odd, c).pairs) multigraph.push_back(p);
    return shortcut(c, euler_walk(c.size(), multigraph));
}

TspTour tsp_christofides(const MetricTsp& inst) { return tsp_christofides(inst.cost()); }

CostMatrix tsp_gap_instance(const Graph& g, const Rational& eps) {
    if (eps < 0) throw InputError("eps must be non-negative");
    std::size_t n = g.n();
    Rational far = (1 + eps) * Rational(n) + 1;
    CostMatrix c(n, std::vector<Rational>(n, far));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 0;
    for (const auto& e : g.edges()) c[e.u - 1][e.v - 1] = c[e.v - 1][e.u - 1] = 1;
    return c;
}

CostMatrix l1_distance_matrix(const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
    std::size_t n = points.size();
    CostMatrix c(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c[i][j] = Rational(std::llabs(points[i].first - points[j].first) + std::llabs(points[i].second - points[j].second));
    return c;
}

// ---- max cut --------------------------------------------------------------

std::size_t cut_size(const Graph& g, const std::vector<bool>& side) {
    if (side.size() != g.n()) throw InputError("cut side vector has wrong length");
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(),
                                                  [&](const Edge& e) { return side[e.u - 1] != side[e.v - 1]; }));
}

CutResult max_cut_local_search(const Graph& g) {
    CutResult r;
    r.side.assign(g.n(), false);
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t v = 1; v <= g.n() && !moved; ++v) {
            std::size_t same = 0, other = 0;
            for (const auto& a : g.adj(v)) (r.side[a.vertex - 1] == r.side[v - 1] ? same : other)++;
            if (same > other) {
                r.side[v - 1] = !r.side[v - 1];
                ++r.moves;
                moved = true;
            }
        }
    }
    r.cut = cut_size(g, r.side);
    return r;
}

std::size_t max_cut_optimum(const Graph& g) {
    std::size_t n = g.n();
    if (n > 24) throw LimitError("instance too large for oracle (max cut beyond 24 vertices)");
    if (n <= 1) return 0;
    std::size_t best = 0;
    // Vertex n stays on the empty side.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::size_t cut = 0;
        for (const auto& e : g.edges()) {
            bool a = e.u < n && (mask >> (e.u - 1) & 1), b = e.v < n && (mask >> (e.v - 1) & 1);
            cut += a != b;
        }
        best = std::max(best, cut);
    }
    return best;
}

// ---- knapsack -------------------------------------------------------------

int fptas_shift(std::int64_t c0, std::size_t n, const Rational& eps) {
    if (eps <= 0) throw InputError("eps must be positive");
    if (n == 0 || c0 <= 0) return 0;
    Rational bound = Rational(c0) * eps / (Rational(n) * (1 + eps));
    if (bound < 1) return 0;
    BigInt whole = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
    return static_cast<int>(boost::multiprecision::msb(whole));
}

FptasResult knapsack_fptas(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& v,
                           std::int64_t capacity, const Rational& eps) {
    if (c.size() != v.size()) throw InputError("values and volumes differ in length");
    if (capacity < 0) throw InputError("capacity must be non-negative");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < 1 || v[i] < 0) throw InputError("values must be positive and volumes non-negative");
    std::vector<std::size_t> keep;
    std::int64_t c0 = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (v[i] <= capacity) {
            keep.push_back(i);
            c0 = std::max(c0, c[i]);
        }
    FptasResult r;
    r.b = fptas_shift(c0, c.size(), eps);
    std::vector<std::int64_t> tc, tv;
    for (auto i : keep) {
        tc.push_back(c[i] >> r.b);
        tv.push_back(v[i]);
    }
    auto exact = knapsack_pareto(tc, tv, capacity);
    for (auto j : exact.set) {
        std::size_t i = keep[j - 1];
        r.set.push_back(i + 1);
        r.value += c[i];
        r.volume += v[i];
    }
    return r;
}

// ---- bin packing ----------------------------------------------------------

namespace {

void check_sizes(const std::vector<Rational>& sizes) {
    for (const auto& s : sizes)
        if (s < 0 || s > 1) throw InputError("item size " + to_string(s) + " outside [0, 1]");
}

}  // namespace

Packing bin_pack_first_fit(const std::vector<Rational>& sizes) {
    check_sizes(sizes);
    Packing p;
    for (const auto& s : sizes) {
        std::size_t b = 0;
        while (b < p.load.size() && p.load[b] + s > 1) ++b;
        if (b == p.load.size()) p.load.push_back(0);
        p.load[b] += s;
        p.bin.push_back(b + 1);
    }
    return p;
}

std::size_t bin_pack_optimum(const std::vector<Rational>& sizes) {
    check_sizes(sizes);
    if (sizes.size() > 12) throw LimitError("instance too large for oracle (bin packing beyond 12 items)");
    std::vector<Rational> items = sizes;
    std::sort(items.begin(), items.end(), std::greater<>());
    std::size_t best = items.size();
    std::vector<Rational> load;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (load.size() >= best) return;
        if (i == items.size()) {
            best = load.size();
            return;
        }
        for (std::size_t b = 0; b < load.size(); ++b) {
            if (load[b] + items[i] > 1) continue;
            load[b] += items[i];
            go(i + 1);
            load[b] -= items[i];
        }
        load.push_back(items[i]);
        go(i + 1);
        load.pop_back();
    };
    if (items.empty()) return 0;
    go(0);
    return best;
}

}  // namespace combinlab
