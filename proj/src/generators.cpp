#include "combinlab/generators.hpp"

namespace combinlab {

namespace {

bool draw(std::uint64_t num, std::uint64_t den, Rng& rng) {
    if (den == 0) throw InputError("edge probability denominator must be positive");
    return rng.below(den) < num;
}

}  // namespace

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (draw(num, den, rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_weighted_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::int64_t wmin, std::int64_t wmax,
                            Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (draw(num, den, rng)) edges.push_back({u, v, Rational(rng.range(wmin, wmax))});
    return Graph(n, std::move(edges), true);
}

Graph random_connected_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::int64_t wmin, std::int64_t wmax,
                             Rng& rng) {
    // A random spanning tree first, then extra edges.
    std::vector<std::vector<bool>> has(n + 1, std::vector<bool>(n + 1, false));
    std::vector<Edge> edges;
    for (std::size_t v = 2; v <= n; ++v) {
        std::size_t u = 1 + static_cast<std::size_t>(rng.below(v - 1));
        has[u][v] = has[v][u] = true;
        edges.push_back({u, v, Rational(rng.range(wmin, wmax))});
    }
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (!has[u][v] && draw(num, den, rng)) edges.push_back({u, v, Rational(rng.range(wmin, wmax))});
    return Graph(n, std::move(edges), true);
}

Digraph random_digraph(std::size_t n, std::uint64_t num, std::uint64_t den, std::int64_t wmin, std::int64_t wmax,
                       Rng& rng) {
    std::vector<Edge> arcs;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = 1; v <= n; ++v)
            if (u != v && draw(num, den, rng)) arcs.push_back({u, v, Rational(rng.range(wmin, wmax))});
    return Digraph(n, std::move(arcs), true);
}

std::vector<std::pair<std::int64_t, std::int64_t>> random_points(std::size_t n, std::int64_t range, Rng& rng) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t x = rng.range(0, range);
        pts.emplace_back(x, rng.range(0, range));
    }
    return pts;
}

CostMatrix random_metric_tsp(std::size_t n, std::int64_t range, Rng& rng) {
    return l1_distance_matrix(random_points(n, range, rng));
}

CnfFormula random_cnf(std::size_t n, std::size_t r, std::size_t max_width, Rng& rng) {
    if (n == 0 && r > 0) throw InputError("clauses need at least one variable");
    CnfFormula f;
    f.n = n;
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t w = 1 + static_cast<std::size_t>(rng.below(max_width));
        std::vector<Literal> c;
        for (std::size_t t = 0; t < w; ++t) {
            std::size_t var = 1 + static_cast<std::size_t>(rng.below(n));
            c.push_back({var, rng.coin()});
        }
        f.clauses.push_back(std::move(c));
    }
    return f;
}

SetSystem random_set_system(std::size_t n, std::size_t m, Rng& rng) {
    if (m == 0 && n > 0) throw InputError("need at least one set to cover the elements");
    SetSystem s;
    s.n = n;
    std::vector<std::vector<bool>> in(m, std::vector<bool>(n + 1, false));
    for (std::size_t e = 1; e <= n; ++e) {
        in[rng.below(m)][e] = true;
        for (std::size_t i = 0; i < m; ++i)
            if (rng.below(3) == 0) in[i][e] = true;
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> set;
        for (std::size_t e = 1; e <= n; ++e)
            if (in[i][e]) set.push_back(e);
        s.sets.push_back(std::move(set));
    }
    return s;
}

KnapsackInstance random_knapsack(std::size_t n, std::int64_t max_value, std::int64_t max_volume, Rng& rng) {
    KnapsackInstance k;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        k.values.push_back(rng.range(1, max_value));
        k.volumes.push_back(rng.range(1, max_volume));
        total += k.volumes.back();
    }
    k.capacity = rng.range(0, total);
    return k;
}

std::vector<Rational> random_bin_sizes(std::size_t n, std::int64_t den, Rng& rng) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(Rational(rng.range(1, den), den));
    return out;
}

}  // namespace combinlab
