#include "combinlab/paths_mst.hpp"

#include <algorithm>
#include <numeric>

namespace combinlab {

bool dist_less(const Distance& a, const Distance& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
}

Distance dist_add(const Distance& a, const Rational& w) {
    if (!a) return std::nullopt;
    return *a + w;
}

Distance dist_add(const Distance& a, const Distance& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

std::string to_string(const Distance& d) { return d ? to_string(*d) : std::string("inf"); }

ShortestPaths dijkstra(const Digraph& g, std::size_t source) {
    std::size_t n = g.n();
    if (source < 1 || source > n) throw InputError("source out of range");
    for (const auto& a : g.arcs())
        if (a.w < 0) throw InputError("Dijkstra requires non-negative weights");
    ShortestPaths sp;
    sp.source = source;
    sp.dist.assign(n + 1, std::nullopt);
    sp.pred.assign(n + 1, 0);
    std::vector<bool> permanent(n + 1, false);
    sp.dist[source] = Rational(0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = 0;
        for (std::size_t v = 1; v <= n; ++v)
            if (!permanent[v] && sp.dist[v] && (p == 0 || dist_less(sp.dist[v], sp.dist[p]))) p = v;
        if (p == 0) break;
        permanent[p] = true;
        sp.settled.push_back(p);
        for (const auto& a : g.out(p)) {
            if (permanent[a.vertex]) continue;
            Distance cand = dist_add(sp.dist[p], g.arc(a.edge).w);
            if (dist_less(cand, sp.dist[a.vertex])) {
                sp.dist[a.vertex] = cand;
                sp.pred[a.vertex] = p;
            }
        }
    }
    return sp;
}

std::vector<std::size_t> path_to(const ShortestPaths& sp, std::size_t target) {
    if (target < 1 || target >= sp.dist.size()) throw InputError("target out of range");
    if (!sp.dist[target]) return {};
    std::vector<std::size_t> path{target};
    while (path.back() != sp.source) path.push_back(sp.pred[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

FloydTables floyd_warshall(const Digraph& g) {
    std::size_t n = g.n();
    FloydTables t;
    t.n = n;
    t.dist.assign(n, std::vector<Distance>(n, std::nullopt));
    t.next.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        t.dist[i][i] = Rational(0);
        t.next[i][i] = i + 1;
    }
    for (const auto& a : g.arcs()) {
        if (dist_less(Distance(a.w), t.dist[a.u - 1][a.v - 1])) {
            t.dist[a.u - 1][a.v - 1] = a.w;
            t.next[a.u - 1][a.v - 1] = a.v;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!t.dist[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                Distance via = dist_add(t.dist[i][k], t.dist[k][j]);
                if (dist_less(via, t.dist[i][j])) {
                    t.dist[i][j] = via;
                    t.next[i][j] = t.next[i][k];
                }
            }
        }
    // d(i,i) < 0 alone can miss vertices that only reach a negative cycle
    // through a detour; close over mutual reachability.
    std::vector<std::size_t> seed;
    for (std::size_t i = 0; i < n; ++i)
        if (*t.dist[i][i] < 0) seed.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k : seed)
            if (t.dist[i][k] && t.dist[k][i]) {
                t.negative.push_back(i + 1);
                break;
            }
    return t;
}

std::vector<std::size_t> reconstruct_path(const FloydTables& t, std::size_t i, std::size_t j) {
    if (i < 1 || i > t.n || j < 1 || j > t.n) throw InputError("vertex out of range");
    if (t.z(i, j) == 0) throw InputError("no path from " + std::to_string(i) + " to " + std::to_string(j));
    for (std::size_t k : t.negative)
        if (t.d(i, k) && t.d(k, j))
            throw InputError("path " + std::to_string(i) + "-" + std::to_string(j) + " runs through a negative cycle");
    std::vector<std::size_t> path{i};
    while (path.back() != j) {
        path.push_back(t.z(path.back(), j));
        if (path.size() > t.n) throw Error("successor table has a cycle");
    }
    return path;
}

std::vector<std::vector<bool>> transitive_closure(const Digraph& g) {
    std::size_t n = g.n();
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = true;
    for (const auto& a : g.arcs()) c[a.u - 1][a.v - 1] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (c[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (c[k][j]) c[i][j] = true;
    return c;
}

Digraph to_directed(const Graph& g) {
    std::vector<Edge> arcs;
    arcs.reserve(2 * g.m());
    for (const auto& e : g.edges()) {
        arcs.push_back({e.u, e.v, e.w});
        arcs.push_back({e.v, e.u, e.w});
    }
    return Digraph(g.n(), std::move(arcs), g.weighted());
}

UndirectedPath undirected_shortest_path(const Graph& g, std::size_t u, std::size_t v) {
    ShortestPaths sp = dijkstra(to_directed(g), u);
    if (v < 1 || v > g.n()) throw InputError("target out of range");
    return {sp.dist[v], path_to(sp, v)};
}

MstResult prim(const Graph& g) {
    std::size_t n = g.n();
    MstResult r;
    if (n == 0) return r;
    std::vector<bool> in_tree(n + 1, false);
    std::vector<std::size_t> nearest(n + 1, 0);   // u*
    std::vector<Distance> beta(n + 1, std::nullopt);
    std::vector<std::size_t> via(n + 1, 0);       // edge id realising beta
    auto relax = [&](std::size_t v) {
        for (const auto& a : g.adj(v)) {
            if (in_tree[a.vertex]) continue;
            const Rational& w = g.edge(a.edge).w;
            if (!beta[a.vertex] || *beta[a.vertex] > w) {
                beta[a.vertex] = w;
                nearest[a.vertex] = v;
                via[a.vertex] = a.edge;
            }
        }
    };
    in_tree[1] = true;
    r.trace.push_back({1, 0, 0});
    relax(1);
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t u = 0;
        for (std::size_t v = 1; v <= n; ++v)
            if (!in_tree[v] && beta[v] && (u == 0 || *beta[v] < *beta[u])) u = v;
        if (u == 0) throw InputError("graph not connected");
        in_tree[u] = true;
        r.edges.push_back(via[u]);
        r.weight += *beta[u];
        r.trace.push_back({u, nearest[u], *beta[u]});
        relax(u);
    }
    return r;
}

MstResult kruskal(const Graph& g) {
    std::size_t n = g.n();
    MstResult r;
    std::vector<std::size_t> ids(g.m());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    auto key = [&](std::size_t id) {
        const Edge& e = g.edge(id);
        return std::make_tuple(e.w, std::min(e.u, e.v), std::max(e.u, e.v));
    };
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    // Component labels l(u); the smaller block is relabelled.
    std::vector<std::size_t> label(n + 1);
    std::vector<std::vector<std::size_t>> members(n + 1);
    for (std::size_t v = 1; v <= n; ++v) {
        label[v] = v;
        members[v] = {v};
    }
    for (std::size_t id : ids) {
        if (r.edges.size() + 1 == n) break;
        const Edge& e = g.edge(id);
        std::size_t a = label[e.u], b = label[e.v];
        if (a == b) continue;
        if (members[a].size() < members[b].size()) std::swap(a, b);
        for (std::size_t v : members[b]) {
            label[v] = a;
            members[a].push_back(v);
        }
        members[b].clear();
        r.edges.push_back(id);
        r.weight += e.w;
    }
    if (n > 0 && r.edges.size() + 1 != n) throw InputError("graph not connected");
    return r;
}

MstResult max_spanning_tree(const Graph& g) {
    std::vector<Edge> neg = g.edges();
    for (auto& e : neg) e.w = -e.w;
    MstResult r = kruskal(Graph(g.n(), std::move(neg), true));
    r.weight = -r.weight;
    return r;
}

}  // namespace combinlab
