#include "combinlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace combinlab {

namespace {

void check_endpoints(std::size_t n, std::size_t u, std::size_t v) {
    if (u < 1 || u > n || v < 1 || v > n)
        throw InputError("vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
}

void sort_adjacency(std::vector<std::vector<Adjacent>>& adj) {
    for (auto& list : adj)
        std::sort(list.begin(), list.end(), [](const Adjacent& a, const Adjacent& b) { return a.vertex < b.vertex; });
}

std::optional<std::size_t> find_in(const std::vector<Adjacent>& list, std::size_t v) {
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Adjacent& a, std::size_t x) { return a.vertex < x; });
    if (it != list.end() && it->vertex == v) return it->edge;
    return std::nullopt;
}

std::vector<Edge> unweighted(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back({u, v, 1});
    return out;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), adj_(n + 1) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(n, unweighted(edges), false) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges, bool weighted)
    : n_(n), weighted_(weighted), edges_(std::move(edges)), adj_(n + 1) {
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        check_endpoints(n_, e.u, e.v);
        adj_[e.u].push_back({e.v, id});
        adj_[e.v].push_back({e.u, id});
    }
    sort_adjacency(adj_);
    std::size_t degree_sum = 0, odd = 0;
    for (std::size_t v = 1; v <= n_; ++v) {
        for (std::size_t k = 1; k < adj_[v].size(); ++k)
            if (adj_[v][k].vertex == adj_[v][k - 1].vertex)
                throw InputError("parallel edge " + std::to_string(v) + " " + std::to_string(adj_[v][k].vertex));
        degree_sum += adj_[v].size();
        odd += adj_[v].size() % 2;
    }
    if (degree_sum != 2 * edges_.size() || odd % 2 != 0) throw Error("handshake check failed");
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& a : adj_.at(v)) out.push_back(a.vertex);
    return out;
}

std::optional<std::size_t> Graph::edge_id(std::size_t u, std::size_t v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
    return find_in(adj_[u], v);
}

std::vector<std::vector<int>> Graph::adjacency_matrix() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (const auto& e : edges_) a[e.u - 1][e.v - 1] = a[e.v - 1][e.u - 1] = 1;
    return a;
}

std::vector<std::vector<int>> Graph::incidence_matrix() const {
    std::vector<std::vector<int>> b(n_, std::vector<int>(edges_.size(), 0));
    for (std::size_t id = 0; id < edges_.size(); ++id) b[edges_[id].u - 1][id] = b[edges_[id].v - 1][id] = 1;
    return b;
}

Graph Graph::complement() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 1; u <= n_; ++u)
        for (std::size_t v = u + 1; v <= n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return Graph(n_, out);
}

// ---------------------------------------------------------------------------

Digraph::Digraph(std::size_t n) : n_(n), out_(n + 1), in_(n + 1) {}

Digraph::Digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs)
    : Digraph(n, unweighted(arcs), false) {}

Digraph::Digraph(std::size_t n, std::vector<Edge> arcs, bool weighted)
    : n_(n), weighted_(weighted), arcs_(std::move(arcs)), out_(n + 1), in_(n + 1) {
    for (std::size_t id = 0; id < arcs_.size(); ++id) {
        const Edge& a = arcs_[id];
        check_endpoints(n_, a.u, a.v);
        out_[a.u].push_back({a.v, id});
        in_[a.v].push_back({a.u, id});
    }
    sort_adjacency(out_);
    sort_adjacency(in_);
    for (std::size_t v = 1; v <= n_; ++v)
        for (std::size_t k = 1; k < out_[v].size(); ++k)
            if (out_[v][k].vertex == out_[v][k - 1].vertex)
                throw InputError("parallel arc " + std::to_string(v) + " " + std::to_string(out_[v][k].vertex));
}

std::vector<std::size_t> Digraph::successors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& a : out_.at(v)) out.push_back(a.vertex);
    return out;
}

std::optional<std::size_t> Digraph::arc_id(std::size_t u, std::size_t v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
    return find_in(out_[u], v);
}

Digraph Digraph::transpose() const {
    std::vector<Edge> rev;
    rev.reserve(arcs_.size());
    for (const auto& a : arcs_) rev.push_back({a.v, a.u, a.w});
    return Digraph(n_, std::move(rev), weighted_);
}

std::vector<std::vector<int>> Digraph::adjacency_matrix() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (const auto& e : arcs_) a[e.u - 1][e.v - 1] = 1;
    return a;
}

// ---------------------------------------------------------------------------

namespace {

struct Parsed {
    std::size_t n = 0;
    std::vector<Edge> edges;
    bool weighted = false;
};

std::size_t parse_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + tok + "'");
    return static_cast<std::size_t>(std::stoull(tok));
}

Parsed parse_edges(const std::string& text, const std::string& header, const std::string& tag) {
    Parsed p;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0, declared = 0;
    bool seen_header = false;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!seen_header) {
            if (tok[0] != header || tok.size() != 3)
                throw InputError("line " + std::to_string(line) + ": expected '" + header + " <n> <m>'");
            p.n = parse_count(tok[1], line);
            declared = parse_count(tok[2], line);
            seen_header = true;
            continue;
        }
        if (tok[0] != tag || (tok.size() != 3 && tok.size() != 4))
            throw InputError("line " + std::to_string(line) + ": expected '" + tag + " <u> <v> [w]'");
        Edge e;
        e.u = parse_count(tok[1], line);
        e.v = parse_count(tok[2], line);
        if (tok.size() == 4) {
            e.w = parse_rational(tok[3]);
            p.weighted = true;
        }
        p.edges.push_back(e);
    }
    if (!seen_header) throw InputError("missing '" + header + "' header");
    if (p.edges.size() != declared)
        throw InputError("header declares " + std::to_string(declared) + " edges, found " +
                         std::to_string(p.edges.size()));
    return p;
}

template <class G>
std::string write_edges(const G& g, const std::vector<Edge>& edges, const char* header, const char* tag) {
    std::ostringstream out;
    out << header << ' ' << g.n() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) {
        out << tag << ' ' << e.u << ' ' << e.v;
        if (g.weighted()) out << ' ' << to_string(e.w);
        out << '\n';
    }
    return out.str();
}

}  // namespace

Graph parse_graph(const std::string& text) {
    Parsed p = parse_edges(text, "p", "e");
    return Graph(p.n, std::move(p.edges), p.weighted);
}

Digraph parse_digraph(const std::string& text) {
    Parsed p = parse_edges(text, "pd", "a");
    return Digraph(p.n, std::move(p.edges), p.weighted);
}

std::string to_text(const Graph& g) { return write_edges(g, g.edges(), "p", "e"); }
std::string to_text(const Digraph& g) { return write_edges(g, g.arcs(), "pd", "a"); }

// ---------------------------------------------------------------------------

BfsForest bfs_forest(const Graph& g) {
    BfsForest f;
    std::size_t n = g.n();
    f.parent.assign(n + 1, 0);
    std::vector<bool> seen(n + 1, false);
    for (std::size_t s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        f.roots.push_back(s);
        seen[s] = true;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            f.order.push_back(v);
            for (const auto& a : g.adj(v)) {
                if (seen[a.vertex]) continue;
                seen[a.vertex] = true;
                f.parent[a.vertex] = v;
                f.tree_edges.emplace_back(v, a.vertex);
                queue.push_back(a.vertex);
            }
        }
    }
    return f;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    BfsForest f = bfs_forest(g);
    std::vector<std::size_t> root(g.n() + 1, 0);
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(g.n() + 1, 0);
    for (std::size_t v : f.order) {
        std::size_t r = f.parent[v] == 0 ? v : root[f.parent[v]];
        root[v] = r;
        if (r == v) {
            block_of[v] = blocks.size();
            blocks.emplace_back();
        } else {
            block_of[v] = block_of[r];
        }
        blocks[block_of[v]].push_back(v);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

// Odd degree, then connectivity of the positive-degree part.
std::optional<EulerResult> euler_precheck(const Graph& g) {
    for (std::size_t v = 1; v <= g.n(); ++v)
        if (g.degree(v) % 2 == 1) {
            EulerResult r;
            r.status = EulerResult::Status::OddDegree;
            r.vertex = v;
            return r;
        }
    std::size_t blocks_with_edges = 0;
    for (const auto& b : connected_components(g))
        if (g.degree(b[0]) > 0 || b.size() > 1) ++blocks_with_edges;
    if (blocks_with_edges > 1) {
        EulerResult r;
        r.status = EulerResult::Status::Disconnected;
        return r;
    }
    return std::nullopt;
}

}  // namespace

EulerResult euler_cycle(const Graph& g) {
    if (auto bad = euler_precheck(g)) return *bad;
    EulerResult r;
    if (g.m() == 0) return r;
    std::vector<bool> used(g.m(), false);
    std::vector<std::size_t> next_at(g.n() + 1, 0);  // scan pointer into adj lists
    auto unused_edge = [&](std::size_t v) -> const Adjacent* {
        auto& k = next_at[v];
        const auto& list = g.adj(v);
        while (k < list.size() && used[list[k].edge]) ++k;
        return k < list.size() ? &list[k] : nullptr;
    };
    // Closed trail from s: always the smallest unused edge, and keep going
    // through s while it still has one.
    auto closed_trail = [&](std::size_t s) {
        std::vector<std::size_t> trail{s};
        std::size_t v = s;
        while (const Adjacent* a = unused_edge(v)) {
            used[a->edge] = true;
            v = a->vertex;
            trail.push_back(v);
        }
        return trail;
    };
    std::size_t start = 1;
    while (g.degree(start) == 0) ++start;
    std::vector<std::size_t> walk = closed_trail(start);
    for (std::size_t pos = 0; pos < walk.size(); ++pos) {
        if (!unused_edge(walk[pos])) continue;
        std::vector<std::size_t> sub = closed_trail(walk[pos]);
        walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(pos) + 1, sub.begin() + 1, sub.end());
        --pos;  // the vertex at pos may still have edges
    }
    r.walk = std::move(walk);
    return r;
}

EulerResult euler_fleury(const Graph& g) {
    EulerResult r;
    std::size_t n = g.n();
    std::vector<bool> used(g.m(), false);
    std::size_t remaining = g.m();
    auto reachable = [&](std::size_t from, std::size_t to) {
        std::vector<bool> seen(n + 1, false);
        std::vector<std::size_t> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (const auto& a : g.adj(v))
                if (!used[a.edge] && !seen[a.vertex]) {
                    seen[a.vertex] = true;
                    stack.push_back(a.vertex);
                }
        }
        return false;
    };
    std::size_t start = 0;
    for (std::size_t v = 1; v <= n && start == 0; ++v)
        if (g.degree(v) % 2 == 1) start = v;
    if (start == 0)
        for (std::size_t v = 1; v <= n && start == 0; ++v)
            if (g.degree(v) > 0) start = v;
    if (start == 0) return r;
    std::vector<std::size_t> walk{start};
    std::size_t v = start;
    while (true) {
        std::vector<const Adjacent*> options;
        for (const auto& a : g.adj(v))
            if (!used[a.edge]) options.push_back(&a);
        if (options.empty()) break;
        const Adjacent* pick = options[0];
        if (options.size() > 1) {
            for (const Adjacent* a : options) {
                used[a->edge] = true;
                bool bridge = !reachable(a->vertex, v);
                used[a->edge] = false;
                if (!bridge) {
                    pick = a;
                    break;
                }
            }
        }
        used[pick->edge] = true;
        --remaining;
        v = pick->vertex;
        walk.push_back(v);
    }
    if (remaining == 0 && walk.back() == walk.front()) {
        r.walk = std::move(walk);
        return r;
    }
    if (walk.back() != walk.front()) {
        r.status = EulerResult::Status::OddDegree;
        r.vertex = start;
    } else {
        r.status = EulerResult::Status::Disconnected;
    }
    return r;
}

std::string to_string(const EulerResult& r) {
    switch (r.status) {
        case EulerResult::Status::Ok: {
            std::string s;
            for (std::size_t i = 0; i < r.walk.size(); ++i) s += (i ? "," : "") + std::to_string(r.walk[i]);
            return s;
        }
        case EulerResult::Status::OddDegree: return "not Eulerian: odd degree at vertex " + std::to_string(r.vertex);
        case EulerResult::Status::Disconnected: return "not Eulerian: edges span more than one component";
    }
    return "?";
}

// ---------------------------------------------------------------------------

DfsRecord dfs(const std::vector<std::vector<std::size_t>>& adjacency, const std::vector<std::size_t>& order) {
    std::size_t n = adjacency.empty() ? 0 : adjacency.size() - 1;
    if (order.size() != n) throw InputError("dfs order must be a permutation of 1..n");
    DfsRecord rec;
    rec.color.assign(n + 1, 0);
    rec.d.assign(n + 1, 0);
    rec.f.assign(n + 1, 0);
    rec.parent.assign(n + 1, 0);
    std::vector<bool> listed(n + 1, false);
    for (std::size_t v : order) {
        if (v < 1 || v > n || listed[v]) throw InputError("dfs order must be a permutation of 1..n");
        listed[v] = true;
    }
    std::vector<std::size_t> cursor(n + 1, 0);
    for (std::size_t s : order) {
        if (rec.color[s] != 0) continue;
        rec.roots.push_back(s);
        rec.trees.emplace_back();
        std::vector<std::size_t> stack{s};
        rec.color[s] = 1;
        rec.d[s] = ++rec.clock;
        rec.trees.back().push_back(s);
        while (!stack.empty()) {
            std::size_t u = stack.back();
            if (cursor[u] < adjacency[u].size()) {
                std::size_t v = adjacency[u][cursor[u]++];
                if (rec.color[v] == 0) {
                    rec.color[v] = 1;
                    rec.parent[v] = u;
                    rec.d[v] = ++rec.clock;
                    rec.trees.back().push_back(v);
                    stack.push_back(v);
                }
            } else {
                rec.color[u] = 2;
                rec.f[u] = ++rec.clock;
                stack.pop_back();
            }
        }
    }
    return rec;
}

namespace {

std::vector<std::size_t> ascending(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    return order;
}

std::vector<std::vector<std::size_t>> lists(const Digraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.n() + 1);
    for (std::size_t v = 1; v <= g.n(); ++v) adj[v] = g.successors(v);
    return adj;
}

}  // namespace

DfsRecord dfs(const Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.n() + 1);
    for (std::size_t v = 1; v <= g.n(); ++v) adj[v] = g.neighbors(v);
    return dfs(adj, ascending(g.n()));
}

DfsRecord dfs(const Digraph& g) { return dfs(lists(g), ascending(g.n())); }

DfsRecord dfs(const Digraph& g, const std::vector<std::size_t>& order) { return dfs(lists(g), order); }

std::vector<std::vector<std::size_t>> scc_kosaraju(const Digraph& g) { return scc_kosaraju(g, ascending(g.n())); }

std::vector<std::vector<std::size_t>> scc_kosaraju(const Digraph& g, const std::vector<std::size_t>& first_order) {
    DfsRecord first = dfs(g, first_order);
    std::vector<std::size_t> order = ascending(g.n());
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return first.f[a] > first.f[b]; });
    DfsRecord second = dfs(g.transpose(), order);
    auto comps = second.trees;
    for (auto& c : comps) std::sort(c.begin(), c.end());
    return comps;
}

}  // namespace combinlab
