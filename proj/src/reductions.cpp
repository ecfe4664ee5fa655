#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "combinlab/complexity.hpp"
#include "combinlab/paths_mst.hpp"

namespace combinlab {

namespace {

template <class T>
const T& need(const Witness& w, const char* shape) {
    const T* p = std::get_if<T>(&w);
    if (!p) throw InputError(std::string("malformed witness: expected ") + shape + ", got " + witness_name(w));
    return *p;
}

template <class T>
const T& need(const ProblemInstance& p, const char* tag) {
    const T* x = std::get_if<T>(&p);
    if (!x) throw InputError(std::string("reduction expects a ") + tag + " instance, got " + problem_name(p));
    return *x;
}

std::string lit_name(const Literal& l) { return (l.positive ? "x" : "~x") + std::to_string(l.var); }

std::vector<bool> restrict_to(const std::vector<bool>& v, std::size_t n) {
    if (v.size() < n) throw InputError("malformed witness: assignment too short");
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& s, std::size_t n) {
    std::vector<bool> in(n + 1, false);
    for (auto v : s) {
        if (v < 1 || v > n) throw InputError("malformed witness: vertex out of range");
        in[v] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 1; v <= n; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw LimitError("value does not fit a 64-bit ILP coefficient");
    return static_cast<std::int64_t>(x);
}

// Incident edge ids of every vertex, ascending.
std::vector<std::vector<std::size_t>> incident_edges(const Graph& g) {
    std::vector<std::vector<std::size_t>> inc(g.n() + 1);
    for (std::size_t id = 0; id < g.m(); ++id) {
        inc[g.edge(id).u].push_back(id);
        inc[g.edge(id).v].push_back(id);
    }
    return inc;
}

ReductionOutput finish(ReductionOutput r) {
    validate(r.target);
    return r;
}

// ---- simple reductions ----------------------------------------------------

ReductionOutput clique_to_is(const Clique& c) {
    ReductionOutput r;
    r.target = IndependentSet{c.g.complement(), c.k};
    r.forward = [](const Witness& w) -> Witness { return need<VertexSet>(w, "vertex-set"); };
    r.backward = r.forward;
    r.legend.push_back("complement graph, same k = " + std::to_string(c.k));
    return r;
}

ReductionOutput is_to_vc(const IndependentSet& s) {
    std::size_t n = s.g.n();
    ReductionOutput r;
    r.target = VertexCover{s.g, n - s.k};
    auto flip = [n](const Witness& w) -> Witness { return VertexSet{complement_of(need<VertexSet>(w, "vertex-set").vertices, n)}; };
    r.forward = flip;
    r.backward = flip;
    r.legend.push_back("same graph, k = n - k = " + std::to_string(n - s.k));
    return r;
}

// Ground set: vertices 1..n, then (i, x) = n + (i-1)m + x for colors i and edge ids x.
// Family: S_{v,i} at (v-1)k + i, then T_{x,i} at nk + (i-1)m + x + 1.
ReductionOutput coloring_to_exact_cover(const GraphColoring& c) {
    const Graph& g = c.g;
    std::size_t n = g.n(), m = g.m(), k = c.k;
    auto pair_elem = [=](std::size_t i, std::size_t x) { return n + (i - 1) * m + x + 1; };
    auto inc = incident_edges(g);
    SetSystem s;
    s.n = n + k * m;
    ReductionOutput r;
    for (std::size_t v = 1; v <= n; ++v)
        for (std::size_t i = 1; i <= k; ++i) {
            std::vector<std::size_t> set{v};
            for (auto x : inc[v]) set.push_back(pair_elem(i, x));
            std::sort(set.begin(), set.end());
            s.sets.push_back(std::move(set));
            r.legend.push_back("set " + std::to_string(s.sets.size()) + " = S(v" + std::to_string(v) + ", color " +
                               std::to_string(i) + ")");
        }
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t x = 0; x < m; ++x) {
            s.sets.push_back({pair_elem(i, x)});
            r.legend.push_back("set " + std::to_string(s.sets.size()) + " = T(edge " + std::to_string(x + 1) +
                               ", color " + std::to_string(i) + ")");
        }
    r.target = ExactCover{s};
    r.forward = [=](const Witness& w) -> Witness {
        const auto& col = need<ColorMap>(w, "coloring").color;
        if (col.size() != n) throw InputError("malformed witness: coloring length");
        std::vector<std::size_t> chosen;
        std::set<std::pair<std::size_t, std::size_t>> used;  // (color, edge)
        for (std::size_t v = 1; v <= n; ++v) {
            if (col[v - 1] < 1 || col[v - 1] > k) throw InputError("coloring uses a color outside 1..k");
            chosen.push_back((v - 1) * k + col[v - 1]);
            for (auto x : inc[v]) used.insert({col[v - 1], x});
        }
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t x = 0; x < m; ++x)
                if (!used.count({i, x})) chosen.push_back(n * k + (i - 1) * m + x + 1);
        std::sort(chosen.begin(), chosen.end());
        return Selection{chosen};
    };
    r.backward = [=](const Witness& w) -> Witness {
        std::vector<std::size_t> col(n, 0);
        for (auto idx : need<Selection>(w, "selection").items)
            if (idx >= 1 && idx <= n * k) col[(idx - 1) / k] = (idx - 1) % k + 1;
        for (auto cc : col)
            if (cc == 0) throw InputError("selection leaves a vertex uncolored");
        return ColorMap{col};
    };
    return r;
}

// New ground set: family indices 1..m. One listed set B(a) per element a.
ReductionOutput exact_cover_to_representatives(const ExactCover& e) {
    const SetSystem& s = e.s;
    SetSystem t;
    t.n = s.sets.size();
    t.sets.assign(s.n, {});
    for (std::size_t j = 0; j < s.sets.size(); ++j)
        for (auto a : s.sets[j]) t.sets[a - 1].push_back(j + 1);
    ReductionOutput r;
    r.target = Representatives{t};
    r.forward = [](const Witness& w) -> Witness { return need<Selection>(w, "selection"); };
    r.backward = r.forward;
    for (std::size_t a = 1; a <= s.n; ++a)
        r.legend.push_back("listed set " + std::to_string(a) + " = B(a" + std::to_string(a) + ")");
    return r;
}

// Items a_1..a_n, 2b, sum a.
ReductionOutput knapsack01_to_partition(const Knapsack01& k) {
    std::size_t n = k.a.size();
    BigInt total = 0;
    for (const auto& a : k.a) total += a;
    Partition p{k.a};
    p.a.push_back(2 * k.b);
    p.a.push_back(total);
    ReductionOutput r;
    r.target = p;
    r.forward = [n](const Witness& w) -> Witness {
        auto items = need<Selection>(w, "selection").items;
        items.push_back(n + 2);
        return Selection{items};
    };
    r.backward = [n](const Witness& w) -> Witness {
        const auto& items = need<Selection>(w, "selection").items;
        bool has_total = std::find(items.begin(), items.end(), n + 2) != items.end();
        std::vector<bool> in(n + 3, false);
        for (auto i : items) {
            if (i < 1 || i > n + 2) throw InputError("malformed witness: item out of range");
            in[i] = true;
        }
        // Use the side holding the sum item.
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= n; ++i)
            if (in[i] == has_total) out.push_back(i);
        return Selection{out};
    };
    r.legend.push_back("item " + std::to_string(n + 1) + " = 2b, item " + std::to_string(n + 2) + " = sum of a");
    return r;
}

// Ground set: edge ids + 1. Set v: edges at v.
ReductionOutput vc_to_set_cover(const VertexCover& c) {
    SetSystem s;
    s.n = c.g.m();
    s.sets.assign(c.g.n(), {});
    for (std::size_t id = 0; id < c.g.m(); ++id) {
        s.sets[c.g.edge(id).u - 1].push_back(id + 1);
        s.sets[c.g.edge(id).v - 1].push_back(id + 1);
    }
    ReductionOutput r;
    r.target = SetCover{s, c.k};
    r.forward = [](const Witness& w) -> Witness { return Selection{need<VertexSet>(w, "vertex-set").vertices}; };
    r.backward = [](const Witness& w) -> Witness { return VertexSet{need<Selection>(w, "selection").items}; };
    r.legend.push_back("element e = edge e; set v = edges at v");
    return r;
}

// Vertex u becomes u(1) - u(2) - u(3); arc (u, v) becomes edge u(3) - v(1).
ReductionOutput ham_circuit_to_cycle(const HamCircuit& h) {
    std::size_t N = h.d.n();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 1; u <= N; ++u) {
        edges.emplace_back(3 * u - 2, 3 * u - 1);
        edges.emplace_back(3 * u - 1, 3 * u);
    }
    for (const auto& a : h.d.arcs()) edges.emplace_back(3 * a.u, 3 * a.v - 2);
    ReductionOutput r;
    r.target = HamCycle{Graph(3 * N, edges)};
    r.forward = [](const Witness& w) -> Witness {
        std::vector<std::size_t> out;
        for (auto u : need<Tour>(w, "tour").order) out.insert(out.end(), {3 * u - 2, 3 * u - 1, 3 * u});
        return Tour{out};
    };
    r.backward = [N](const Witness& w) -> Witness {
        auto o = need<Tour>(w, "tour").order;
        if (o.size() != 3 * N || N == 0) throw InputError("malformed witness: tour length");
        std::size_t p = static_cast<std::size_t>(std::find(o.begin(), o.end(), 1) - o.begin());
        if (p == o.size()) throw InputError("malformed witness: vertex 1 missing");
        if (o[(p + 1) % o.size()] != 2) {
            std::reverse(o.begin(), o.end());
            p = o.size() - 1 - p;
        }
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < N; ++t) out.push_back((o[(p + 3 * t) % o.size()] + 2) / 3);
        return Tour{out};
    };
    r.legend.push_back("vertex u -> 3u-2, 3u-1, 3u; arc (u, v) -> edge {3u, 3v-2}");
    return r;
}

ReductionOutput ham_cycle_to_tsp(const HamCycle& h) {
    std::size_t p = h.g.n();
    if (p < 3) throw InputError("ham-cycle to tsp needs at least 3 vertices");
    Tsp t;
    t.c.assign(p, std::vector<std::int64_t>(p, 2));
    for (std::size_t i = 0; i < p; ++i) t.c[i][i] = 0;
    for (const auto& e : h.g.edges()) t.c[e.u - 1][e.v - 1] = t.c[e.v - 1][e.u - 1] = 1;
    t.L = static_cast<std::int64_t>(p);
    ReductionOutput r;
    r.target = t;
    r.forward = [](const Witness& w) -> Witness { return need<Tour>(w, "tour"); };
    r.backward = r.forward;
    r.legend.push_back("cost 1 on edges, 2 elsewhere, L = " + std::to_string(p));
    return r;
}

ReductionOutput knapsack01_to_ilp(const Knapsack01& k) {
    std::size_t n = k.a.size();
    Ilp p;
    std::vector<std::int64_t> row;
    for (const auto& a : k.a) row.push_back(to_int64(a));
    p.A.push_back(row);
    p.b.push_back(to_int64(k.b));
    p.rel.push_back(Relation::Eq);
    p.lo.assign(n, 0);
    p.hi.assign(n, 1);
    ReductionOutput r;
    r.target = p;
    r.forward = [n](const Witness& w) -> Witness {
        std::vector<std::int64_t> x(n, 0);
        for (auto i : need<Selection>(w, "selection").items) {
            if (i < 1 || i > n) throw InputError("malformed witness: item out of range");
            x[i - 1] = 1;
        }
        return IntPoint{x};
    };
    r.backward = [](const Witness& w) -> Witness {
        std::vector<std::size_t> items;
        const auto& x = need<IntPoint>(w, "point").x;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) items.push_back(i + 1);
        return Selection{items};
    };
    r.legend.push_back("x_i in {0,1}; one equality row");
    return r;
}

// The cardinality row uses min(k, m) so covers smaller than k can be padded.
ReductionOutput set_cover_to_ilp(const SetCover& c) {
    std::size_t m = c.s.sets.size();
    std::size_t K = std::min(c.k, m);
    Ilp p;
    for (std::size_t e = 1; e <= c.s.n; ++e) {
        std::vector<std::int64_t> row(m, 0);
        for (std::size_t j = 0; j < m; ++j)
            if (std::binary_search(c.s.sets[j].begin(), c.s.sets[j].end(), e)) row[j] = 1;
        p.A.push_back(row);
        p.b.push_back(1);
        p.rel.push_back(Relation::Ge);
    }
    p.A.push_back(std::vector<std::int64_t>(m, 1));
    p.b.push_back(static_cast<std::int64_t>(K));
    p.rel.push_back(Relation::Eq);
    p.lo.assign(m, 0);
    p.hi.assign(m, 1);
    ReductionOutput r;
    r.target = p;
    r.forward = [m, K](const Witness& w) -> Witness {
        std::vector<std::int64_t> x(m, 0);
        std::size_t count = 0;
        for (auto i : need<Selection>(w, "selection").items) {
            if (i < 1 || i > m) throw InputError("malformed witness: set out of range");
            count += x[i - 1] == 0;
            x[i - 1] = 1;
        }
        for (std::size_t j = 0; j < m && count < K; ++j)
            if (x[j] == 0) {
                x[j] = 1;
                ++count;
            }
        return IntPoint{x};
    };
    r.backward = [](const Witness& w) -> Witness {
        std::vector<std::size_t> items;
        const auto& x = need<IntPoint>(w, "point").x;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) items.push_back(i + 1);
        return Selection{items};
    };
    r.legend.push_back("one covering row per element; sum x = " + std::to_string(K));
    return r;
}

// Variables: x_ij (i != j) row-major, then u_2..u_n in [0, n-1].
ReductionOutput tsp_to_ilp(const Tsp& t) {
    std::size_t n = t.c.size();
    if (n < 2) throw InputError("tsp to ilp needs at least 2 cities");
    std::size_t nx = n * (n - 1);
    auto xv = [n](std::size_t i, std::size_t j) { return i * (n - 1) + (j < i ? j : j - 1); };  // 0-based cities
    auto uv = [nx](std::size_t i) { return nx + i - 1; };                                     // i = 1..n-1
    std::size_t vars = nx + n - 1;
    auto n64 = static_cast<std::int64_t>(n);
    Ilp p;
    auto add = [&](std::vector<std::int64_t> row, Relation rel, std::int64_t b) {
        p.A.push_back(std::move(row));
        p.rel.push_back(rel);
        p.b.push_back(b);
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> out(vars, 0), in(vars, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) {
                out[xv(i, j)] = 1;
                in[xv(j, i)] = 1;
            }
        add(out, Relation::Eq, 1);
        add(in, Relation::Eq, 1);
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j) continue;
            std::vector<std::int64_t> row(vars, 0);
            row[uv(i)] = 1;
            row[uv(j)] = -1;
            row[xv(i, j)] = n64;
            add(row, Relation::Le, n64 - 1);
        }
    std::vector<std::int64_t> cost(vars, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) cost[xv(i, j)] = t.c[i][j];
    add(cost, Relation::Le, t.L);
    p.lo.assign(vars, 0);
    p.hi.assign(vars, 1);
    for (std::size_t i = 1; i < n; ++i) p.hi[uv(i)] = n64 - 1;
    ReductionOutput r;
    r.target = p;
    r.forward = [=](const Witness& w) -> Witness {
        auto o = need<Tour>(w, "tour").order;
        if (o.size() != n) throw InputError("malformed witness: tour length");
        auto start = std::find(o.begin(), o.end(), std::size_t{1});
        if (start == o.end()) throw InputError("malformed witness: city 1 missing");
        std::rotate(o.begin(), start, o.end());
        std::vector<std::int64_t> x(vars, 0);
        for (std::size_t pos = 0; pos < n; ++pos) {
            std::size_t a = o[pos] - 1, b = o[(pos + 1) % n] - 1;
            x[xv(a, b)] = 1;
            if (a != 0) x[uv(a)] = static_cast<std::int64_t>(pos);
        }
        return IntPoint{x};
    };
    r.backward = [=](const Witness& w) -> Witness {
        const auto& x = need<IntPoint>(w, "point").x;
        if (x.size() != vars) throw InputError("malformed witness: point length");
        std::vector<std::size_t> order{1};
        std::size_t cur = 0;
        for (std::size_t step = 1; step < n; ++step) {
            std::size_t next = n;
            for (std::size_t j = 0; j < n; ++j)
                if (j != cur && x[xv(cur, j)] == 1) next = j;
            if (next == n) throw InputError("point has no successor for city " + std::to_string(cur + 1));
            order.push_back(next + 1);
            cur = next;
        }
        return Tour{order};
    };
    r.legend.push_back("x_ij at i(n-1)+j' (0-based, j' skips i), u_i after; " + std::to_string(vars) + " variables");
    return r;
}

}  // namespace

// ---- named reductions -----------------------------------------------------

ReductionOutput sat_to_3sat(const CnfFormula& f) {
    f.validate();
    if (f.clauses.empty()) throw InputError("sat to 3sat needs at least one clause");
    CnfFormula g;
    g.n = f.n;
    struct Chain {
        std::size_t clause;
        std::size_t first;  // variable number of y_1
    };
    std::vector<Chain> chains;
    std::vector<std::string> legend;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& L = f.clauses[j];
        std::size_t k = L.size();
        std::string tag = " (clause " + std::to_string(j + 1) + ")";
        if (k == 1) {
            std::size_t z = ++g.n, w = ++g.n;
            for (bool sz : {true, false})
                for (bool sw : {true, false}) g.clauses.push_back({L[0], {z, sz}, {w, sw}});
            legend.push_back("x" + std::to_string(z) + ", x" + std::to_string(w) + " = z, w" + tag);
        } else if (k == 2) {
            std::size_t w = ++g.n;
            g.clauses.push_back({L[0], L[1], {w, true}});
            g.clauses.push_back({L[0], L[1], {w, false}});
            legend.push_back("x" + std::to_string(w) + " = w" + tag);
        } else if (k == 3) {
            g.clauses.push_back(L);
        } else {
            std::size_t first = g.n + 1;
            g.n += k - 3;
            auto y = [first](std::size_t i) { return first + i - 1; };
            g.clauses.push_back({L[0], L[1], {y(1), true}});
            for (std::size_t i = 2; i <= k - 3; ++i) g.clauses.push_back({{y(i - 1), false}, L[i], {y(i), true}});
            g.clauses.push_back({{y(k - 3), false}, L[k - 2], L[k - 1]});
            chains.push_back({j, first});
            legend.push_back("x" + std::to_string(first) + "..x" + std::to_string(g.n) + " = chain" + tag);
        }
    }
    std::size_t n = f.n, N = g.n;
    ReductionOutput r;
    r.target = ThreeSat{g};
    r.legend = legend;
    // y_i is true iff none of the first i+1 literals holds.
    r.forward = [f, chains, n, N](const Witness& w) -> Witness {
        auto v = need<Assignment>(w, "assignment").values;
        if (v.size() != n) throw InputError("malformed witness: assignment length");
        v.resize(N, false);
        for (const auto& c : chains) {
            const auto& L = f.clauses[c.clause];
            bool any = (v[L[0].var - 1] == L[0].positive);
            for (std::size_t i = 1; i + 2 < L.size(); ++i) {
                any = any || (v[L[i].var - 1] == L[i].positive);
                v[c.first + i - 2] = !any;
            }
        }
        return Assignment{v};
    };
    r.backward = [n](const Witness& w) -> Witness { return Assignment{restrict_to(need<Assignment>(w, "assignment").values, n)}; };
    return finish(std::move(r));
}

ReductionOutput sat_to_clique(const CnfFormula& f) {
    f.validate();
    struct Node {
        Literal lit;
        std::size_t clause;
    };
    std::vector<Node> nodes;
    ReductionOutput r;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        std::vector<Literal> seen;
        for (const auto& l : f.clauses[j]) {
            if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
            seen.push_back(l);
            nodes.push_back({l, j});
            r.legend.push_back("v" + std::to_string(nodes.size()) + " = (" + lit_name(l) + ", D" + std::to_string(j + 1) + ")");
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a].clause != nodes[b].clause && !(nodes[a].lit == nodes[b].lit.negated()))
                edges.emplace_back(a + 1, b + 1);
    std::size_t n = f.n;
    r.target = Clique{Graph(nodes.size(), edges), f.clauses.size()};
    r.forward = [nodes, f](const Witness& w) -> Witness {
        const auto& v = need<Assignment>(w, "assignment").values;
        if (v.size() != f.n) throw InputError("malformed witness: assignment length");
        std::vector<std::size_t> pick;
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            std::size_t found = 0;
            for (std::size_t a = 0; a < nodes.size() && !found; ++a)
                if (nodes[a].clause == j && v[nodes[a].lit.var - 1] == nodes[a].lit.positive) found = a + 1;
            if (!found) throw InputError("assignment leaves clause " + std::to_string(j + 1) + " false");
            pick.push_back(found);
        }
        return VertexSet{pick};
    };
    r.backward = [nodes, n](const Witness& w) -> Witness {
        std::vector<bool> v(n, false);
        for (auto a : need<VertexSet>(w, "vertex-set").vertices) {
            if (a < 1 || a > nodes.size()) throw InputError("malformed witness: vertex out of range");
            v[nodes[a - 1].lit.var - 1] = nodes[a - 1].lit.positive;
        }
        return Assignment{v};
    };
    return finish(std::move(r));
}

// x_i -> i, not-x_i -> n+i, D_j -> 2n+j, v_i -> 2n+r+i.
ReductionOutput threesat_to_coloring(const CnfFormula& f0) {
    f0.validate();
    if (!f0.is_3cnf()) throw InputError("3sat to coloring needs exactly 3 literals per clause");
    CnfFormula f = f0;
    if (f.n < 4) f.n = 4;
    std::size_t n = f.n, r = f.clauses.size();
    auto X = [](std::size_t i) { return i; };
    auto NX = [n](std::size_t i) { return n + i; };
    auto D = [n](std::size_t j) { return 2 * n + j; };
    auto V = [n, r](std::size_t i) { return 2 * n + r + i; };
    auto lit_vertex = [&](const Literal& l) { return l.positive ? X(l.var) : NX(l.var); };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(V(i), V(j));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j) {
                edges.emplace_back(V(i), X(j));
                edges.emplace_back(V(i), NX(j));
            }
    for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(X(i), NX(i));
    for (std::size_t j = 1; j <= r; ++j) {
        std::set<std::size_t> inside;
        for (const auto& l : f.clauses[j - 1]) inside.insert(lit_vertex(l));
        for (std::size_t lv = 1; lv <= 2 * n; ++lv)
            if (!inside.count(lv)) edges.emplace_back(lv, D(j));
    }
    ReductionOutput out;
    out.target = GraphColoring{Graph(3 * n + r, edges), n + 1};
    out.legend.push_back("x_i = i, ~x_i = " + std::to_string(n) + "+i, D_j = " + std::to_string(2 * n) +
                         "+j, v_i = " + std::to_string(2 * n + r) + "+i; k = " + std::to_string(n + 1));
    if (f0.n < 4) out.legend.push_back("padded with unused variables up to n = 4");
    std::size_t n0 = f0.n;
    out.forward = [=](const Witness& w) -> Witness {
        auto a = need<Assignment>(w, "assignment").values;
        if (a.size() != n0) throw InputError("malformed witness: assignment length");
        a.resize(n, false);
        std::vector<std::size_t> c(3 * n + r, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            c[V(i) - 1] = i;
            c[X(i) - 1] = a[i - 1] ? i : n + 1;
            c[NX(i) - 1] = a[i - 1] ? n + 1 : i;
        }
        for (std::size_t j = 1; j <= r; ++j) {
            for (const auto& l : f.clauses[j - 1])
                if (a[l.var - 1] == l.positive) {
                    c[D(j) - 1] = l.var;
                    break;
                }
            if (c[D(j) - 1] == 0) throw InputError("assignment leaves clause " + std::to_string(j) + " false");
        }
        return ColorMap{c};
    };
    out.backward = [=](const Witness& w) -> Witness {
        const auto& c = need<ColorMap>(w, "coloring").color;
        if (c.size() != 3 * n + r) throw InputError("malformed witness: coloring length");
        std::vector<bool> a(n0);
        for (std::size_t i = 1; i <= n0; ++i) a[i - 1] = c[X(i) - 1] == c[V(i) - 1];
        return Assignment{a};
    };
    return finish(std::move(out));
}

// Weight of set i: sum over its elements e of (m+1)^(n-e).
ReductionOutput exact_cover_to_knapsack01(const SetSystem& s) {
    s.validate();
    std::size_t n = s.n, m = s.sets.size();
    std::vector<BigInt> place(n + 1, 0);  // place[e] = (m+1)^(n-e)
    BigInt p = 1;
    for (std::size_t e = n; e >= 1; --e) {
        place[e] = p;
        p *= m + 1;
    }
    Knapsack01 k;
    for (const auto& set : s.sets) {
        BigInt z = 0;
        for (auto e : set) z += place[e];
        k.a.push_back(z);
    }
    for (std::size_t e = 1; e <= n; ++e) k.b += place[e];
    ReductionOutput r;
    r.target = k;
    r.forward = [](const Witness& w) -> Witness { return need<Selection>(w, "selection"); };
    r.backward = r.forward;
    r.legend.push_back("base " + std::to_string(m + 1) + " digits, element 1 most significant");
    return finish(std::move(r));
}

// a_i -> i; (u, x, d) -> k' + 4x + 2s + d + 1 where s = 0 for the edge's first endpoint.
ReductionOutput vc_to_ham_circuit(const Graph& g, std::size_t k) {
    if (k > g.n()) throw InputError("k exceeds the vertex count");
    if (g.m() == 0) throw InputError("vc to ham-circuit needs at least one edge");
    if (k == 0) throw InputError("vc to ham-circuit needs k >= 1");
    auto inc = incident_edges(g);
    std::vector<std::size_t> live;  // vertices with an edge
    for (std::size_t v = 1; v <= g.n(); ++v)
        if (!inc[v].empty()) live.push_back(v);
    std::size_t kk = std::min(k, live.size());
    std::vector<std::size_t> first(g.m());
    for (std::size_t x = 0; x < g.m(); ++x) first[x] = g.edge(x).u;
    // the witness maps outlive g, so node keeps its own copy of the endpoints
    auto node = [first, kk](std::size_t u, std::size_t x, std::size_t d) {
        std::size_t s = first[x] == u ? 0 : 1;
        return kk + 4 * x + 2 * s + d + 1;
    };
    std::size_t N = kk + 4 * g.m();
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (auto u : live) {
        for (std::size_t i = 1; i <= kk; ++i) {
            arcs.emplace_back(i, node(u, inc[u].front(), 0));
            arcs.emplace_back(node(u, inc[u].back(), 1), i);
        }
        for (std::size_t t = 0; t + 1 < inc[u].size(); ++t) arcs.emplace_back(node(u, inc[u][t], 1), node(u, inc[u][t + 1], 0));
        for (auto x : inc[u]) arcs.emplace_back(node(u, x, 0), node(u, x, 1));
    }
    for (std::size_t x = 0; x < g.m(); ++x) {
        std::size_t u = g.edge(x).u, v = g.edge(x).v;
        for (std::size_t d = 0; d < 2; ++d) {
            arcs.emplace_back(node(u, x, d), node(v, x, d));
            arcs.emplace_back(node(v, x, d), node(u, x, d));
        }
    }
    ReductionOutput r;
    r.target = HamCircuit{Digraph(N, arcs)};
    r.legend.push_back("a_1..a_" + std::to_string(kk) + " = 1.." + std::to_string(kk) +
                       "; (u, edge x, d) = " + std::to_string(kk) + " + 4(x-1) + 2s + d + 1, s = 0 when u is the first endpoint");
    if (kk < k) r.legend.push_back("k lowered to the " + std::to_string(kk) + " vertices that have edges");
    r.forward = [g, inc, live, kk, node](const Witness& w) -> Witness {
        std::vector<bool> in(g.n() + 1, false);
        std::vector<std::size_t> cover;
        for (auto v : need<VertexSet>(w, "vertex-set").vertices) {
            if (v < 1 || v > g.n()) throw InputError("malformed witness: vertex out of range");
            if (!inc[v].empty() && !in[v]) cover.push_back(v);
            in[v] = true;
        }
        for (std::size_t i = 0; i < live.size() && cover.size() < kk; ++i)
            if (!in[live[i]]) {
                in[live[i]] = true;
                cover.push_back(live[i]);
            }
        if (cover.size() != kk) throw InputError("vertex set larger than k");
        std::vector<std::size_t> tour;
        for (std::size_t i = 1; i <= kk; ++i) {
            tour.push_back(i);
            std::size_t u = cover[i - 1];
            for (auto x : inc[u]) {
                std::size_t v = g.edge(x).u == u ? g.edge(x).v : g.edge(x).u;
                if (in[v]) {
                    tour.push_back(node(u, x, 0));
                    tour.push_back(node(u, x, 1));
                } else {
                    tour.insert(tour.end(), {node(u, x, 0), node(v, x, 0), node(v, x, 1), node(u, x, 1)});
                }
            }
        }
        return Tour{tour};
    };
    r.backward = [g, kk, N](const Witness& w) -> Witness {
        const auto& o = need<Tour>(w, "tour").order;
        if (o.size() != N) throw InputError("malformed witness: tour length");
        std::vector<std::size_t> cover;
        for (std::size_t p = 0; p < N; ++p) {
            if (o[p] < 1 || o[p] > kk) continue;
            std::size_t next = o[(p + 1) % N];
            if (next <= kk) throw InputError("circuit steps from one a-vertex to another");
            std::size_t code = next - kk - 1, x = code / 4, s = (code % 4) / 2;
            cover.push_back(s == 0 ? g.edge(x).u : g.edge(x).v);
        }
        std::sort(cover.begin(), cover.end());
        if (std::adjacent_find(cover.begin(), cover.end()) != cover.end())
            throw Error("two a-vertices lead into the same cover vertex");
        return VertexSet{cover};
    };
    return finish(std::move(r));
}

// ---- dispatch -------------------------------------------------------------

namespace {

struct KindInfo {
    ReductionKind kind;
    const char* name;
    const char* source;
};

const KindInfo kinds[] = {
    {ReductionKind::SatTo3Sat, "sat-3sat", "sat"},
    {ReductionKind::SatToClique, "sat-clique", "sat"},
    {ReductionKind::CliqueToIS, "clique-is", "clique"},
    {ReductionKind::ISToVC, "is-vc", "independent-set"},
    {ReductionKind::ThreeSatToColoring, "3sat-coloring", "3sat"},
    {ReductionKind::ColoringToExactCover, "coloring-exactcover", "coloring"},
    {ReductionKind::ExactCoverToRepresentatives, "exactcover-representatives", "exact-cover"},
    {ReductionKind::ExactCoverToKnapsack01, "exactcover-knapsack01", "exact-cover"},
    {ReductionKind::Knapsack01ToPartition, "knapsack01-partition", "knapsack01"},
    {ReductionKind::VCToSetCover, "vc-setcover", "vertex-cover"},
    {ReductionKind::VCToHamCircuit, "vc-hamcircuit", "vertex-cover"},
    {ReductionKind::HamCircuitToHamCycle, "hamcircuit-hamcycle", "ham-circuit"},
    {ReductionKind::HamCycleToTsp, "hamcycle-tsp", "ham-cycle"},
    {ReductionKind::Knapsack01ToIlp, "knapsack01-ilp", "knapsack01"},
    {ReductionKind::SetCoverToIlp, "setcover-ilp", "set-cover"},
    {ReductionKind::TspToIlp, "tsp-ilp", "tsp"},
};

const KindInfo& info(ReductionKind k) {
    for (const auto& i : kinds)
        if (i.kind == k) return i;
    throw Error("unknown reduction kind");
}

bool is_named(ReductionKind k) {
    return k == ReductionKind::SatTo3Sat || k == ReductionKind::SatToClique || k == ReductionKind::ThreeSatToColoring ||
           k == ReductionKind::ExactCoverToKnapsack01 || k == ReductionKind::VCToHamCircuit;
}

// Sat sources also accept a 3sat instance.
const CnfFormula& formula_of(const ProblemInstance& p) {
    if (const auto* s = std::get_if<Sat>(&p)) return s->f;
    if (const auto* s = std::get_if<ThreeSat>(&p)) return s->f;
    throw InputError("reduction expects a sat instance, got " + problem_name(p));
}

}  // namespace

std::vector<ReductionKind> all_reductions() {
    std::vector<ReductionKind> out;
    for (const auto& i : kinds) out.push_back(i.kind);
    return out;
}

std::string to_string(ReductionKind k) { return info(k).name; }
std::string source_problem(ReductionKind k) { return info(k).source; }

ReductionKind parse_reduction_kind(const std::string& name) {
    for (const auto& i : kinds)
        if (name == i.name) return i.kind;
    throw InputError("unknown reduction: " + name);
}

ReductionOutput apply_simple_reduction(ReductionKind kind, const ProblemInstance& source) {
    if (is_named(kind)) throw InputError(to_string(kind) + " is not a simple reduction");
    return apply_reduction(kind, source);
}

ReductionOutput apply_reduction(ReductionKind kind, const ProblemInstance& source) {
    validate(source);
    switch (kind) {
        case ReductionKind::SatTo3Sat: return sat_to_3sat(formula_of(source));
        case ReductionKind::SatToClique: return sat_to_clique(formula_of(source));
        case ReductionKind::ThreeSatToColoring: return threesat_to_coloring(need<ThreeSat>(source, "3sat").f);
        case ReductionKind::ExactCoverToKnapsack01: return exact_cover_to_knapsack01(need<ExactCover>(source, "exact-cover").s);
        case ReductionKind::VCToHamCircuit: {
            const auto& vc = need<VertexCover>(source, "vertex-cover");
            return vc_to_ham_circuit(vc.g, vc.k);
        }
        case ReductionKind::CliqueToIS: return finish(clique_to_is(need<Clique>(source, "clique")));
        case ReductionKind::ISToVC: return finish(is_to_vc(need<IndependentSet>(source, "independent-set")));
        case ReductionKind::ColoringToExactCover: return finish(coloring_to_exact_cover(need<GraphColoring>(source, "coloring")));
        case ReductionKind::ExactCoverToRepresentatives:
            return finish(exact_cover_to_representatives(need<ExactCover>(source, "exact-cover")));
        case ReductionKind::Knapsack01ToPartition: return finish(knapsack01_to_partition(need<Knapsack01>(source, "knapsack01")));
        case ReductionKind::VCToSetCover: return finish(vc_to_set_cover(need<VertexCover>(source, "vertex-cover")));
        case ReductionKind::HamCircuitToHamCycle: return finish(ham_circuit_to_cycle(need<HamCircuit>(source, "ham-circuit")));
        case ReductionKind::HamCycleToTsp: return finish(ham_cycle_to_tsp(need<HamCycle>(source, "ham-cycle")));
        case ReductionKind::Knapsack01ToIlp: return finish(knapsack01_to_ilp(need<Knapsack01>(source, "knapsack01")));
        case ReductionKind::SetCoverToIlp: return finish(set_cover_to_ilp(need<SetCover>(source, "set-cover")));
        case ReductionKind::TspToIlp: return finish(tsp_to_ilp(need<Tsp>(source, "tsp")));
    }
    throw Error("unknown reduction kind");
}

// ---- 2-SAT ----------------------------------------------------------------

std::size_t literal_vertex(const Literal& l) { return l.positive ? 2 * l.var - 1 : 2 * l.var; }

Literal vertex_literal(std::size_t v) { return {(v + 1) / 2, v % 2 == 1}; }

Digraph implication_graph(const CnfFormula& f) {
    f.validate();
    std::set<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& c : f.clauses) {
        if (c.size() > 2) throw InputError("2-sat clause has more than 2 literals");
        Literal a = c[0], b = c.size() == 2 ? c[1] : c[0];
        std::size_t na = literal_vertex(a.negated()), nb = literal_vertex(b.negated());
        std::size_t va = literal_vertex(a), vb = literal_vertex(b);
        if (na != vb) arcs.insert({na, vb});
        if (nb != va) arcs.insert({nb, va});
    }
    return Digraph(2 * f.n, std::vector<std::pair<std::size_t, std::size_t>>(arcs.begin(), arcs.end()));
}

TwoSatResult twosat_solve(const CnfFormula& f) {
    Digraph g = implication_graph(f);
    // Starting the first pass from the top vertex makes free variables false.
    std::vector<std::size_t> order(2 * f.n);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - i;
    auto comps = scc_kosaraju(g, order);
    TwoSatResult r;
    r.component.assign(2 * f.n + 1, 0);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (auto v : comps[i]) r.component[v] = i;
    for (std::size_t x = 1; x <= f.n; ++x)
        if (r.component[2 * x - 1] == r.component[2 * x]) {
            r.conflict_var = x;
            return r;
        }
    // Components come out in topological order; the later literal is true.
    r.satisfiable = true;
    r.assignment.resize(f.n);
    for (std::size_t x = 1; x <= f.n; ++x) r.assignment[x - 1] = r.component[2 * x - 1] > r.component[2 * x];
    return r;
}

}  // namespace combinlab
