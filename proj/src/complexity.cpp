#include "combinlab/complexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "combinlab/paths_mst.hpp"

namespace combinlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool literal_true(const Literal& l, const std::vector<bool>& values) { return values[l.var - 1] == l.positive; }

void check_k(std::size_t k, std::size_t n, const char* what) {
    if (k > n) throw InputError(std::string(what) + ": k exceeds the vertex count");
}

[[noreturn]] void malformed(const std::string& why) { throw InputError("malformed witness: " + why); }

// Sorted copy; throws on duplicates or values outside 1..n.
std::vector<std::size_t> index_set(const std::vector<std::size_t>& items, std::size_t n, const char* what) {
    std::vector<std::size_t> s = items;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) malformed(std::string(what) + " " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i] == s[i - 1]) malformed(std::string("repeated ") + what + " " + std::to_string(s[i]));
    }
    return s;
}

template <class T>
const T& expect(const Witness& w, const char* shape) {
    const T* p = std::get_if<T>(&w);
    if (!p) malformed(std::string("expected ") + shape + ", got " + witness_name(w));
    return *p;
}

}  // namespace

// ---- CNF ------------------------------------------------------------------

bool CnfFormula::is_3cnf() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.size() == 3; });
}

void CnfFormula::validate() const {
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        if (clauses[j].empty()) throw InputError("clause " + std::to_string(j + 1) + " is empty");
        for (const auto& l : clauses[j])
            if (l.var < 1 || l.var > n)
                throw InputError("clause " + std::to_string(j + 1) + ": variable " + std::to_string(l.var) +
                                 " out of range");
    }
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& values) {
    if (values.size() != f.n) throw InputError("assignment has wrong length");
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_true(l, values); });
    });
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<Literal> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
        if (tok == "p") {
            std::string fmt;
            long long n = -1, m = -1;
            if (header || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw InputError("bad DIMACS header: " + line);
            header = true;
            f.n = static_cast<std::size_t>(n);
            declared = static_cast<std::size_t>(m);
            continue;
        }
        if (!header) throw InputError("clause before DIMACS header");
        ls.clear();
        ls.str(line);
        long long x;
        while (ls >> x) {
            if (x == 0) {
                if (current.empty()) throw InputError("empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back({static_cast<std::size_t>(std::llabs(x)), x > 0});
            }
        }
        if (!ls.eof()) throw InputError("bad DIMACS token in: " + line);
    }
    if (!header) throw InputError("missing DIMACS header");
    if (!current.empty()) f.clauses.push_back(std::move(current));
    if (f.clauses.size() != declared)
        throw InputError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    f.validate();
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const auto& l : c) out << (l.positive ? "" : "-") << l.var << ' ';
        out << "0\n";
    }
    return out.str();
}

void SetSystem::validate() const {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s[j] < 1 || s[j] > n)
                throw InputError("set " + std::to_string(i + 1) + ": element " + std::to_string(s[j]) +
                                 " out of range");
            if (j > 0 && s[j] <= s[j - 1])
                throw InputError("set " + std::to_string(i + 1) + " must be sorted without repeats");
        }
    }
}

// ---- instances ------------------------------------------------------------

std::string problem_name(const ProblemInstance& p) {
    static const char* names[] = {"sat",       "3sat",        "clique",  "independent-set", "vertex-cover",
                                  "coloring",  "exact-cover", "representatives", "set-cover", "knapsack01",
                                  "knapsack",  "partition",   "ham-circuit", "ham-cycle", "tsp", "ilp"};
    return names[p.index()];
}

std::string witness_name(const Witness& w) {
    static const char* names[] = {"assignment", "vertex-set", "coloring", "selection", "tour", "point"};
    return names[w.index()];
}

void validate(const ProblemInstance& p) {
    std::visit(overloaded{
                   [](const Sat& x) { x.f.validate(); },
                   [](const ThreeSat& x) {
                       x.f.validate();
                       if (!x.f.is_3cnf()) throw InputError("3sat: every clause needs exactly 3 literals");
                   },
                   [](const Clique& x) { check_k(x.k, x.g.n(), "clique"); },
                   [](const IndependentSet& x) { check_k(x.k, x.g.n(), "independent-set"); },
                   [](const VertexCover& x) { check_k(x.k, x.g.n(), "vertex-cover"); },
                   [](const GraphColoring&) {},
                   [](const ExactCover& x) { x.s.validate(); },
                   [](const Representatives& x) { x.s.validate(); },
                   [](const SetCover& x) { x.s.validate(); },
                   [](const Knapsack01& x) {
                       if (x.b < 0) throw InputError("knapsack01: b must be non-negative");
                       for (const auto& a : x.a)
                           if (a < 0) throw InputError("knapsack01: sizes must be non-negative");
                   },
                   [](const KnapsackDecision& x) {
                       if (x.c.size() != x.v.size()) throw InputError("knapsack: values and volumes differ in length");
                       for (std::size_t i = 0; i < x.c.size(); ++i)
                           if (x.c[i] < 0 || x.v[i] < 0) throw InputError("knapsack: negative value or volume");
                   },
                   [](const Partition& x) {
                       for (const auto& a : x.a)
                           if (a < 0) throw InputError("partition: sizes must be non-negative");
                   },
                   [](const HamCircuit&) {},
                   [](const HamCycle&) {},
                   [](const Tsp& x) {
                       std::size_t n = x.c.size();
                       for (std::size_t i = 0; i < n; ++i) {
                           if (x.c[i].size() != n) throw InputError("tsp: matrix must be square");
                           if (x.c[i][i] != 0) throw InputError("tsp: diagonal must be zero");
                           for (auto v : x.c[i])
                               if (v < 0) throw InputError("tsp: costs must be non-negative");
                       }
                   },
                   [](const Ilp& x) {
                       std::size_t vars = x.lo.size();
                       if (x.hi.size() != vars) throw InputError("ilp: lo and hi differ in length");
                       if (x.b.size() != x.A.size() || x.rel.size() != x.A.size())
                           throw InputError("ilp: A, b and relations differ in row count");
                       for (const auto& row : x.A)
                           if (row.size() != vars) throw InputError("ilp: row length differs from variable count");
                       for (std::size_t j = 0; j < vars; ++j)
                           if (x.lo[j] > x.hi[j]) throw InputError("ilp: empty box for variable " + std::to_string(j + 1));
                   },
               },
               p);
}

// ---- verification ---------------------------------------------------------

namespace {

bool is_clique(const Graph& g, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_cover(const Graph& g, const std::vector<std::size_t>& s) {
    std::vector<bool> in(g.n() + 1, false);
    for (auto v : s) in[v] = true;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

// Coverage count of each element by the chosen sets.
std::vector<std::size_t> coverage(const SetSystem& s, const std::vector<std::size_t>& chosen) {
    std::vector<std::size_t> cnt(s.n + 1, 0);
    for (auto i : chosen)
        for (auto e : s.sets[i - 1]) ++cnt[e];
    return cnt;
}

// The order must list every vertex once; returns false otherwise.
bool is_permutation_of(const std::vector<std::size_t>& order, std::size_t n) {
    if (order.size() != n) malformed("tour must list " + std::to_string(n) + " vertices");
    std::vector<bool> seen(n + 1, false);
    for (auto v : order) {
        if (v < 1 || v > n) malformed("tour vertex " + std::to_string(v) + " out of range");
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

BigInt sum_of(const std::vector<BigInt>& a, const std::vector<std::size_t>& idx) {
    BigInt s = 0;
    for (auto i : idx) s += a[i - 1];
    return s;
}

}  // namespace

bool verify_witness(const ProblemInstance& p, const Witness& w) {
    validate(p);
    return std::visit(
        overloaded{
            [&](const Sat& x) {
                const auto& a = expect<Assignment>(w, "assignment");
                if (a.values.size() != x.f.n) malformed("assignment length differs from variable count");
                return satisfies(x.f, a.values);
            },
            [&](const ThreeSat& x) {
                const auto& a = expect<Assignment>(w, "assignment");
                if (a.values.size() != x.f.n) malformed("assignment length differs from variable count");
                return satisfies(x.f, a.values);
            },
            [&](const Clique& x) {
                auto s = index_set(expect<VertexSet>(w, "vertex-set").vertices, x.g.n(), "vertex");
                return s.size() >= x.k && is_clique(x.g, s);
            },
            [&](const IndependentSet& x) {
                auto s = index_set(expect<VertexSet>(w, "vertex-set").vertices, x.g.n(), "vertex");
                return s.size() >= x.k && is_independent(x.g, s);
            },
            [&](const VertexCover& x) {
                auto s = index_set(expect<VertexSet>(w, "vertex-set").vertices, x.g.n(), "vertex");
                return s.size() <= x.k && is_cover(x.g, s);
            },
            [&](const GraphColoring& x) {
                const auto& c = expect<ColorMap>(w, "coloring").color;
                if (c.size() != x.g.n()) malformed("coloring length differs from vertex count");
                for (auto col : c)
                    if (col < 1) malformed("colors start at 1");
                if (std::any_of(c.begin(), c.end(), [&](std::size_t col) { return col > x.k; })) return false;
                return std::all_of(x.g.edges().begin(), x.g.edges().end(),
                                   [&](const Edge& e) { return c[e.u - 1] != c[e.v - 1]; });
            },
            [&](const ExactCover& x) {
                auto s = index_set(expect<Selection>(w, "selection").items, x.s.sets.size(), "set");
                auto cnt = coverage(x.s, s);
                return std::all_of(cnt.begin() + 1, cnt.end(), [](std::size_t c) { return c == 1; });
            },
            [&](const Representatives& x) {
                auto W = index_set(expect<Selection>(w, "selection").items, x.s.n, "element");
                std::vector<bool> in(x.s.n + 1, false);
                for (auto e : W) in[e] = true;
                return std::all_of(x.s.sets.begin(), x.s.sets.end(), [&](const auto& set) {
                    return std::count_if(set.begin(), set.end(), [&](std::size_t e) { return in[e]; }) == 1;
                });
            },
            [&](const SetCover& x) {
                auto s = index_set(expect<Selection>(w, "selection").items, x.s.sets.size(), "set");
                auto cnt = coverage(x.s, s);
                return s.size() <= x.k && std::all_of(cnt.begin() + 1, cnt.end(), [](std::size_t c) { return c >= 1; });
            },
            [&](const Knapsack01& x) {
                auto s = index_set(expect<Selection>(w, "selection").items, x.a.size(), "item");
                return sum_of(x.a, s) == x.b;
            },
            [&](const KnapsackDecision& x) {
                auto s = index_set(expect<Selection>(w, "selection").items, x.c.size(), "item");
                std::int64_t c = 0, v = 0;
                for (auto i : s) {
                    c += x.c[i - 1];
                    v += x.v[i - 1];
                }
                return v <= x.capacity && c >= x.target;
            },
            [&](const Partition& x) {
                auto s = index_set(expect<Selection>(w, "selection").items, x.a.size(), "item");
                BigInt total = 0;
                for (const auto& a : x.a) total += a;
                return 2 * sum_of(x.a, s) == total;
            },
            [&](const HamCircuit& x) {
                const auto& o = expect<Tour>(w, "tour").order;
                if (!is_permutation_of(o, x.d.n()) || o.size() < 2) return false;
                for (std::size_t i = 0; i < o.size(); ++i)
                    if (!x.d.has_arc(o[i], o[(i + 1) % o.size()])) return false;
                return true;
            },
            [&](const HamCycle& x) {
                const auto& o = expect<Tour>(w, "tour").order;
                if (!is_permutation_of(o, x.g.n()) || o.size() < 3) return false;
                for (std::size_t i = 0; i < o.size(); ++i)
                    if (!x.g.has_edge(o[i], o[(i + 1) % o.size()])) return false;
                return true;
            },
            [&](const Tsp& x) {
                const auto& o = expect<Tour>(w, "tour").order;
                if (!is_permutation_of(o, x.c.size())) return false;
                std::int64_t len = 0;
                for (std::size_t i = 0; i < o.size(); ++i) len += x.c[o[i] - 1][o[(i + 1) % o.size()] - 1];
                return len <= x.L;
            },
            [&](const Ilp& x) {
                const auto& pt = expect<IntPoint>(w, "point").x;
                if (pt.size() != x.lo.size()) malformed("point length differs from variable count");
                for (std::size_t j = 0; j < pt.size(); ++j)
                    if (pt[j] < x.lo[j] || pt[j] > x.hi[j]) return false;
                for (std::size_t r = 0; r < x.A.size(); ++r) {
                    std::int64_t lhs = 0;
                    for (std::size_t j = 0; j < pt.size(); ++j) lhs += x.A[r][j] * pt[j];
                    bool ok = x.rel[r] == Relation::Le ? lhs <= x.b[r]
                              : x.rel[r] == Relation::Ge ? lhs >= x.b[r]
                                                         : lhs == x.b[r];
                    if (!ok) return false;
                }
                return true;
            },
        },
        p);
}

// ---- limits ---------------------------------------------------------------

OracleLimits parse_oracle_limits(const std::string& text, OracleLimits base) {
    auto number = [&](const std::string& s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size() || s.empty() || v < 0) throw InputError("bad oracle limit: " + text);
        return v;
    };
    if (text.find('=') == std::string::npos) {
        base.vertices = static_cast<std::size_t>(number(text));
        return base;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("bad oracle limit: " + item);
        std::string key = item.substr(0, eq);
        long long v = number(item.substr(eq + 1));
        if (key == "variables") base.variables = static_cast<std::size_t>(v);
        else if (key == "vertices") base.vertices = static_cast<std::size_t>(v);
        else if (key == "elements") base.elements = static_cast<std::size_t>(v);
        else if (key == "box") base.box = v;
        else throw InputError("unknown oracle limit: " + key);
    }
    return base;
}

OracleLimits oracle_limits_from_env() {
    const char* env = std::getenv("COMBINLAB_ORACLE_LIMIT");
    if (!env || !*env) return {};
    return parse_oracle_limits(env);
}

// ---- oracles --------------------------------------------------------------

namespace {

[[noreturn]] void too_large(const std::string& what) {
    throw LimitError("instance too large for oracle (" + what + ")");
}

void cap(std::size_t value, std::size_t limit, const char* what) {
    if (value > limit) too_large(std::string(what) + " " + std::to_string(value) + " > " + std::to_string(limit));
}

std::optional<std::vector<bool>> sat_search(const CnfFormula& f) {
    // Clauses are checked once their largest variable is set.
    std::vector<std::vector<std::size_t>> closing(f.n + 1);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        std::size_t top = 0;
        for (const auto& l : f.clauses[j]) top = std::max(top, l.var);
        closing[top].push_back(j);
    }
    std::vector<bool> vals(f.n, false);
    auto clause_ok = [&](std::size_t j) {
        const auto& c = f.clauses[j];
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_true(l, vals); });
    };
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i > f.n) return true;
        for (bool b : {false, true}) {
            vals[i - 1] = b;
            if (std::all_of(closing[i].begin(), closing[i].end(), clause_ok) && go(i + 1)) return true;
        }
        return false;
    };
    if (go(1)) return vals;
    return std::nullopt;
}

// k vertices pairwise related by want(u, v).
std::optional<std::vector<std::size_t>> k_subset(const Graph& g, std::size_t k, bool want_edges) {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> go = [&](std::size_t v) -> bool {
        if (chosen.size() == k) return true;
        if (g.n() + 1 - v < k - chosen.size()) return false;
        for (std::size_t u = v; u <= g.n(); ++u) {
            bool ok = std::all_of(chosen.begin(), chosen.end(),
                                  [&](std::size_t c) { return g.has_edge(c, u) == want_edges; });
            if (!ok) continue;
            chosen.push_back(u);
            if (go(u + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (go(1)) return chosen;
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> cover_search(const Graph& g, std::size_t k) {
    std::vector<bool> in(g.n() + 1, false);
    std::vector<std::size_t> chosen;
    std::function<bool()> go = [&]() -> bool {
        auto it = std::find_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return !in[e.u] && !in[e.v]; });
        if (it == g.edges().end()) return true;
        if (chosen.size() == k) return false;
        for (std::size_t v : {it->u, it->v}) {
            in[v] = true;
            chosen.push_back(v);
            if (go()) return true;
            chosen.pop_back();
            in[v] = false;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::optional<std::vector<std::size_t>> coloring_search(const Graph& g, std::size_t k) {
    std::vector<std::size_t> c(g.n() + 1, 0);
    std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t used) -> bool {
        if (v > g.n()) return true;
        for (std::size_t col = 1; col <= std::min(k, used + 1); ++col) {
            bool ok = std::none_of(g.adj(v).begin(), g.adj(v).end(),
                                   [&](const Adjacent& a) { return a.vertex < v && c[a.vertex] == col; });
            if (!ok) continue;
            c[v] = col;
            if (go(v + 1, std::max(used, col))) return true;
        }
        c[v] = 0;
        return false;
    };
    if (!go(1, 0)) return std::nullopt;
    return std::vector<std::size_t>(c.begin() + 1, c.end());
}

// Subfamilies; exact: every element exactly once, else at least once with at most k sets.
std::optional<std::vector<std::size_t>> family_search(const SetSystem& s, bool exact, std::size_t k) {
    std::vector<std::vector<std::size_t>> containing(s.n + 1);
    for (std::size_t i = 0; i < s.sets.size(); ++i)
        for (auto e : s.sets[i]) containing[e].push_back(i);
    std::vector<std::size_t> cnt(s.n + 1, 0);
    std::vector<std::size_t> chosen;
    std::function<bool()> go = [&]() -> bool {
        std::size_t e = 1;
        while (e <= s.n && cnt[e] > 0) ++e;
        if (e > s.n) return true;
        if (chosen.size() == k) return false;
        for (std::size_t i : containing[e]) {
            if (exact && std::any_of(s.sets[i].begin(), s.sets[i].end(), [&](std::size_t x) { return cnt[x] > 0; }))
                continue;
            for (auto x : s.sets[i]) ++cnt[x];
            chosen.push_back(i + 1);
            if (go()) return true;
            chosen.pop_back();
            for (auto x : s.sets[i]) --cnt[x];
        }
        return false;
    };
    if (!go()) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::optional<std::vector<std::size_t>> representatives_search(const SetSystem& s) {
    std::vector<std::vector<std::size_t>> containing(s.n + 1), closing(s.n + 1);
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        if (s.sets[i].empty()) return std::nullopt;
        for (auto e : s.sets[i]) containing[e].push_back(i);
        closing[s.sets[i].back()].push_back(i);
    }
    std::vector<std::size_t> hits(s.sets.size(), 0);
    std::vector<std::size_t> W;
    std::function<bool(std::size_t)> go = [&](std::size_t e) -> bool {
        if (e > s.n) return true;
        for (bool take : {false, true}) {
            if (take) {
                if (std::any_of(containing[e].begin(), containing[e].end(), [&](std::size_t i) { return hits[i] > 0; }))
                    continue;
                for (auto i : containing[e]) ++hits[i];
                W.push_back(e);
            }
            bool ok = std::all_of(closing[e].begin(), closing[e].end(), [&](std::size_t i) { return hits[i] == 1; });
            if (ok && go(e + 1)) return true;
            if (take) {
                for (auto i : containing[e]) --hits[i];
                W.pop_back();
            }
        }
        return false;
    };
    if (go(1)) return W;
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> subset_sum(const std::vector<BigInt>& a, const BigInt& b) {
    std::size_t n = a.size();
    std::vector<BigInt> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + a[i];
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, const BigInt&)> go = [&](std::size_t i, const BigInt& left) -> bool {
        if (left == 0) return true;
        if (i == n || left < 0 || suffix[i] < left) return false;
        chosen.push_back(i + 1);
        if (go(i + 1, left - a[i])) return true;
        chosen.pop_back();
        return go(i + 1, left);
    };
    if (go(0, b)) return chosen;
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> knapsack_search(const KnapsackDecision& k) {
    std::size_t n = k.c.size();
    std::vector<std::int64_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + k.c[i];
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t i, std::int64_t c,
                                                                          std::int64_t v) -> bool {
        if (c >= k.target) return true;
        if (i == n || c + suffix[i] < k.target) return false;
        if (v + k.v[i] <= k.capacity) {
            chosen.push_back(i + 1);
            if (go(i + 1, c + k.c[i], v + k.v[i])) return true;
            chosen.pop_back();
        }
        return go(i + 1, c, v);
    };
    if (k.capacity >= 0 && go(0, 0, 0)) return chosen;
    return std::nullopt;
}

// Depth-first extension from vertex 1, pruned when an unvisited vertex has
// lost every possible predecessor or successor.
std::optional<std::vector<std::size_t>> circuit_search(const Digraph& d) {
    std::size_t n = d.n();
    if (n < 2) return std::nullopt;
    std::vector<bool> used(n + 1, false);
    std::vector<std::size_t> path{1};
    used[1] = true;
    auto viable = [&]() {
        std::size_t end = path.back();
        for (std::size_t v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool pred = std::any_of(d.in(v).begin(), d.in(v).end(),
                                    [&](const Adjacent& a) { return !used[a.vertex] || a.vertex == end; });
            bool succ = std::any_of(d.out(v).begin(), d.out(v).end(),
                                    [&](const Adjacent& a) { return !used[a.vertex] || a.vertex == 1; });
            if (!pred || !succ) return false;
        }
        return true;
    };
    std::function<bool()> go = [&]() -> bool {
        if (path.size() == n) return d.has_arc(path.back(), 1);
        if (!viable()) return false;
        for (const auto& a : d.out(path.back())) {
            if (used[a.vertex]) continue;
            used[a.vertex] = true;
            path.push_back(a.vertex);
            if (go()) return true;
            path.pop_back();
            used[a.vertex] = false;
        }
        return false;
    };
    if (go()) return path;
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> tsp_search(const Tsp& t) {
    std::size_t n = t.c.size();
    if (n == 0) return std::vector<std::size_t>{};
    if (n > 20) too_large("Held-Karp table beyond 20 cities");
    if (n == 1) {
        if (t.L >= 0) return std::vector<std::size_t>{1};
        return std::nullopt;
    }
    // best[mask][j]: shortest path from city 0 through mask ending at j.
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::size_t full = std::size_t{1} << (n - 1);
    std::vector<std::vector<std::int64_t>> best(full, std::vector<std::int64_t>(n, inf));
    std::vector<std::vector<std::size_t>> from(full, std::vector<std::size_t>(n, 0));
    for (std::size_t j = 1; j < n; ++j) best[std::size_t{1} << (j - 1)][j] = t.c[0][j];
    for (std::size_t mask = 1; mask < full; ++mask)
        for (std::size_t j = 1; j < n; ++j) {
            if (!(mask >> (j - 1) & 1) || best[mask][j] == inf) continue;
            for (std::size_t x = 1; x < n; ++x) {
                if (mask >> (x - 1) & 1) continue;
                std::size_t next = mask | (std::size_t{1} << (x - 1));
                std::int64_t cand = best[mask][j] + t.c[j][x];
                if (cand < best[next][x]) {
                    best[next][x] = cand;
                    from[next][x] = j;
                }
            }
        }
    std::int64_t opt = inf;
    std::size_t last = 0;
    for (std::size_t j = 1; j < n; ++j) {
        std::int64_t c = best[full - 1][j] + t.c[j][0];
        if (c < opt) {
            opt = c;
            last = j;
        }
    }
    if (opt > t.L) return std::nullopt;
    std::vector<std::size_t> rev;
    std::size_t mask = full - 1, j = last;
    while (j != 0) {
        rev.push_back(j + 1);
        std::size_t prev = from[mask][j];
        mask &= ~(std::size_t{1} << (j - 1));
        j = prev;
    }
    rev.push_back(1);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Integer points in the box, pruned by row bounds over the unset suffix.
std::optional<std::vector<std::int64_t>> ilp_search(const Ilp& p) {
    std::size_t vars = p.lo.size(), rows = p.A.size();
    std::vector<std::vector<std::int64_t>> smin(rows, std::vector<std::int64_t>(vars + 1, 0)), smax = smin;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = vars; j-- > 0;) {
            std::int64_t a = p.A[r][j];
            std::int64_t lo = a >= 0 ? a * p.lo[j] : a * p.hi[j];
            std::int64_t hi = a >= 0 ? a * p.hi[j] : a * p.lo[j];
            smin[r][j] = smin[r][j + 1] + lo;
            smax[r][j] = smax[r][j + 1] + hi;
        }
    std::vector<std::int64_t> x(vars, 0), partial(rows, 0);
    auto feasible = [&](std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) {
            std::int64_t lo = partial[r] + smin[r][j], hi = partial[r] + smax[r][j];
            if (p.rel[r] != Relation::Ge && lo > p.b[r]) return false;
            if (p.rel[r] != Relation::Le && hi < p.b[r]) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t j) -> bool {
        if (!feasible(j)) return false;
        if (j == vars) return true;
        for (std::int64_t v = p.lo[j]; v <= p.hi[j]; ++v) {
            x[j] = v;
            for (std::size_t r = 0; r < rows; ++r) partial[r] += p.A[r][j] * v;
            bool found = go(j + 1);
            for (std::size_t r = 0; r < rows; ++r) partial[r] -= p.A[r][j] * v;
            if (found) return true;
        }
        return false;
    };
    if (go(0)) return x;
    return std::nullopt;
}

}  // namespace

std::optional<Witness> brute_force_decide(const ProblemInstance& p) { return brute_force_decide(p, oracle_limits_from_env()); }

std::optional<Witness> brute_force_decide(const ProblemInstance& p, const OracleLimits& lim) {
    validate(p);
    auto wrap = [](auto found, auto make) -> std::optional<Witness> {
        if (!found) return std::nullopt;
        return Witness{make(std::move(*found))};
    };
    auto as_vertices = [](std::vector<std::size_t> v) { return VertexSet{std::move(v)}; };
    auto as_selection = [](std::vector<std::size_t> v) { return Selection{std::move(v)}; };
    auto as_tour = [](std::vector<std::size_t> v) { return Tour{std::move(v)}; };
    return std::visit(
        overloaded{
            [&](const Sat& x) {
                cap(x.f.n, lim.variables, "variables");
                return wrap(sat_search(x.f), [](std::vector<bool> v) { return Assignment{std::move(v)}; });
            },
            [&](const ThreeSat& x) {
                cap(x.f.n, lim.variables, "variables");
                return wrap(sat_search(x.f), [](std::vector<bool> v) { return Assignment{std::move(v)}; });
            },
            [&](const Clique& x) {
                cap(x.g.n(), lim.vertices, "vertices");
                return wrap(k_subset(x.g, x.k, true), as_vertices);
            },
            [&](const IndependentSet& x) {
                cap(x.g.n(), lim.vertices, "vertices");
                return wrap(k_subset(x.g, x.k, false), as_vertices);
            },
            [&](const VertexCover& x) {
                cap(x.g.n(), lim.vertices, "vertices");
                return wrap(cover_search(x.g, x.k), as_vertices);
            },
            [&](const GraphColoring& x) {
                cap(x.g.n(), lim.vertices, "vertices");
                return wrap(coloring_search(x.g, x.k), [](std::vector<std::size_t> v) { return ColorMap{std::move(v)}; });
            },
            [&](const ExactCover& x) {
                cap(std::max(x.s.n, x.s.sets.size()), lim.elements, "elements");
                return wrap(family_search(x.s, true, x.s.sets.size()), as_selection);
            },
            [&](const Representatives& x) {
                cap(std::max(x.s.n, x.s.sets.size()), lim.elements, "elements");
                return wrap(representatives_search(x.s), as_selection);
            },
            [&](const SetCover& x) {
                cap(std::max(x.s.n, x.s.sets.size()), lim.elements, "elements");
                return wrap(family_search(x.s, false, x.k), as_selection);
            },
            [&](const Knapsack01& x) {
                cap(x.a.size(), lim.variables, "items");
                return wrap(subset_sum(x.a, x.b), as_selection);
            },
            [&](const KnapsackDecision& x) {
                cap(x.c.size(), lim.variables, "items");
                return wrap(knapsack_search(x), as_selection);
            },
            [&](const Partition& x) -> std::optional<Witness> {
                cap(x.a.size(), lim.variables, "items");
                BigInt total = 0;
                for (const auto& a : x.a) total += a;
                if (total % 2 != 0) return std::nullopt;
                return wrap(subset_sum(x.a, total / 2), as_selection);
            },
            [&](const HamCircuit& x) {
                cap(x.d.n(), lim.vertices, "vertices");
                return wrap(circuit_search(x.d), as_tour);
            },
            [&](const HamCycle& x) -> std::optional<Witness> {
                cap(x.g.n(), lim.vertices, "vertices");
                if (x.g.n() < 3) return std::nullopt;
                return wrap(circuit_search(to_directed(x.g)), as_tour);
            },
            [&](const Tsp& x) {
                cap(x.c.size(), lim.vertices, "cities");
                return wrap(tsp_search(x), as_tour);
            },
            [&](const Ilp& x) {
                cap(x.lo.size(), lim.variables, "variables");
                for (std::size_t j = 0; j < x.lo.size(); ++j)
                    if (std::max(std::llabs(x.lo[j]), std::llabs(x.hi[j])) > lim.box)
                        too_large("box bound of variable " + std::to_string(j + 1) + " exceeds " +
                                  std::to_string(lim.box));
                return wrap(ilp_search(x), [](std::vector<std::int64_t> v) { return IntPoint{std::move(v)}; });
            },
        },
        p);
}

}  // namespace combinlab
