#include "combinlab/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace combinlab {

namespace {

template <class T>
T get(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("bad field \"") + key + "\"");
    }
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected an integer or a \"p/q\" string");
}

std::vector<Edge> edges_from_json(const Json& j, const char* key, bool& weighted) {
    std::vector<Edge> out;
    weighted = false;
    if (!j.contains(key)) return out;
    for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw InputError(std::string("bad entry in \"") + key + "\"");
        Edge x;
        x.u = e[0].get<std::size_t>();
        x.v = e[1].get<std::size_t>();
        if (e.size() == 3) {
            x.w = rational_from_json(e[2]);
            weighted = true;
        }
        out.push_back(x);
    }
    return out;
}

Json edges_to_json(const std::vector<Edge>& edges, bool weighted) {
    Json a = Json::array();
    for (const auto& e : edges) {
        Json x = Json::array({e.u, e.v});
        if (weighted) x.push_back(rational_to_json(e.w));
        a.push_back(x);
    }
    return a;
}

std::vector<BigInt> bigints(const Json& j) {
    std::vector<BigInt> out;
    if (!j.is_array()) throw InputError("expected an array of integers");
    for (const auto& x : j) out.push_back(bigint_from_json(x));
    return out;
}

Json bigints_to_json(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(bigint_to_json(x));
    return a;
}

const char* relation_name(Relation r) { return r == Relation::Le ? "<=" : r == Relation::Ge ? ">=" : "="; }

Relation relation_from(const std::string& s) {
    if (s == "<=") return Relation::Le;
    if (s == ">=") return Relation::Ge;
    if (s == "=" || s == "==") return Relation::Eq;
    throw InputError("bad relation: " + s);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json rational_to_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return bigint_to_json(boost::multiprecision::numerator(r));
    return to_string(r);
}

Json bigint_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw InputError("bad integer: " + s);
        return BigInt(s);
    }
    throw InputError("expected an integer");
}

Json graph_to_json(const Graph& g) {
    return Json{{"n", g.n()}, {"edges", edges_to_json(g.edges(), g.weighted())}};
}

Graph graph_from_json(const Json& j) {
    bool weighted = false;
    auto edges = edges_from_json(j, "edges", weighted);
    return Graph(get<std::size_t>(j, "n"), std::move(edges), weighted);
}

Json digraph_to_json(const Digraph& d) {
    return Json{{"n", d.n()}, {"arcs", edges_to_json(d.arcs(), d.weighted())}};
}

Digraph digraph_from_json(const Json& j) {
    bool weighted = false;
    auto arcs = edges_from_json(j, "arcs", weighted);
    return Digraph(get<std::size_t>(j, "n"), std::move(arcs), weighted);
}

Json cnf_to_json(const CnfFormula& f) {
    Json clauses = Json::array();
    for (const auto& c : f.clauses) {
        Json x = Json::array();
        for (const auto& l : c) x.push_back(l.positive ? static_cast<std::int64_t>(l.var) : -static_cast<std::int64_t>(l.var));
        clauses.push_back(x);
    }
    return Json{{"n", f.n}, {"clauses", clauses}};
}

CnfFormula cnf_from_json(const Json& j) {
    CnfFormula f;
    f.n = get<std::size_t>(j, "n");
    for (const auto& c : get<std::vector<std::vector<std::int64_t>>>(j, "clauses")) {
        std::vector<Literal> clause;
        for (auto x : c) {
            if (x == 0) throw InputError("literal 0 is not allowed");
            clause.push_back({static_cast<std::size_t>(x < 0 ? -x : x), x > 0});
        }
        f.clauses.push_back(clause);
    }
    f.validate();
    return f;
}

Json set_system_to_json(const SetSystem& s) { return Json{{"n", s.n}, {"sets", s.sets}}; }

SetSystem set_system_from_json(const Json& j) {
    SetSystem s;
    s.n = get<std::size_t>(j, "n");
    s.sets = get<std::vector<std::vector<std::size_t>>>(j, "sets");
    for (auto& set : s.sets) std::sort(set.begin(), set.end());
    s.validate();
    return s;
}

Json instance_to_json(const ProblemInstance& p) {
    Json j{{"problem", problem_name(p)}};
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Sat> || std::is_same_v<T, ThreeSat>) {
                j["formula"] = cnf_to_json(x.f);
            } else if constexpr (std::is_same_v<T, Clique> || std::is_same_v<T, IndependentSet> ||
                                 std::is_same_v<T, VertexCover> || std::is_same_v<T, GraphColoring>) {
                j["graph"] = graph_to_json(x.g);
                j["k"] = x.k;
            } else if constexpr (std::is_same_v<T, ExactCover> || std::is_same_v<T, Representatives>) {
                j["system"] = set_system_to_json(x.s);
            } else if constexpr (std::is_same_v<T, SetCover>) {
                j["system"] = set_system_to_json(x.s);
                j["k"] = x.k;
            } else if constexpr (std::is_same_v<T, Knapsack01>) {
                j["a"] = bigints_to_json(x.a);
                j["b"] = bigint_to_json(x.b);
            } else if constexpr (std::is_same_v<T, KnapsackDecision>) {
                j["values"] = x.c;
                j["volumes"] = x.v;
                j["capacity"] = x.capacity;
                j["target"] = x.target;
            } else if constexpr (std::is_same_v<T, Partition>) {
                j["a"] = bigints_to_json(x.a);
            } else if constexpr (std::is_same_v<T, HamCircuit>) {
                j["digraph"] = digraph_to_json(x.d);
            } else if constexpr (std::is_same_v<T, HamCycle>) {
                j["graph"] = graph_to_json(x.g);
            } else if constexpr (std::is_same_v<T, Tsp>) {
                j["c"] = x.c;
                j["L"] = x.L;
            } else if constexpr (std::is_same_v<T, Ilp>) {
                j["A"] = x.A;
                j["b"] = x.b;
                Json rel = Json::array();
                for (auto r : x.rel) rel.push_back(relation_name(r));
                j["rel"] = rel;
                j["lo"] = x.lo;
                j["hi"] = x.hi;
            }
        },
        p);
    return j;
}

ProblemInstance instance_from_json(const Json& j) {
    std::string tag = get<std::string>(j, "problem");
    auto need = [&](const char* key) -> const Json& {
        if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
        return j.at(key);
    };
    auto graph = [&] { return graph_from_json(need("graph")); };
    auto k = [&] { return get<std::size_t>(j, "k"); };
    ProblemInstance p;
    if (tag == "sat") p = Sat{cnf_from_json(need("formula"))};
    else if (tag == "3sat") p = ThreeSat{cnf_from_json(need("formula"))};
    else if (tag == "clique") p = Clique{graph(), k()};
    else if (tag == "independent-set") p = IndependentSet{graph(), k()};
    else if (tag == "vertex-cover") p = VertexCover{graph(), k()};
    else if (tag == "coloring") p = GraphColoring{graph(), k()};
    else if (tag == "exact-cover") p = ExactCover{set_system_from_json(need("system"))};
    else if (tag == "representatives") p = Representatives{set_system_from_json(need("system"))};
    else if (tag == "set-cover") p = SetCover{set_system_from_json(need("system")), k()};
    else if (tag == "knapsack01") p = Knapsack01{bigints(need("a")), bigint_from_json(need("b"))};
    else if (tag == "knapsack")
        p = KnapsackDecision{get<std::vector<std::int64_t>>(j, "values"), get<std::vector<std::int64_t>>(j, "volumes"),
                             get<std::int64_t>(j, "capacity"), get<std::int64_t>(j, "target")};
    else if (tag == "partition") p = Partition{bigints(need("a"))};
    else if (tag == "ham-circuit") p = HamCircuit{digraph_from_json(need("digraph"))};
    else if (tag == "ham-cycle") p = HamCycle{graph()};
    else if (tag == "tsp") p = Tsp{get<std::vector<std::vector<std::int64_t>>>(j, "c"), get<std::int64_t>(j, "L")};
    else if (tag == "ilp") {
        Ilp x;
        x.A = get<std::vector<std::vector<std::int64_t>>>(j, "A");
        x.b = get<std::vector<std::int64_t>>(j, "b");
        for (const auto& r : get<std::vector<std::string>>(j, "rel")) x.rel.push_back(relation_from(r));
        x.lo = get<std::vector<std::int64_t>>(j, "lo");
        x.hi = get<std::vector<std::int64_t>>(j, "hi");
        p = x;
    } else {
        throw InputError("unknown problem: " + tag);
    }
    validate(p);
    return p;
}

Json witness_to_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Assignment>) {
                Json a = Json::array();
                for (bool b : x.values) a.push_back(b ? 1 : 0);
                return Json{{"assignment", a}};
            } else if constexpr (std::is_same_v<T, VertexSet>) {
                return Json{{"vertices", x.vertices}};
            } else if constexpr (std::is_same_v<T, ColorMap>) {
                return Json{{"colors", x.color}};
            } else if constexpr (std::is_same_v<T, Selection>) {
                return Json{{"selection", x.items}};
            } else if constexpr (std::is_same_v<T, Tour>) {
                return Json{{"tour", x.order}};
            } else {
                return Json{{"point", x.x}};
            }
        },
        w);
}

Witness witness_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1) throw InputError("malformed witness: expected one key");
    try {
        if (j.contains("assignment")) {
            std::vector<bool> v;
            for (auto x : j.at("assignment").get<std::vector<int>>()) {
                if (x != 0 && x != 1) throw InputError("malformed witness: assignment entries must be 0 or 1");
                v.push_back(x == 1);
            }
            return Assignment{v};
        }
        if (j.contains("vertices")) return VertexSet{j.at("vertices").get<std::vector<std::size_t>>()};
        if (j.contains("colors")) return ColorMap{j.at("colors").get<std::vector<std::size_t>>()};
        if (j.contains("selection")) return Selection{j.at("selection").get<std::vector<std::size_t>>()};
        if (j.contains("tour")) return Tour{j.at("tour").get<std::vector<std::size_t>>()};
        if (j.contains("point")) return IntPoint{j.at("point").get<std::vector<std::int64_t>>()};
    } catch (const nlohmann::json::exception&) {
        throw InputError("malformed witness: bad entries");
    }
    throw InputError("malformed witness: unknown key " + j.begin().key());
}

CostMatrix parse_cost_matrix(const std::string& text) {
    std::vector<Rational> cells;
    std::istringstream in(text);
    std::string line;
    std::size_t rows = 0, width = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        std::size_t count = 0;
        while (ls >> tok) {
            cells.push_back(parse_rational(tok));
            ++count;
        }
        if (count == 0) continue;
        if (rows > 0 && count != width) throw InputError("cost matrix rows differ in length");
        width = count;
        ++rows;
    }
    if (rows != width) throw InputError("cost matrix must be square");
    CostMatrix c(rows, std::vector<Rational>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) c[i][j] = cells[i * rows + j];
    return c;
}

std::string to_text(const CostMatrix& c) {
    std::ostringstream out;
    for (const auto& row : c) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_string(row[j]);
        out << '\n';
    }
    return out.str();
}

std::vector<std::int64_t> parse_integers(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size()) throw InputError("not an integer: " + tok);
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(parse_rational(tok));
    return out;
}

}  // namespace combinlab
