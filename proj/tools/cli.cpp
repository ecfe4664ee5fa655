#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "combinlab/bench.hpp"
#include "combinlab/dp.hpp"
#include "combinlab/generators.hpp"
#include "combinlab/io.hpp"
#include "combinlab/paths_mst.hpp"
#include "combinlab/search_games.hpp"
#include "combinlab/sorting.hpp"
#include "combinlab/tournament.hpp"

namespace combinlab {

namespace {

enum Exit { Ok = 0, Negative = 1, BadInput = 2, TooLarge = 3 };

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 1;
    std::string limits;
    bool json() const { return format == "json"; }
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    RunConfig cfg;
};

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

bool looks_like_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
    }
}

bool is_digraph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == '#') continue;
        return tok == "pd";
    }
    return false;
}

OracleLimits limits_of(const RunConfig& cfg) {
    OracleLimits base = oracle_limits_from_env();
    return cfg.limits.empty() ? base : parse_oracle_limits(cfg.limits, base);
}

// Instances come as JSON (bare, or under "instance"/"target"), DIMACS for
// sat/3sat, graph text plus --k for graph problems, a grid plus --L for tsp.
ProblemInstance load_instance(const std::string& problem, const std::string& text, long long k, long long L) {
    if (looks_like_json(text)) {
        Json j = parse_json(text);
        if (j.contains("target") && j.at("target").is_object()) j = j.at("target");
        else if (j.contains("instance") && j.at("instance").is_object()) j = j.at("instance");
        if (!j.contains("problem")) j["problem"] = problem;
        ProblemInstance p = instance_from_json(j);
        if (!problem.empty() && problem_name(p) != problem)
            throw InputError("instance is " + problem_name(p) + ", expected " + problem);
        return p;
    }
    auto need_k = [&] {
        if (k < 0) throw InputError(problem + " from graph text needs --k");
        return static_cast<std::size_t>(k);
    };
    ProblemInstance p;
    if (problem == "sat") p = Sat{parse_dimacs(text)};
    else if (problem == "3sat") p = ThreeSat{parse_dimacs(text)};
    else if (problem == "clique") p = Clique{parse_graph(text), need_k()};
    else if (problem == "independent-set") p = IndependentSet{parse_graph(text), need_k()};
    else if (problem == "vertex-cover") p = VertexCover{parse_graph(text), need_k()};
    else if (problem == "coloring") p = GraphColoring{parse_graph(text), need_k()};
    else if (problem == "ham-cycle") p = HamCycle{parse_graph(text)};
    else if (problem == "ham-circuit") p = HamCircuit{parse_digraph(text)};
    else if (problem == "tsp") {
        if (L < 0) throw InputError("tsp from a grid needs --L");
        auto c = parse_cost_matrix(text);
        Tsp t;
        t.L = L;
        for (const auto& row : c) {
            std::vector<std::int64_t> r;
            for (const auto& x : row) {
                if (boost::multiprecision::denominator(x) != 1) throw InputError("tsp costs must be integers");
                r.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(x)));
            }
            t.c.push_back(r);
        }
        p = t;
    } else {
        throw InputError(problem + " instances must be JSON");
    }
    validate(p);
    return p;
}

Witness load_witness(const std::string& text) {
    Json j = parse_json(text);
    if (j.is_object() && j.contains("witness")) j = j.at("witness");
    if (j.is_null()) throw InputError("malformed witness: none recorded");
    return witness_from_json(j);
}

const std::vector<std::string>& np_problems() {
    static const std::vector<std::string> names = {
        "sat",       "3sat",          "clique",         "independent-set", "vertex-cover", "coloring",
        "exact-cover", "representatives", "set-cover",  "knapsack01",      "knapsack",     "partition",
        "ham-circuit", "ham-cycle",    "tsp",            "ilp"};
    return names;
}

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
    std::string problem;
    std::string file;
    long long k = -1;
    long long L = -1;
    std::size_t source = 1;
    std::size_t target = 0;
    std::string weight = "area";
};

Json distance_json(const Distance& d) { return d ? rational_to_json(*d) : Json("inf"); }

int solve_graph(Io& io, const SolveArgs& a, const std::string& text) {
    const std::string& p = a.problem;
    Json j{{"problem", p}};
    std::ostringstream t;
    int code = Ok;
    if (p == "euler" || p == "fleury") {
        Graph g = parse_graph(text);
        EulerResult r = p == "euler" ? euler_cycle(g) : euler_fleury(g);
        j["eulerian"] = r.ok();
        if (r.ok()) {
            j["walk"] = r.walk;
            j["edges"] = g.m();
            t << "closed walk over " << g.m() << " edges: " << to_string(r) << '\n';
        } else {
            code = Negative;
            if (r.status == EulerResult::Status::OddDegree) j["odd_vertex"] = r.vertex;
            t << to_string(r) << '\n';
        }
    } else if (p == "bfs") {
        Graph g = parse_graph(text);
        auto f = bfs_forest(g);
        j["order"] = f.order;
        j["roots"] = f.roots;
        j["tree_edges"] = f.tree_edges;
        t << "order: " << join(f.order) << "\nroots: " << join(f.roots) << '\n';
    } else if (p == "components") {
        auto comps = connected_components(parse_graph(text));
        j["components"] = comps;
        for (const auto& c : comps) t << join(c) << '\n';
    } else if (p == "dfs") {
        DfsRecord r = is_digraph_text(text) ? dfs(parse_digraph(text)) : dfs(parse_graph(text));
        Json rows = Json::array();
        for (std::size_t v = 1; v < r.d.size(); ++v) {
            rows.push_back(Json{{"vertex", v}, {"d", r.d[v]}, {"f", r.f[v]}, {"parent", r.parent[v]}});
            t << v << ": d=" << r.d[v] << " f=" << r.f[v] << " parent=" << r.parent[v] << '\n';
        }
        j["vertices"] = rows;
        j["roots"] = r.roots;
    } else if (p == "scc") {
        auto comps = scc_kosaraju(parse_digraph(text));
        j["components"] = comps;
        for (const auto& c : comps) t << join(c) << '\n';
    } else if (p == "dijkstra") {
        Digraph g = parse_digraph(text);
        auto sp = dijkstra(g, a.source);
        Json rows = Json::array();
        for (std::size_t v = 1; v <= g.n(); ++v) {
            auto path = path_to(sp, v);
            rows.push_back(Json{{"vertex", v}, {"dist", distance_json(sp.dist[v])}, {"path", path}});
            t << v << ": " << to_string(sp.dist[v]) << (path.empty() ? "" : "  via " + join(path, "-")) << '\n';
        }
        j["source"] = a.source;
        j["vertices"] = rows;
    } else if (p == "floyd") {
        Digraph g = parse_digraph(text);
        auto ft = floyd_warshall(g);
        Json d = Json::array(), z = Json::array();
        for (std::size_t i = 1; i <= g.n(); ++i) {
            Json dr = Json::array(), zr = Json::array();
            for (std::size_t k = 1; k <= g.n(); ++k) {
                dr.push_back(distance_json(ft.d(i, k)));
                zr.push_back(ft.z(i, k));
                t << (k > 1 ? " " : "") << to_string(ft.d(i, k));
            }
            t << '\n';
            d.push_back(dr);
            z.push_back(zr);
        }
        j["dist"] = d;
        j["next"] = z;
        j["negative"] = ft.negative;
        if (!ft.negative.empty()) t << "negative cycle through: " << join(ft.negative) << '\n';
    } else if (p == "closure") {
        auto c = transitive_closure(parse_digraph(text));
        Json rows = Json::array();
        for (const auto& row : c) {
            std::string s;
            Json r = Json::array();
            for (bool b : row) {
                s += b ? '1' : '0';
                r.push_back(b ? 1 : 0);
            }
            rows.push_back(r);
            t << s << '\n';
        }
        j["closure"] = rows;
    } else if (p == "path") {
        Graph g = parse_graph(text);
        if (a.target == 0) throw InputError("path needs --target");
        auto r = undirected_shortest_path(g, a.source, a.target);
        j["length"] = distance_json(r.length);
        j["path"] = r.path;
        t << to_string(r.length) << (r.path.empty() ? "" : "  via " + join(r.path, "-")) << '\n';
        if (!r.length) code = Negative;
    } else {  // prim, kruskal, maxst
        Graph g = parse_graph(text);
        MstResult r = p == "prim" ? prim(g) : p == "kruskal" ? kruskal(g) : max_spanning_tree(g);
        Json edges = Json::array();
        for (auto id : r.edges) {
            const Edge& e = g.edge(id);
            edges.push_back(Json::array({e.u, e.v, rational_to_json(e.w)}));
            t << e.u << "-" << e.v << " " << to_string(e.w) << '\n';
        }
        j["edges"] = edges;
        j["weight"] = rational_to_json(r.weight);
        t << "weight " << to_string(r.weight) << '\n';
    }
    io.out << (io.cfg.json() ? j.dump() + "\n" : t.str());
    return code;
}

int solve_dp(Io& io, const SolveArgs& a, const std::string& text) {
    const std::string& p = a.problem;
    Json j{{"problem", p}};
    std::ostringstream t;
    if (p == "knapsack" || p == "greedy-knapsack") {
        Json in = parse_json(text);
        auto c = in.at("values").get<std::vector<std::int64_t>>();
        auto v = in.at("volumes").get<std::vector<std::int64_t>>();
        auto cap = in.at("capacity").get<std::int64_t>();
        auto r = p == "knapsack" ? knapsack_pareto(c, v, cap) : greedy_knapsack_by_density(c, v, cap);
        j["set"] = r.set;
        j["value"] = r.value;
        j["volume"] = r.volume;
        t << "items " << join(r.set) << "\nvalue " << r.value << "\nvolume " << r.volume << '\n';
    } else if (p == "allocate") {
        Json in = parse_json(text);
        auto profit = in.at("profit").get<std::vector<std::vector<std::int64_t>>>();
        auto budget = in.at("budget").get<std::int64_t>();
        AllocationInstance inst = in.contains("cost")
                                      ? AllocationInstance{in.at("cost").get<std::vector<std::vector<std::int64_t>>>(), profit, budget}
                                      : unit_cost_allocation(profit, budget);
        auto r = allocate(inst);
        j["value"] = r.value;
        j["plan"] = r.plan;
        t << "value " << r.value << "\nplan";
        for (auto x : r.plan) t << ' ' << x;
        t << '\n';
    } else if (p == "lcs") {
        std::istringstream in(text);
        std::string x, y;
        std::getline(in, x);
        std::getline(in, y);
        auto trim = [](std::string& s) {
            while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        };
        trim(x);
        trim(y);
        auto r = lcs(x, y);
        std::string seq(r.sequence.begin(), r.sequence.end());
        j["length"] = r.length;
        j["sequence"] = seq;
        t << r.length << ' ' << seq << '\n';
    } else if (p == "matrix-chain") {
        auto r = matrix_chain(parse_integers(text));
        j["cost"] = bigint_to_json(r.cost);
        j["parenthesization"] = r.parenthesization;
        t << r.cost << ' ' << r.parenthesization << '\n';
    } else {  // triangulate
        auto xs = parse_integers(text);
        if (xs.size() % 2) throw InputError("polygon file needs x y pairs");
        std::vector<Point> poly;
        for (std::size_t i = 0; i < xs.size(); i += 2) poly.push_back({xs[i], xs[i + 1]});
        if (poly.size() < 3) throw InputError("polygon needs at least 3 vertices");
        TriangleWeight w;
        if (a.weight == "area") w = area_weight(poly);
        else if (a.weight == "l1") w = l1_perimeter_weight(poly);
        else throw InputError("unknown weight: " + a.weight);
        auto r = polygon_triangulation(poly.size(), w);
        j["cost"] = rational_to_json(r.cost);
        j["diagonals"] = r.diagonals;
        t << "cost " << to_string(r.cost) << "\ndiagonals";
        for (auto [u, v] : r.diagonals) t << ' ' << u << '-' << v;
        t << '\n';
    }
    io.out << (io.cfg.json() ? j.dump() + "\n" : t.str());
    return Ok;
}

LiarPolicy parse_policy(const std::string& s) {
    if (s == "lie") return LiarPolicy::AlwaysLie;
    if (s == "truth") return LiarPolicy::AlwaysTruth;
    if (s == "yes") return LiarPolicy::AlwaysYes;
    if (s == "no") return LiarPolicy::AlwaysNo;
    if (s == "random") return LiarPolicy::Random;
    throw InputError("unknown liar policy: " + s);
}

int solve_search(Io& io, const SolveArgs& a, const std::string& text) {
    const std::string& p = a.problem;
    Json j{{"problem", p}};
    std::ostringstream t;
    int code = Ok;
    if (p == "bitonic") {
        auto seq = parse_integers(text);
        SequenceProbe probe(seq);
        auto r = bitonic_max(seq.size(), probe);
        j["index"] = r.index;
        j["value"] = r.value;
        j["probes"] = probe.count();
        j["bound"] = fib_index(std::max<std::size_t>(seq.size(), 1));
        t << "peak at " << r.index << " value " << r.value << ", " << probe.count() << " probes\n";
    } else {
        Json in = parse_json(text);
        if (p == "radioactive") {
            auto n = in.at("n").get<std::size_t>();
            RadioactiveWorld w(n, in.at("hot").get<std::size_t>());
            auto hot = find_radioactive(n, w);
            j["ball"] = hot;
            j["tests"] = w.count();
            j["bound"] = ceil_log2(n);
            t << "ball " << hot << ", " << w.count() << " tests (bound " << ceil_log2(n) << ")\n";
        } else if (p == "counterfeit") {
            auto n = in.at("n").get<std::size_t>();
            CoinWorld w(n, in.value("coin", std::size_t{0}), in.value("heavier", true));
            auto v = find_counterfeit(n, w);
            bool fake = v.kind == CoinVerdict::Kind::Counterfeit;
            j["counterfeit"] = fake ? Json(v.index) : Json(nullptr);
            if (fake) j["heavier"] = v.heavier;
            j["weighings"] = w.count();
            j["bound"] = counterfeit_bound(n);
            if (fake) t << "coin " << v.index << (v.heavier ? " heavier" : " lighter");
            else t << "all genuine";
            t << ", " << w.count() << " weighings (bound " << counterfeit_bound(n) << ")\n";
        } else if (p == "setequal") {
            TruthfulEquality eq(in.at("a").get<std::vector<std::int64_t>>(), in.at("b").get<std::vector<std::int64_t>>());
            bool same = sets_equal(eq.size(), eq);
            j["equal"] = same;
            j["queries"] = eq.count();
            t << (same ? "equal" : "different") << ", " << eq.count() << " queries\n";
            if (!same) code = Negative;
        } else {  // whoiswho
            std::vector<bool> honest;
            for (auto x : in.at("honest").get<std::vector<int>>()) honest.push_back(x != 0);
            GroupWorld w(honest, parse_policy(in.value("policy", std::string("lie"))), io.cfg.seed);
            auto labels = classify_group(honest.size(), w);
            Json l = Json::array();
            for (bool b : labels) l.push_back(b ? 1 : 0);
            j["honest"] = l;
            j["questions"] = w.count();
            j["bound"] = whoiswho_bound(honest.size());
            for (bool b : labels) t << (b ? 'H' : 'D');
            t << ", " << w.count() << " questions (bound " << whoiswho_bound(honest.size()) << ")\n";
        }
    }
    io.out << (io.cfg.json() ? j.dump() + "\n" : t.str());
    return code;
}

int solve_np(Io& io, const SolveArgs& a, const std::string& text) {
    ProblemInstance p = load_instance(a.problem, text, a.k, a.L);
    auto w = brute_force_decide(p, limits_of(io.cfg));
    Json j{{"problem", problem_name(p)}, {"answer", w.has_value()}};
    j["witness"] = w ? witness_to_json(*w) : Json(nullptr);
    if (io.cfg.json()) io.out << j.dump() << '\n';
    else io.out << (w ? "yes " + witness_to_json(*w).dump() : std::string("no")) << '\n';
    return w ? Ok : Negative;
}

int run_solve(Io& io, const SolveArgs& a) {
    static const std::vector<std::string> graph = {"euler", "fleury", "bfs", "components", "dfs", "scc", "dijkstra",
                                                   "floyd", "closure", "path", "prim", "kruskal", "maxst"};
    static const std::vector<std::string> dp = {"knapsack-dp", "greedy-knapsack", "allocate", "lcs", "matrix-chain",
                                                "triangulate"};
    static const std::vector<std::string> search = {"radioactive", "counterfeit", "bitonic", "setequal", "whoiswho"};
    auto has = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), a.problem) != v.end(); };
    std::string text = read_file(a.file);
    if (has(graph)) return solve_graph(io, a, text);
    if (has(search)) return solve_search(io, a, text);
    // "knapsack" with a values/volumes file is the DP; with a target it is the decision problem.
    if (a.problem == "knapsack" && !(looks_like_json(text) && parse_json(text).contains("target"))) {
        return solve_dp(io, a, text);
    }
    if (has(dp)) {
        SolveArgs b = a;
        if (b.problem == "knapsack-dp") b.problem = "knapsack";
        return solve_dp(io, b, text);
    }
    if (std::find(np_problems().begin(), np_problems().end(), a.problem) != np_problems().end()) return solve_np(io, a, text);
    throw InputError("unknown problem: " + a.problem);
}

// ---- reduce / verify / twosat -------------------------------------------------

int run_reduce(Io& io, const std::string& kind_name, const std::string& file, const std::string& witness_file, long long k,
               long long L) {
    ReductionKind kind = parse_reduction_kind(kind_name);
    std::string text = read_file(file);
    std::string src = source_problem(kind);
    // Sat reductions take 3-CNF input too.
    std::string hint = src;
    if (src == "sat" && looks_like_json(text)) {
        Json j = parse_json(text);
        if (j.contains("problem")) hint = j.at("problem").get<std::string>();
    }
    ProblemInstance source = load_instance(hint, text, k, L);
    ReductionOutput r = apply_reduction(kind, source);
    Json j{{"reduction", to_string(kind)}, {"source", instance_to_json(source)}, {"target", instance_to_json(r.target)}};
    j["legend"] = r.legend;
    std::optional<Witness> sw;
    std::string note;
    if (!witness_file.empty()) {
        sw = load_witness(read_file(witness_file));
        if (!verify_witness(source, *sw)) throw InputError("the given source witness is not valid");
    } else {
        try {
            sw = brute_force_decide(source, limits_of(io.cfg));
            if (!sw) note = "source instance has no witness";
        } catch (const LimitError&) {
            note = "source too large for the oracle; pass --witness";
        }
    }
    j["source_witness"] = sw ? witness_to_json(*sw) : Json(nullptr);
    j["witness"] = sw ? witness_to_json(r.forward(*sw)) : Json(nullptr);
    if (!note.empty()) j["note"] = note;
    if (io.cfg.json()) {
        io.out << j.dump() << '\n';
        return Ok;
    }
    io.out << "reduction " << to_string(kind) << ": " << problem_name(source) << " -> " << problem_name(r.target) << '\n';
    io.out << "target " << instance_to_json(r.target).dump() << '\n';
    io.out << "witness map:\n";
    for (const auto& line : r.legend) io.out << "  " << line << '\n';
    if (sw) io.out << "source witness " << witness_to_json(*sw).dump() << "\ntarget witness " << j["witness"].dump() << '\n';
    if (!note.empty()) io.out << note << '\n';
    return Ok;
}

int run_verify(Io& io, const std::string& problem, const std::string& instance, const std::string& witness, long long k,
               long long L) {
    ProblemInstance p = load_instance(problem, read_file(instance), k, L);
    Witness w = load_witness(read_file(witness));
    bool ok = verify_witness(p, w);
    if (io.cfg.json())
        io.out << Json{{"problem", problem_name(p)}, {"accepted", ok}}.dump() << '\n';
    else
        io.out << (ok ? "accepted" : "rejected") << '\n';
    return ok ? Ok : Negative;
}

int run_twosat(Io& io, const std::string& file) {
    std::string text = read_file(file);
    CnfFormula f = looks_like_json(text) ? cnf_from_json(parse_json(text)) : parse_dimacs(text);
    for (const auto& c : f.clauses)
        if (c.size() > 2) throw InputError("twosat needs clauses of at most 2 literals");
    auto r = twosat_solve(f);
    Json j{{"satisfiable", r.satisfiable}};
    if (r.satisfiable) {
        Json a = Json::array();
        for (bool b : r.assignment) a.push_back(b ? 1 : 0);
        j["witness"] = Json{{"assignment", a}};
        if (io.cfg.json()) {
            io.out << j.dump() << '\n';
        } else {
            io.out << "SAT\n";
            for (std::size_t i = 0; i < r.assignment.size(); ++i)
                io.out << (i ? " " : "") << (r.assignment[i] ? "" : "-") << i + 1;
            io.out << '\n';
        }
        return Ok;
    }
    std::size_t x = r.conflict_var;
    std::size_t comp = r.component[literal_vertex({x, true})];
    std::vector<std::size_t> members;
    for (std::size_t v = 1; v < r.component.size(); ++v)
        if (r.component[v] == comp) members.push_back(v);
    j["conflict_var"] = x;
    Json lits = Json::array();
    for (auto v : members) {
        Literal l = vertex_literal(v);
        lits.push_back(l.positive ? static_cast<std::int64_t>(l.var) : -static_cast<std::int64_t>(l.var));
    }
    j["component"] = lits;
    if (io.cfg.json())
        io.out << j.dump() << '\n';
    else
        io.out << "UNSAT\nx" << x << " and its negation share the component " << lits.dump() << '\n';
    return Negative;
}

// ---- sort / select ---------------------------------------------------------------

int run_sort(Io& io, const std::string& algo_name, const std::string& file, bool count, bool tie_break) {
    SortAlgo algo = parse_sort_algo(algo_name);
    auto keys = parse_integers(read_file(file));
    auto r = sort_keys(algo, keys, tie_break);
    auto b = sort_budgets(keys.size());
    std::uint64_t bound = algo == SortAlgo::Insertion ? b.a_n : algo == SortAlgo::MergeGrouped ? b.b_n : b.f_n;
    if (io.cfg.json()) {
        Json j{{"algorithm", to_string(algo)}, {"n", keys.size()}, {"sorted", r.sorted}};
        if (count) {
            j["comparisons"] = r.comparisons;
            j["bound"] = bound;
            j["info_lower"] = b.info_lower;
        }
        io.out << j.dump() << '\n';
        return Ok;
    }
    for (std::size_t i = 0; i < r.sorted.size(); ++i) io.out << (i ? " " : "") << r.sorted[i];
    io.out << '\n';
    if (count)
        io.out << "comparisons " << r.comparisons << " (worst case " << bound << ", ⌈log₂ n!⌉ " << b.info_lower << ")\n";
    return Ok;
}

int run_select(Io& io, const std::string& algo, const std::string& file, std::size_t t) {
    auto keys = parse_integers(read_file(file));
    std::size_t n = keys.size();
    if (n == 0) throw InputError("select needs at least one key");
    auto cmp = counting_comparator(keys);
    std::vector<std::size_t> picked;
    Json bound;
    if (algo == "max") {
        picked = {tournament_max(cmp).index};
        bound = n - 1;
    } else if (algo == "maxmin") {
        auto [a, b] = max_and_min(cmp);
        picked = {a, b};
        bound = max_and_min_bound(n);
    } else if (algo == "top2") {
        auto [a, b] = top_two(cmp);
        picked = {a, b};
        bound = top_two_bound(n);
    } else if (algo == "top3") {
        auto top = top_three(cmp);
        picked = {top[0], top[1], top[2]};
        bound = top_three_bound(n);
    } else if (algo == "tournament" || algo == "linear") {
        if (t < 1 || t > n) throw InputError("--t must lie in 1..n");
        picked = {algo == "tournament" ? select_t_tournament(t, cmp) : select_t_linear(t, cmp)};
        bound = algo == "tournament" ? Json(select_tournament_bound(n, t))
                                     : (n > 32 ? Json(select_linear_bound(static_cast<std::int64_t>(n))) : Json(nullptr));
    } else {
        throw InputError("unknown select algorithm: " + algo);
    }
    std::vector<std::int64_t> values;
    for (auto id : picked) values.push_back(keys[id]);
    if (io.cfg.json()) {
        Json positions = Json::array();
        for (auto id : picked) positions.push_back(id + 1);
        io.out << Json{{"algorithm", algo}, {"n", n}, {"positions", positions}, {"values", values},
                       {"comparisons", cmp.count()}, {"bound", bound}}
                      .dump()
               << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) io.out << (i ? " " : "") << values[i];
        io.out << "\ncomparisons " << cmp.count() << " (bound " << (bound.is_null() ? "-" : bound.dump()) << ")\n";
    }
    return Ok;
}

// ---- approx / bench / gen ----------------------------------------------------------

int run_approx(Io& io, const std::string& algo, const std::string& file, bool oracle, const std::string& eps_text) {
    std::string text = read_file(file);
    ApproxReport r;
    if (algo == "vc-matching" || algo == "vc-greedy") {
        r = approx_vertex_cover(parse_graph(text), algo == "vc-greedy", oracle);
    } else if (algo == "maxcut") {
        r = approx_max_cut(parse_graph(text), oracle);
    } else if (algo == "setcover") {
        Json j = parse_json(text);
        r = approx_set_cover(set_system_from_json(j.contains("system") ? j.at("system") : j), oracle);
    } else if (algo == "double-tree" || algo == "christofides") {
        r = approx_tsp(parse_cost_matrix(text), algo == "christofides", oracle);
    } else if (algo == "fptas") {
        Json j = parse_json(text);
        r = approx_knapsack(j.at("values").get<std::vector<std::int64_t>>(), j.at("volumes").get<std::vector<std::int64_t>>(),
                            j.at("capacity").get<std::int64_t>(), parse_rational(eps_text), oracle);
    } else if (algo == "firstfit") {
        r = approx_first_fit(parse_rationals(text), oracle);
    } else {
        throw InputError("unknown approximation algorithm: " + algo);
    }
    r.seed = io.cfg.seed;
    if (io.cfg.json()) {
        io.out << to_json(r).dump() << '\n';
    } else {
        io.out << r.algorithm << " n=" << r.n << " heuristic=" << to_string(r.heuristic);
        if (r.optimal) io.out << " optimal=" << to_string(*r.optimal);
        if (r.ratio) io.out << " ratio=" << to_string(*r.ratio);
        if (r.bound) io.out << " bound=" << to_string(*r.bound);
        io.out << "\nsolution " << r.solution.dump() << '\n';
    }
    return Ok;
}

int run_bench(Io& io, const std::string& suite, const std::string& range, std::size_t trials) {
    BenchOptions opt;
    opt.suite = suite;
    opt.seed = io.cfg.seed;
    opt.trials = trials;
    if (!range.empty()) std::tie(opt.lo, opt.hi) = parse_range(range);
    BenchTable t = run_bench(opt);
    io.out << (io.cfg.json() ? to_json(t).dump(2) + "\n" : to_text(t));
    return t.violations ? Negative : Ok;
}

struct GenArgs {
    std::string family;
    std::size_t n = 8;
    std::string p = "1/2";
    std::size_t m = 0;
    std::size_t r = 0;
    std::size_t width = 3;
    std::int64_t range = 20;
    std::int64_t wmax = 10;
    std::string eps = "1";
};

int run_gen(Io& io, const GenArgs& a) {
    Rng rng(io.cfg.seed);
    Rational prob = parse_rational(a.p);
    if (prob < 0 || prob > 1) throw InputError("--p must lie in [0, 1]");
    auto num = static_cast<std::uint64_t>(boost::multiprecision::numerator(prob));
    auto den = static_cast<std::uint64_t>(boost::multiprecision::denominator(prob));
    const std::string& f = a.family;
    std::ostream& out = io.out;
    if (f == "graph") out << to_text(random_graph(a.n, num, den, rng));
    else if (f == "weighted-graph") out << to_text(random_weighted_graph(a.n, num, den, 1, a.wmax, rng));
    else if (f == "connected-graph") out << to_text(random_connected_graph(a.n, num, den, 1, a.wmax, rng));
    else if (f == "digraph") out << to_text(random_digraph(a.n, num, den, 0, a.wmax, rng));
    else if (f == "metric-tsp") out << to_text(random_metric_tsp(a.n, a.range, rng));
    else if (f == "gap") out << to_text(tsp_gap_instance(random_graph(a.n, num, den, rng), parse_rational(a.eps)));
    else if (f == "cnf") out << to_dimacs(random_cnf(a.n, a.r ? a.r : a.n, a.width, rng));
    else if (f == "setsystem") out << set_system_to_json(random_set_system(a.n, a.m ? a.m : a.n, rng)).dump() << '\n';
    else if (f == "knapsack") {
        auto k = random_knapsack(a.n, 100, 30, rng);
        out << Json{{"values", k.values}, {"volumes", k.volumes}, {"capacity", k.capacity}}.dump() << '\n';
    } else if (f == "bins") {
        auto s = random_bin_sizes(a.n, 12, rng);
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << to_string(s[i]);
        out << '\n';
    } else if (f == "permutation") {
        auto p = random_permutation(rng, a.n);
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << '\n';
    } else if (f == "counterexample") {
        out << to_text(vc_greedy_counterexample(a.n).g);
    } else {
        throw InputError("unknown generator family: " + f);
    }
    return Ok;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial algorithms laboratory", "combinlab"};
    app.require_subcommand(1);
    app.fallthrough();
    Io io{out, err, {}};
    app.add_option("--format", io.cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", io.cfg.seed, "seed for generators and benches");
    app.add_option("--limit", io.cfg.limits, "oracle caps, e.g. vertices=14,variables=22");

    SolveArgs solve;
    auto* s_solve = app.add_subcommand("solve", "run a graph, DP, search or brute-force solver");
    s_solve->add_option("problem", solve.problem)->required();
    s_solve->add_option("file", solve.file)->required();
    s_solve->add_option("--k", solve.k);
    s_solve->add_option("--L", solve.L);
    s_solve->add_option("--source", solve.source);
    s_solve->add_option("--target", solve.target);
    s_solve->add_option("--weight", solve.weight, "triangulation weight: area or l1");

    std::string sort_algo, sort_file;
    bool sort_count = false, tie_break = false;
    auto* s_sort = app.add_subcommand("sort", "sort integer keys and count comparisons");
    s_sort->add_option("algo", sort_algo)->required();
    s_sort->add_option("file", sort_file)->required();
    s_sort->add_flag("--count", sort_count);
    s_sort->add_flag("--tie-break", tie_break);

    std::string select_file, select_algo = "linear";
    std::size_t select_t = 1;
    auto* s_select = app.add_subcommand("select", "max, max+min, top-2, top-3 or t-th largest");
    s_select->add_option("file", select_file)->required();
    s_select->add_option("--algo", select_algo, "max, maxmin, top2, top3, tournament, linear");
    s_select->add_option("--t", select_t);

    std::string reduce_kind, reduce_file, reduce_witness;
    long long reduce_k = -1, reduce_L = -1;
    auto* s_reduce = app.add_subcommand("reduce", "apply a reduction and map a witness forward");
    s_reduce->add_option("kind", reduce_kind)->required();
    s_reduce->add_option("file", reduce_file)->required();
    s_reduce->add_option("--witness", reduce_witness);
    s_reduce->add_option("--k", reduce_k);
    s_reduce->add_option("--L", reduce_L);

    std::string verify_problem, verify_instance, verify_witness_file;
    long long verify_k = -1, verify_L = -1;
    auto* s_verify = app.add_subcommand("verify", "check a witness");
    s_verify->add_option("problem", verify_problem)->required();
    s_verify->add_option("instance", verify_instance)->required();
    s_verify->add_option("witness", verify_witness_file)->required();
    s_verify->add_option("--k", verify_k);
    s_verify->add_option("--L", verify_L);

    std::string twosat_file;
    auto* s_twosat = app.add_subcommand("twosat", "2-SAT through the implication graph");
    s_twosat->add_option("cnf", twosat_file)->required();

    std::string approx_algo, approx_file, approx_eps = "1";
    bool approx_oracle = false;
    auto* s_approx = app.add_subcommand("approx", "run an approximation algorithm");
    s_approx->add_option("algo", approx_algo)->required();
    s_approx->add_option("file", approx_file)->required();
    s_approx->add_flag("--oracle", approx_oracle, "also compute the exact optimum");
    s_approx->add_option("--eps", approx_eps);

    std::string bench_suite, bench_range;
    std::size_t bench_trials = 0;
    auto* s_bench = app.add_subcommand("bench", "bound-vs-measured tables");
    s_bench->add_option("suite", bench_suite)->required();
    s_bench->add_option("--n", bench_range, "a..b");
    s_bench->add_option("--trials", bench_trials);

    GenArgs gen;
    auto* s_gen = app.add_subcommand("gen", "random instance generators");
    s_gen->add_option("family", gen.family)->required();
    s_gen->add_option("--n", gen.n);
    s_gen->add_option("--p", gen.p, "edge probability p/q");
    s_gen->add_option("--m", gen.m);
    s_gen->add_option("--r", gen.r);
    s_gen->add_option("--width", gen.width);
    s_gen->add_option("--range", gen.range);
    s_gen->add_option("--wmax", gen.wmax);
    s_gen->add_option("--eps", gen.eps);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        std::string word;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i].rfind("-", 0) == 0) {
                if (args[i].find('=') == std::string::npos) ++i;  // global options all take a value
                continue;
            }
            word = args[i];
            break;
        }
        if (!word.empty() && app.get_subcommands([&](CLI::App* s) { return s->get_name() == word; }).empty())
            err << "error: unknown subcommand " << word << "\n" << app.help();
        else
            err << "error: " << e.what() << "\n" << app.help();
        return BadInput;
    }

    try {
        if (s_solve->parsed()) return run_solve(io, solve);
        if (s_sort->parsed()) return run_sort(io, sort_algo, sort_file, sort_count, tie_break);
        if (s_select->parsed()) return run_select(io, select_algo, select_file, select_t);
        if (s_reduce->parsed()) return run_reduce(io, reduce_kind, reduce_file, reduce_witness, reduce_k, reduce_L);
        if (s_verify->parsed())
            return run_verify(io, verify_problem, verify_instance, verify_witness_file, verify_k, verify_L);
        if (s_twosat->parsed()) return run_twosat(io, twosat_file);
        if (s_approx->parsed()) return run_approx(io, approx_algo, approx_file, approx_oracle, approx_eps);
        if (s_bench->parsed()) return run_bench(io, bench_suite, bench_range, bench_trials);
        if (s_gen->parsed()) return run_gen(io, gen);
    } catch (const LimitError& e) {
        err << "limit: " << e.what() << '\n';
        return TooLarge;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: bad JSON field: " << e.what() << '\n';
        return BadInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    }
    err << app.help();
    return BadInput;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace combinlab
