#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "combinlab/common.hpp"
#include "combinlab/graph.hpp"

namespace combinlab {

// x^sigma: positive == (sigma == 1).
struct Literal {
    std::size_t var = 0;
    bool positive = true;
    Literal negated() const { return {var, !positive}; }
    bool operator==(const Literal&) const = default;
};

struct CnfFormula {
    std::size_t n = 0;
    std::vector<std::vector<Literal>> clauses;

    bool is_3cnf() const;
    void validate() const;
};

// values[i-1] is x_i.
bool satisfies(const CnfFormula& f, const std::vector<bool>& values);

CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& f);

// Elements are 1..n. Sets may be empty; members are kept sorted and unique.
struct SetSystem {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> sets;

    void validate() const;
};

enum class Relation { Le, Eq, Ge };

// ---- problem instances ----------------------------------------------------

struct Sat { CnfFormula f; };
struct ThreeSat { CnfFormula f; };
struct Clique { Graph g; std::size_t k = 0; };
struct IndependentSet { Graph g; std::size_t k = 0; };
struct VertexCover { Graph g; std::size_t k = 0; };
struct GraphColoring { Graph g; std::size_t k = 0; };
struct ExactCover { SetSystem s; };
// Find W in 1..n meeting every listed set in exactly one element.
struct Representatives { SetSystem s; };
struct SetCover { SetSystem s; std::size_t k = 0; };
// 0-1 solution of sum a_i x_i = b.
struct Knapsack01 { std::vector<BigInt> a; BigInt b = 0; };
// Subset with volume <= capacity and value >= target.
struct KnapsackDecision {
    std::vector<std::int64_t> c;
    std::vector<std::int64_t> v;
    std::int64_t capacity = 0;
    std::int64_t target = 0;
};
struct Partition { std::vector<BigInt> a; };
struct HamCircuit { Digraph d; };
struct HamCycle { Graph g; };
// Square, non-negative, zero diagonal; decide a tour of length <= L.
struct Tsp { std::vector<std::vector<std::int64_t>> c; std::int64_t L = 0; };
// Feasibility of rows A x (rel) b over integers in the box lo <= x <= hi.
struct Ilp {
    std::vector<std::vector<std::int64_t>> A;
    std::vector<std::int64_t> b;
    std::vector<Relation> rel;
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
};

using ProblemInstance = std::variant<Sat, ThreeSat, Clique, IndependentSet, VertexCover, GraphColoring, ExactCover,
                                     Representatives, SetCover, Knapsack01, KnapsackDecision, Partition, HamCircuit,
                                     HamCycle, Tsp, Ilp>;

// Short tag, e.g. "sat", "3sat", "clique", "tsp".
std::string problem_name(const ProblemInstance& p);
// Throws InputError when the instance breaks its tag's invariants.
void validate(const ProblemInstance& p);

// ---- witnesses ------------------------------------------------------------

struct Assignment { std::vector<bool> values; };
struct VertexSet { std::vector<std::size_t> vertices; };
// color[v-1] in 1..k.
struct ColorMap { std::vector<std::size_t> color; };
// 1-based indices: sets for covers, elements for representatives, items otherwise.
struct Selection { std::vector<std::size_t> items; };
struct Tour { std::vector<std::size_t> order; };
struct IntPoint { std::vector<std::int64_t> x; };

using Witness = std::variant<Assignment, VertexSet, ColorMap, Selection, Tour, IntPoint>;

std::string witness_name(const Witness& w);

// Malformed witnesses throw InputError; a well-formed witness that fails
// the check returns false.
bool verify_witness(const ProblemInstance& p, const Witness& w);

// ---- brute-force oracles --------------------------------------------------

struct OracleLimits {
    std::size_t variables = 20;  // boolean variables, knapsack items, ILP variables
    std::size_t vertices = 12;
    std::size_t elements = 20;   // ground set and family size
    std::int64_t box = 3;        // |lo|, |hi| for ILP variables
};

// COMBINLAB_ORACLE_LIMIT: "key=value,..." with keys variables, vertices,
// elements, box; a bare integer sets vertices.
OracleLimits oracle_limits_from_env();
OracleLimits parse_oracle_limits(const std::string& text, OracleLimits base = {});

// Exhaustive search with pruning. Throws LimitError past the caps.
std::optional<Witness> brute_force_decide(const ProblemInstance& p, const OracleLimits& limits);
std::optional<Witness> brute_force_decide(const ProblemInstance& p);

// ---- reductions -----------------------------------------------------------

using WitnessMap = std::function<Witness(const Witness&)>;

struct ReductionOutput {
    ProblemInstance target;
    WitnessMap forward;   // source witness -> target witness
    WitnessMap backward;  // target witness -> source witness
    std::vector<std::string> legend;  // what target pieces stand for
};

enum class ReductionKind {
    SatTo3Sat,
    SatToClique,
    CliqueToIS,
    ISToVC,
    ThreeSatToColoring,
    ColoringToExactCover,
    ExactCoverToRepresentatives,
    ExactCoverToKnapsack01,
    Knapsack01ToPartition,
    VCToSetCover,
    VCToHamCircuit,
    HamCircuitToHamCycle,
    HamCycleToTsp,
    Knapsack01ToIlp,
    SetCoverToIlp,
    TspToIlp,
};

std::vector<ReductionKind> all_reductions();
std::string to_string(ReductionKind k);
// Accepts names like "sat-3sat", "vc-hamcircuit", "tsp-ilp".
ReductionKind parse_reduction_kind(const std::string& name);
// Problem tag the reduction expects.
std::string source_problem(ReductionKind k);

ReductionOutput sat_to_3sat(const CnfFormula& f);
ReductionOutput sat_to_clique(const CnfFormula& f);
ReductionOutput threesat_to_coloring(const CnfFormula& f);
ReductionOutput exact_cover_to_knapsack01(const SetSystem& s);
ReductionOutput vc_to_ham_circuit(const Graph& g, std::size_t k);
// Every kind, including the five above. Throws InputError on tag mismatch.
ReductionOutput apply_reduction(ReductionKind kind, const ProblemInstance& source);
ReductionOutput apply_simple_reduction(ReductionKind kind, const ProblemInstance& source);

// ---- 2-SAT ----------------------------------------------------------------

// Literal x_i is vertex 2i-1, its negation 2i.
std::size_t literal_vertex(const Literal& l);
Literal vertex_literal(std::size_t v);

// Arcs not-a -> b and not-b -> a per clause (a or b); a unit clause a is a or a.
// Tautologies contribute nothing; repeated arcs are merged.
Digraph implication_graph(const CnfFormula& f);

struct TwoSatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;   // when satisfiable
    std::size_t conflict_var = 0;   // when not: x and not-x share a component
    std::vector<std::size_t> component;  // per implication-graph vertex, topological index
};

TwoSatResult twosat_solve(const CnfFormula& f);

}  // namespace combinlab
