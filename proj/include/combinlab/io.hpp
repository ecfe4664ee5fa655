#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "combinlab/approx.hpp"
#include "combinlab/complexity.hpp"
#include "combinlab/graph.hpp"

namespace combinlab {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);

// Graphs as {"n": 3, "edges": [[1, 2], [2, 3, "5/2"]]}; digraphs use "arcs".
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

// {"n": 3, "clauses": [[1, -2], [3]]}
Json cnf_to_json(const CnfFormula& f);
CnfFormula cnf_from_json(const Json& j);

// {"n": 4, "sets": [[1, 2], [3, 4]]}
Json set_system_to_json(const SetSystem& s);
SetSystem set_system_from_json(const Json& j);

// Big integers are written as numbers when they fit 64 bits, else as strings.
Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

// {"problem": "<tag>", ...tag fields}.
Json instance_to_json(const ProblemInstance& p);
ProblemInstance instance_from_json(const Json& j);

// {"assignment": [0, 1]}, {"vertices": [...]}, {"colors": [...]},
// {"selection": [...]}, {"tour": [...]}, {"point": [...]}.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

// Whitespace n x n grid of integers or p/q.
CostMatrix parse_cost_matrix(const std::string& text);
std::string to_text(const CostMatrix& c);

// Whitespace separated integers.
std::vector<std::int64_t> parse_integers(const std::string& text);
// Whitespace separated rationals.
std::vector<Rational> parse_rationals(const std::string& text);

Json rational_to_json(const Rational& r);

}  // namespace combinlab
