#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "combinlab/graph.hpp"

namespace combinlab {

// nullopt stands for +infinity.
using Distance = std::optional<Rational>;

bool dist_less(const Distance& a, const Distance& b);
Distance dist_add(const Distance& a, const Rational& w);
Distance dist_add(const Distance& a, const Distance& b);
std::string to_string(const Distance& d);

struct ShortestPaths {
    std::size_t source = 0;
    std::vector<Distance> dist;       // index 0 unused
    std::vector<std::size_t> pred;    // 0 when none
    std::vector<std::size_t> settled; // order of permanent labels
};

// O(n^2) labelling; ties go to the smallest vertex.
ShortestPaths dijkstra(const Digraph& g, std::size_t source);
// Empty when target is unreachable.
std::vector<std::size_t> path_to(const ShortestPaths& sp, std::size_t target);

struct FloydTables {
    std::size_t n = 0;
    std::vector<std::vector<Distance>> dist;   // [i-1][j-1]
    std::vector<std::vector<std::size_t>> next;  // successor z_ij, 0 when none
    std::vector<std::size_t> negative;         // vertices on a closed walk of negative weight
    const Distance& d(std::size_t i, std::size_t j) const { return dist[i - 1][j - 1]; }
    std::size_t z(std::size_t i, std::size_t j) const { return next[i - 1][j - 1]; }
};

FloydTables floyd_warshall(const Digraph& g);
std::vector<std::size_t> reconstruct_path(const FloydTables& t, std::size_t i, std::size_t j);

// closure[i-1][j-1] is true iff i == j or j is reachable from i.
std::vector<std::vector<bool>> transitive_closure(const Digraph& g);

// Each edge becomes two opposite arcs of the same weight.
Digraph to_directed(const Graph& g);

struct UndirectedPath {
    Distance length;
    std::vector<std::size_t> path;
};
UndirectedPath undirected_shortest_path(const Graph& g, std::size_t u, std::size_t v);

struct PrimLabel {
    std::size_t vertex = 0;
    std::size_t nearest = 0;  // u*
    Rational beta = 0;        // beta(u)
};

struct MstResult {
    std::vector<std::size_t> edges;  // edge ids
    Rational weight = 0;
    std::vector<PrimLabel> trace;    // Prim only: labels of vertices as they join U
};

MstResult prim(const Graph& g);
MstResult kruskal(const Graph& g);
MstResult max_spanning_tree(const Graph& g);

}  // namespace combinlab
