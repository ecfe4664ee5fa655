#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinlab/common.hpp"

namespace combinlab {

// Vertices are 1..n. Edge ids follow input order.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    Rational w = 1;
};

struct Adjacent {
    std::size_t vertex;
    std::size_t edge;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
    Graph(std::size_t n, std::vector<Edge> edges, bool weighted);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    bool weighted() const { return weighted_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t id) const { return edges_.at(id); }
    // Sorted by neighbour.
    const std::vector<Adjacent>& adj(std::size_t v) const { return adj_.at(v); }
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    bool has_edge(std::size_t u, std::size_t v) const { return edge_id(u, v).has_value(); }
    std::optional<std::size_t> edge_id(std::size_t u, std::size_t v) const;

    // n x n, 0-based rows.
    std::vector<std::vector<int>> adjacency_matrix() const;
    // n x m, 0-based rows.
    std::vector<std::vector<int>> incidence_matrix() const;
    Graph complement() const;

private:
    std::size_t n_ = 0;
    bool weighted_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<Adjacent>> adj_;  // index 0 unused
};

class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);
    Digraph(std::size_t n, std::vector<Edge> arcs, bool weighted);

    std::size_t n() const { return n_; }
    std::size_t m() const { return arcs_.size(); }
    bool weighted() const { return weighted_; }
    const std::vector<Edge>& arcs() const { return arcs_; }
    const Edge& arc(std::size_t id) const { return arcs_.at(id); }
    const std::vector<Adjacent>& out(std::size_t v) const { return out_.at(v); }
    const std::vector<Adjacent>& in(std::size_t v) const { return in_.at(v); }
    std::vector<std::size_t> successors(std::size_t v) const;
    bool has_arc(std::size_t u, std::size_t v) const { return arc_id(u, v).has_value(); }
    std::optional<std::size_t> arc_id(std::size_t u, std::size_t v) const;
    Digraph transpose() const;
    std::vector<std::vector<int>> adjacency_matrix() const;

private:
    std::size_t n_ = 0;
    bool weighted_ = false;
    std::vector<Edge> arcs_;
    std::vector<std::vector<Adjacent>> out_;
    std::vector<std::vector<Adjacent>> in_;
};

// Text format: "p n m" then "e u v [w]"; digraphs "pd n m" then "a u v [w]".
Graph parse_graph(const std::string& text);
Digraph parse_digraph(const std::string& text);
std::string to_text(const Graph& g);
std::string to_text(const Digraph& g);

struct BfsForest {
    std::vector<std::size_t> order;   // visitation order
    std::vector<std::size_t> parent;  // 0 for roots; index 0 unused
    std::vector<std::size_t> roots;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
};
BfsForest bfs_forest(const Graph& g);

// Blocks sorted ascending, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

struct EulerResult {
    enum class Status { Ok, OddDegree, Disconnected };
    Status status = Status::Ok;
    std::size_t vertex = 0;           // the odd vertex for OddDegree
    std::vector<std::size_t> walk;    // closed walk, empty when there are no edges
    bool ok() const { return status == Status::Ok; }
};

// Cycle splicing: build a closed trail, then repeatedly splice in a closed
// trail from the first walk vertex that still has unused edges.
EulerResult euler_cycle(const Graph& g);
// Fleury's rule; the verdict is read off the walk it produces.
EulerResult euler_fleury(const Graph& g);
std::string to_string(const EulerResult& r);

struct DfsRecord {
    std::vector<int> color;              // 2 for every vertex after the run
    std::vector<std::uint64_t> d;        // index 0 unused
    std::vector<std::uint64_t> f;
    std::vector<std::size_t> parent;     // 0 for roots
    std::vector<std::size_t> roots;      // in the order trees were started
    std::vector<std::vector<std::size_t>> trees;  // members of each tree
    std::uint64_t clock = 0;
};

// adjacency[v] lists successors of v (1-based; index 0 unused).
DfsRecord dfs(const std::vector<std::vector<std::size_t>>& adjacency, const std::vector<std::size_t>& order);
DfsRecord dfs(const Graph& g);
DfsRecord dfs(const Digraph& g);
DfsRecord dfs(const Digraph& g, const std::vector<std::size_t>& order);

// Components of the second pass, in the order they are found: the first one
// holds the vertex that finished last, a source of the condensation.
std::vector<std::vector<std::size_t>> scc_kosaraju(const Digraph& g);
// first_order: vertex order for the first DFS pass.
std::vector<std::vector<std::size_t>> scc_kosaraju(const Digraph& g, const std::vector<std::size_t>& first_order);

}  // namespace combinlab
