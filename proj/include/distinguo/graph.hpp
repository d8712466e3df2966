#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace distinguo {

using Vertex = int;

/// Raised for out-of-range vertex ids, absent edges and invalid family parameters.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would leave a graph with no vertices.
class EmptyResultError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    auto operator<=>(const Edge &) const = default;
    bool operator==(const Edge &) const = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    std::span<const Vertex> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet &) const = default;

private:
    std::vector<Vertex> members_;
};

/// Finite simple undirected graph on vertices 0..n-1, stored as adjacency bitsets.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::uint64_t neighbour_mask(Vertex v) const;
    int degree(Vertex v) const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Edges sorted by (u, v).
    std::vector<Edge> edges() const;

    void check_vertex(Vertex v) const;

    bool operator==(const Graph &) const = default;

private:
    std::vector<std::uint64_t> adj_;
    int edge_count_ = 0;
};

struct Contraction {
    Graph graph;
    /// Edges created between previously non-adjacent neighbours, in the input graph's ids.
    std::vector<Edge> added;
    /// Neighbours incident to at least one added edge, in the input graph's ids.
    VertexSet incident_neighbours;
};

struct Metrics {
    int max_degree = 0;
    std::optional<int> diameter;  // empty for disconnected graphs
    int clique_number = 0;
    bool connected = false;
};

/// Removes `s` and compacts the remaining ids preserving their relative order.
Graph delete_vertices(const Graph &g, const VertexSet &s);
Graph delete_vertex(const Graph &g, Vertex v);
Graph delete_edges(const Graph &g, std::span<const Edge> es);
Graph add_edges(const Graph &g, std::span<const Edge> es);
Graph complement(const Graph &g);
Contraction contract(const Graph &g, Vertex v);
Graph disjoint_union(std::span<const Graph> gs);
Graph relabel(const Graph &g, std::span<const Vertex> new_id);

VertexSet neighbourhood(const Graph &g, Vertex v, bool closed);

bool is_connected(const Graph &g);
std::optional<int> diameter(const Graph &g);
int clique_number(const Graph &g);
Metrics metrics(const Graph &g);

/// True iff some vertex has `size` pairwise non-adjacent neighbours.
bool has_induced_star(const Graph &g, int size);

bool is_complete(const Graph &g);

}  // namespace distinguo
