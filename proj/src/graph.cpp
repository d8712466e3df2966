#include "distinguo/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace distinguo {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

std::uint64_t all_bits(int n) { return n == 64 ? ~std::uint64_t{0} : (bit(n) - 1); }

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

std::vector<int> bfs_distances(const Graph &g, Vertex source)
{
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        auto v = frontier.front();
        frontier.pop();
        for (auto m = g.neighbour_mask(v); m != 0; m &= m - 1) {
            auto w = lowest(m);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

void max_clique(const Graph &g, std::uint64_t candidates, int depth, int &best)
{
    if (candidates == 0) {
        best = std::max(best, depth);
        return;
    }
    while (candidates != 0) {
        if (depth + std::popcount(candidates) <= best)
            return;
        auto v = lowest(candidates);
        candidates &= candidates - 1;
        max_clique(g, candidates & g.neighbour_mask(v), depth + 1, best);
    }
}

bool independent_subset(const Graph &g, std::uint64_t candidates, int needed)
{
    if (needed == 0)
        return true;
    while (std::popcount(candidates) >= needed) {
        auto v = lowest(candidates);
        candidates &= candidates - 1;
        if (independent_subset(g, candidates & ~g.neighbour_mask(v), needed - 1))
            return true;
    }
    return false;
}

}  // namespace

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b))
{
    if (a == b)
        throw ParameterError("self-loop " + std::to_string(a));
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Graph::Graph(int n)
{
    if (n < 1 || n > kMaxOrder)
        throw ParameterError("graph order must be in 1.." + std::to_string(kMaxOrder) + ", got " + std::to_string(n));
    adj_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto &e : edges)
        add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order())
        throw ParameterError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

std::uint64_t Graph::neighbour_mask(Vertex v) const { return adj_[v]; }

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return std::popcount(adj_[v]);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw ParameterError("self-loop " + std::to_string(u));
    if (!((adj_[u] >> v) & 1u))
        ++edge_count_;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    if (!adjacent(u, v))
        throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present");
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    --edge_count_;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (auto m = adj_[u] & ~all_bits(u + 1); m != 0; m &= m - 1)
            result.emplace_back(u, lowest(m));
    return result;
}

Graph delete_vertices(const Graph &g, const VertexSet &s)
{
    for (auto v : s)
        g.check_vertex(v);
    int remaining = g.order() - static_cast<int>(s.size());
    if (remaining < 1)
        throw EmptyResultError("deleting every vertex leaves an empty graph");
    std::vector<Vertex> new_id(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v))
            new_id[v] = next++;
    Graph result(remaining);
    for (const auto &e : g.edges())
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            result.add_edge(new_id[e.u], new_id[e.v]);
    return result;
}

Graph delete_vertex(const Graph &g, Vertex v) { return delete_vertices(g, VertexSet{v}); }

Graph delete_edges(const Graph &g, std::span<const Edge> es)
{
    Graph result = g;
    for (const auto &e : es)
        result.remove_edge(e.u, e.v);
    return result;
}

Graph add_edges(const Graph &g, std::span<const Edge> es)
{
    Graph result = g;
    for (const auto &e : es) {
        if (g.adjacent(e.u, e.v))
            throw ParameterError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} already present");
        result.add_edge(e.u, e.v);
    }
    return result;
}

Graph complement(const Graph &g)
{
    Graph result(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                result.add_edge(u, v);
    return result;
}

Contraction contract(const Graph &g, Vertex v)
{
    g.check_vertex(v);
    if (g.order() < 2)
        throw ParameterError("contraction needs at least two vertices");
    Graph closed = g;
    std::vector<Edge> added;
    std::vector<Vertex> touched;
    auto nbrs = neighbourhood(g, v, false);
    for (auto a : nbrs)
        for (auto b : nbrs)
            if (a < b && !g.adjacent(a, b)) {
                closed.add_edge(a, b);
                added.emplace_back(a, b);
                touched.push_back(a);
                touched.push_back(b);
            }
    return {delete_vertex(closed, v), std::move(added), VertexSet(std::move(touched))};
}

Graph disjoint_union(std::span<const Graph> gs)
{
    if (gs.empty())
        throw ParameterError("disjoint union of an empty list");
    int total = 0;
    for (const auto &g : gs)
        total += g.order();
    Graph result(total);
    int offset = 0;
    for (const auto &g : gs) {
        for (const auto &e : g.edges())
            result.add_edge(e.u + offset, e.v + offset);
        offset += g.order();
    }
    return result;
}

Graph relabel(const Graph &g, std::span<const Vertex> new_id)
{
    if (static_cast<int>(new_id.size()) != g.order())
        throw ParameterError("relabeling has wrong length");
    Graph result(g.order());
    for (const auto &e : g.edges())
        result.add_edge(new_id[e.u], new_id[e.v]);
    return result;
}

VertexSet neighbourhood(const Graph &g, Vertex v, bool closed)
{
    g.check_vertex(v);
    std::vector<Vertex> members;
    auto mask = g.neighbour_mask(v) | (closed ? bit(v) : 0);
    for (; mask != 0; mask &= mask - 1)
        members.push_back(lowest(mask));
    return VertexSet(std::move(members));
}

bool is_connected(const Graph &g)
{
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> diameter(const Graph &g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (auto d : dist) {
            if (d < 0)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

int clique_number(const Graph &g)
{
    int best = 0;
    max_clique(g, all_bits(g.order()), 0, best);
    return best;
}

Metrics metrics(const Graph &g)
{
    Metrics result;
    for (int v = 0; v < g.order(); ++v)
        result.max_degree = std::max(result.max_degree, g.degree(v));
    result.diameter = diameter(g);
    result.connected = result.diameter.has_value();
    result.clique_number = clique_number(g);
    return result;
}

bool has_induced_star(const Graph &g, int size)
{
    if (size < 1)
        throw ParameterError("star size must be positive");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= size && independent_subset(g, g.neighbour_mask(v), size))
            return true;
    return false;
}

bool is_complete(const Graph &g)
{
    auto n = g.order();
    return g.size() == n * (n - 1) / 2;
}

}  // namespace distinguo
