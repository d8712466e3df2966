#include "distinguo/catalog.hpp"

#include "distinguo/aut.hpp"
#include "distinguo/graph6.hpp"

#include <set>
#include <string>

namespace distinguo {

namespace {

std::set<std::string> classes_of_order(int n)
{
    if (n == 1)
        return {canonical_form(Graph(1)).bytes};
    std::set<std::string> result;
    for (const auto &key : classes_of_order(n - 1)) {
        auto base = from_graph6(key);
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
            Graph g(n);
            for (const auto &e : base.edges())
                g.add_edge(e.u, e.v);
            for (int v = 0; v < n - 1; ++v)
                if ((nbrs >> v) & 1u)
                    g.add_edge(v, n - 1);
            result.insert(canonical_form(g).bytes);
        }
    }
    return result;
}

}  // namespace

std::vector<Graph> all_graphs(int n, bool connected_only)
{
    if (n < 1 || n > 10)
        throw ParameterError("catalog generation supports orders 1..10");
    std::vector<Graph> result;
    for (const auto &key : classes_of_order(n)) {
        auto g = from_graph6(key);
        if (!connected_only || is_connected(g))
            result.push_back(std::move(g));
    }
    return result;
}

std::vector<Graph> all_graphs_between(int min_n, int max_n, bool connected_only)
{
    std::vector<Graph> result;
    for (int n = min_n; n <= max_n; ++n) {
        auto layer = all_graphs(n, connected_only);
        result.insert(result.end(), layer.begin(), layer.end());
    }
    return result;
}

}  // namespace distinguo
