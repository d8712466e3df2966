#include "distinguo/stability.hpp"

#include "distinguo/aut.hpp"
#include "distinguo/dist.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace distinguo {

namespace {

std::vector<std::vector<int>> vertex_actions(const std::vector<Permutation> &gens)
{
    std::vector<std::vector<int>> actions;
    for (const auto &p : gens)
        actions.emplace_back(p.image().begin(), p.image().end());
    return actions;
}

std::vector<std::vector<int>> edge_actions(const std::vector<Permutation> &gens, const std::vector<Edge> &edges)
{
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < edges.size(); ++i)
        index.emplace(edges[i], static_cast<int>(i));
    std::vector<std::vector<int>> actions;
    for (const auto &p : gens) {
        auto &action = actions.emplace_back(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            action[i] = index.at(Edge(p(edges[i].u), p(edges[i].v)));
    }
    return actions;
}

}  // namespace

std::string_view to_string(BondageStatus s)
{
    return s == BondageStatus::exact ? "exact" : "lower_bound_only";
}

StabilityResult compute_stD(const Graph &g, DCache &cache, const SubsetSearchOptions &options)
{
    auto n = g.order();
    if (n < 2)
        throw ParameterError("distinguishing stability needs at least two vertices");
    auto base = compute_D_cached(g, cache);
    auto actions = options.orbit_reduction ? vertex_actions(automorphism_generators(g)) : std::vector<std::vector<int>>{};

    StabilityResult result;
    auto changes = [&](std::span<const int> s) {
        return compute_D_cached(delete_vertices(g, VertexSet(std::vector<Vertex>(s.begin(), s.end()))), cache) != base;
    };
    for (int k = 1; k < n; ++k) {
        auto hit = first_matching_subset(n, k, actions, changes, options, result.subgraphs_evaluated);
        if (hit) {
            result.value = k;
            result.witness = VertexSet(std::move(*hit));
            return result;
        }
    }
    throw std::logic_error("no vertex deletion changed D; graph of order " + std::to_string(n));
}

BondageResult compute_bD(const Graph &g, DCache &cache, std::optional<int> k_cap, const SubsetSearchOptions &options)
{
    auto edges = g.edges();
    auto m = static_cast<int>(edges.size());
    auto limit = k_cap ? std::min(*k_cap, m) : m;
    BondageResult result;
    if (limit < 1) {
        result.status = (limit == m) ? BondageStatus::exact : BondageStatus::lower_bound_only;
        result.value = (limit == m) ? 0 : 1;
        return result;
    }
    auto base = compute_D_cached(g, cache);
    auto actions = options.orbit_reduction ? edge_actions(automorphism_generators(g), edges)
                                           : std::vector<std::vector<int>>{};
    auto changes = [&](std::span<const int> s) {
        std::vector<Edge> removed;
        for (auto i : s)
            removed.push_back(edges[i]);
        return compute_D_cached(delete_edges(g, removed), cache) != base;
    };
    for (int k = 1; k <= limit; ++k) {
        auto hit = first_matching_subset(m, k, actions, changes, options, result.subgraphs_evaluated);
        if (hit) {
            result.value = k;
            for (auto i : *hit)
                result.witness.push_back(edges[i]);
            return result;
        }
    }
    if (limit == m) {
        result.value = 0;
        result.status = BondageStatus::exact;
    }
    else {
        result.value = limit + 1;
        result.status = BondageStatus::lower_bound_only;
    }
    return result;
}

int friendship_stability(int n)
{
    if (n < 2)
        throw ParameterError("friendship stability needs n >= 2");
    for (int k = 1; k <= n; ++k)
        if (is_square(8LL * (n - k) + 1))
            return k;
    throw std::logic_error("unreachable: 8*0+1 is square");
}

int formula_stD(const FamilySpec &spec)
{
    spec.validate();
    auto n = spec.n();
    auto out_of_range = [&] { return ParameterError("no closed-form st_D for " + spec.to_string()); };
    switch (spec.family) {
    case Family::path:
        switch (n) {
        case 1:
            throw out_of_range();
        case 2:
            return 1;
        case 3:
            return 2;
        case 4:
            return 3;
        case 5:
            return 1;
        default:
            return 2;
        }
    case Family::cycle:
        return n <= 5 ? 1 : (n == 6 ? 2 : 3);
    case Family::complete:
        if (n < 2)
            throw out_of_range();
        return 1;
    case Family::complete_bipartite:
        return std::abs(n - spec.q()) == 1 ? 2 : 1;
    case Family::book:
        return is_square(n - 1) ? 1 : 2;
    case Family::friendship:
        return friendship_stability(n);
    default:
        throw out_of_range();
    }
}

int formula_bD(const FamilySpec &spec)
{
    spec.validate();
    auto n = spec.n();
    auto out_of_range = [&] { return ParameterError("no closed-form b_D for " + spec.to_string()); };
    switch (spec.family) {
    case Family::path:
        switch (n) {
        case 1:
            throw out_of_range();
        case 2:
            return 0;
        case 3:
            return 2;
        case 4:
            return 1;
        default:
            return 2;
        }
    case Family::cycle:
        return n <= 5 ? 1 : 3;
    case Family::complete:
        if (n < 3)
            throw out_of_range();
        return 1;
    case Family::complete_bipartite:
        if (std::min(n, spec.q()) < 2)
            throw out_of_range();
        return 1;
    default:
        throw out_of_range();
    }
}

}  // namespace distinguo
