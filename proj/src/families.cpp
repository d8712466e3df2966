#include "distinguo/families.hpp"

#include <array>
#include <utility>

namespace distinguo {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::book, "book"},
    {Family::friendship, "friendship"},
    {Family::matching_union, "matching_union"},
    {Family::empty, "empty"},
}};

int minimum_parameter(Family f)
{
    switch (f) {
    case Family::cycle:
        return 3;
    case Family::book:
        return 2;
    default:
        return 1;
    }
}

}  // namespace

std::string_view family_name(Family f)
{
    for (const auto &[family, name] : kNames)
        if (family == f)
            return name;
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (const auto &[family, known] : kNames)
        if (known == name)
            return family;
    throw ParameterError("unknown family '" + std::string(name) + "'");
}

void FamilySpec::validate() const
{
    std::size_t arity = family == Family::complete_bipartite ? 2 : 1;
    if (params.size() != arity)
        throw ParameterError(std::string(family_name(family)) + " takes " + std::to_string(arity) + " parameter(s)");
    for (auto p : params)
        if (p < minimum_parameter(family))
            throw ParameterError(to_string() + ": parameter below " + std::to_string(minimum_parameter(family)));
}

std::string FamilySpec::to_string() const
{
    std::string out(family_name(family));
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(params[i]);
    }
    out += ')';
    return out;
}

Graph make_family(const FamilySpec &spec)
{
    spec.validate();
    auto n = spec.n();
    switch (spec.family) {
    case Family::path: {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }
    case Family::cycle: {
        Graph g = make_family(FamilySpec::path(n));
        g.add_edge(n - 1, 0);
        return g;
    }
    case Family::complete: {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }
    case Family::complete_bipartite: {
        auto q = spec.q();
        Graph g(n + q);
        for (int u = 0; u < n; ++u)
            for (int v = n; v < n + q; ++v)
                g.add_edge(u, v);
        return g;
    }
    case Family::star:
        return make_family(FamilySpec::complete_bipartite(1, n));
    case Family::book: {
        Graph g(2 * n + 2);
        g.add_edge(0, 1);
        for (int t = 1; t <= n; ++t) {
            g.add_edge(0, 2 * t);
            g.add_edge(1, 2 * t + 1);
            g.add_edge(2 * t, 2 * t + 1);
        }
        return g;
    }
    case Family::friendship: {
        Graph g(2 * n + 1);
        for (int t = 1; t <= n; ++t) {
            g.add_edge(0, 2 * t - 1);
            g.add_edge(0, 2 * t);
            g.add_edge(2 * t - 1, 2 * t);
        }
        return g;
    }
    case Family::matching_union: {
        Graph g(2 * n);
        for (int i = 0; i < n; ++i)
            g.add_edge(2 * i, 2 * i + 1);
        return g;
    }
    case Family::empty:
        return Graph(n);
    }
    throw ParameterError("unhandled family");
}

}  // namespace distinguo
