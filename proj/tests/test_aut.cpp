#include "distinguo/aut.hpp"
#include "distinguo/catalog.hpp"
#include "distinguo/families.hpp"
#include "distinguo/graph6.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace distinguo;

namespace {

std::vector<Vertex> random_relabeling(int n, std::mt19937 &rng)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

bool equitable(const Graph &g, const OrderedPartition &p)
{
    for (const auto &cell : p.cells)
        for (const auto &other : p.cells) {
            auto count = [&](Vertex v) {
                return std::count_if(other.begin(), other.end(), [&](Vertex w) { return g.adjacent(v, w); });
            };
            for (auto v : cell)
                if (count(v) != count(cell.front()))
                    return false;
        }
    return true;
}

}  // namespace

TEST_CASE("permutations and colourings validate input")
{
    CHECK_THROWS(Permutation({0, 0, 1}));
    CHECK_THROWS(Permutation({0, 3}));
    CHECK(Permutation::identity(3).is_identity());
    CHECK_THROWS(VertexColoring({1, 3}, 2));
    CHECK_THROWS(VertexColoring({0, 1}, 2));
}

TEST_CASE("group orders of named graphs")
{
    CHECK(group_order(make_family(FamilySpec::cycle(7))) == 14);
    CHECK(group_order(make_family(FamilySpec::complete(6))) == 720);
    CHECK(group_order(from_graph6("IheA@GUAo")) == 120);
    CHECK(group_order(make_family(FamilySpec::friendship(4))) == 384);
    CHECK(group_order(make_family(FamilySpec::complete(20))).str() == "2432902008176640000");
    CHECK(group_order(Graph(1)) == 1);
}

TEST_CASE("group order equals brute force for every graph up to order 7")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto &g : all_graphs(n))
            REQUIRE(group_order(g) == oracle::group_order(g));
}

TEST_CASE("generators are automorphisms and orbits partition the vertices")
{
    for (const auto &g : all_graphs(6)) {
        auto group = automorphism_group(g);
        for (const auto &p : group.generators) {
            CHECK(is_automorphism(g, p));
            CHECK_FALSE(p.is_identity());
        }
        std::vector<Vertex> all;
        for (const auto &o : group.orbits)
            all.insert(all.end(), o.begin(), o.end());
        std::sort(all.begin(), all.end());
        CHECK(all.size() == 6);
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}

TEST_CASE("refinement yields an equitable refinement of the input")
{
    for (const auto &g : all_graphs(6)) {
        auto p = refine(g, OrderedPartition::unit(6));
        CHECK(equitable(g, p));
    }
    auto star = make_family(FamilySpec::star(4));
    auto p = refine(star, OrderedPartition::unit(5));
    CHECK(p.cells.size() == 2);
}

TEST_CASE("nontrivial colour automorphisms")
{
    auto c4 = make_family(FamilySpec::cycle(4));
    CHECK(find_nontrivial_color_automorphism(c4, VertexColoring({1, 1, 2, 2}, 2)).has_value());
    CHECK(find_nontrivial_color_automorphism(c4, VertexColoring({1, 2, 1, 3}, 3)).has_value());
    CHECK_FALSE(find_nontrivial_color_automorphism(c4, VertexColoring({1, 2, 3, 3}, 3)).has_value());
    CHECK_FALSE(find_nontrivial_color_automorphism(c4, VertexColoring({1, 2, 3, 1}, 3)).has_value());
    auto p = find_nontrivial_color_automorphism(c4, VertexColoring::uniform(4));
    REQUIRE(p);
    CHECK(is_automorphism(c4, *p));
}

TEST_CASE("canonical keys agree exactly on isomorphic graphs")
{
    std::mt19937 rng(11);
    for (int n = 1; n <= 6; ++n) {
        auto graphs = all_graphs(n);
        for (const auto &g : graphs)
            for (int trial = 0; trial < 3; ++trial)
                CHECK(canonical_form(relabel(g, random_relabeling(n, rng))) == canonical_form(g));
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                CHECK(canonical_form(graphs[i]) != canonical_form(graphs[j]));
    }
}

TEST_CASE("canonical form of larger symmetric graphs is stable under relabeling")
{
    std::mt19937 rng(5);
    for (auto spec : {FamilySpec::complete(10), FamilySpec::book(5), FamilySpec::friendship(6),
                      FamilySpec::complete_bipartite(6, 6), FamilySpec::matching_union(8)}) {
        auto g = make_family(spec);
        auto key = canonical_form(g);
        for (int trial = 0; trial < 3; ++trial)
            CHECK(canonical_form(relabel(g, random_relabeling(g.order(), rng))) == key);
    }
}
