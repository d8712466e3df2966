#include "distinguo/catalog.hpp"
#include "distinguo/families.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/graph6.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace distinguo;

TEST_CASE("edges are normalised and self-loops rejected")
{
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK_THROWS_AS(Edge(2, 2), ParameterError);
}

TEST_CASE("vertex sets are sorted and deduplicated")
{
    VertexSet s{4, 1, 4, 2};
    CHECK(std::vector<Vertex>(s.begin(), s.end()) == std::vector<Vertex>{1, 2, 4});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
}

TEST_CASE("graph construction and mutation")
{
    Graph g(4, {{0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(1) == 2);
    g.add_edge(2, 3);
    g.add_edge(2, 3);
    CHECK(g.size() == 3);
    g.remove_edge(0, 1);
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS_AS(g.remove_edge(0, 1), ParameterError);
    CHECK_THROWS_AS(g.add_edge(0, 4), ParameterError);
    CHECK_THROWS_AS(Graph(65), ParameterError);
}

TEST_CASE("vertex deletion compacts ids in order")
{
    auto p5 = make_family(FamilySpec::path(5));
    auto g = delete_vertices(p5, VertexSet{2});
    CHECK(g == Graph(4, {{0, 1}, {2, 3}}));
    CHECK(delete_vertex(p5, 0) == make_family(FamilySpec::path(4)));
    CHECK_THROWS_AS(delete_vertices(Graph(2, {{0, 1}}), VertexSet{0, 1}), EmptyResultError);
}

TEST_CASE("edge deletion and addition")
{
    auto c4 = make_family(FamilySpec::cycle(4));
    std::vector<Edge> es{{0, 3}};
    CHECK(delete_edges(c4, es) == make_family(FamilySpec::path(4)));
    CHECK(add_edges(make_family(FamilySpec::path(4)), es) == c4);
    std::vector<Edge> missing{{0, 2}};
    CHECK_THROWS_AS(delete_edges(c4, missing), ParameterError);
}

TEST_CASE("contraction of a path interior vertex")
{
    auto c = contract(make_family(FamilySpec::path(4)), 1);
    CHECK(c.graph == make_family(FamilySpec::path(3)));
    CHECK(c.added == std::vector<Edge>{{0, 2}});
    CHECK(c.incident_neighbours == VertexSet{0, 2});
}

TEST_CASE("contraction inside a clique adds nothing")
{
    auto c = contract(make_family(FamilySpec::complete(4)), 2);
    CHECK(c.graph == make_family(FamilySpec::complete(3)));
    CHECK(c.added.empty());
    CHECK(c.incident_neighbours.empty());
}

TEST_CASE("complement is an involution and swaps size")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto &g : all_graphs(n)) {
            auto co = complement(g);
            CHECK(co.size() == n * (n - 1) / 2 - g.size());
            CHECK(complement(co) == g);
        }
}

TEST_CASE("metrics of small families")
{
    auto m = metrics(make_family(FamilySpec::cycle(7)));
    CHECK(m.max_degree == 2);
    CHECK(m.diameter == 3);
    CHECK(m.clique_number == 2);
    CHECK(m.connected);
    auto k = metrics(make_family(FamilySpec::complete(5)));
    CHECK(k.diameter == 1);
    CHECK(k.clique_number == 5);
    CHECK_FALSE(diameter(make_family(FamilySpec::matching_union(2))).has_value());
    CHECK(clique_number(make_family(FamilySpec::friendship(3))) == 3);
    CHECK(clique_number(Graph(3)) == 1);
}

TEST_CASE("induced stars")
{
    CHECK(has_induced_star(make_family(FamilySpec::star(4)), 4));
    CHECK_FALSE(has_induced_star(make_family(FamilySpec::complete(5)), 2));
    CHECK(has_induced_star(make_family(FamilySpec::friendship(3)), 3));
    CHECK_FALSE(has_induced_star(make_family(FamilySpec::friendship(3)), 4));
}

TEST_CASE("family constructions")
{
    CHECK(make_family(FamilySpec::book(2)).order() == 6);
    CHECK(make_family(FamilySpec::book(2)).size() == 7);
    CHECK(make_family(FamilySpec::friendship(4)).size() == 12);
    CHECK(make_family(FamilySpec::complete_bipartite(3, 2)).size() == 6);
    CHECK(make_family(FamilySpec::star(3)) == make_family(FamilySpec::complete_bipartite(1, 3)));
    CHECK(make_family(FamilySpec::matching_union(3)).size() == 3);
    CHECK(make_family(FamilySpec::empty(3)).size() == 0);
    CHECK_THROWS_AS(make_family(FamilySpec::cycle(2)), ParameterError);
    CHECK_THROWS_AS(make_family(FamilySpec::book(1)), ParameterError);
    CHECK_THROWS_AS(parse_family("wheel"), ParameterError);
    CHECK(parse_family("complete_bipartite") == Family::complete_bipartite);
    CHECK(FamilySpec::friendship(4).to_string() == "friendship(4)");
}

TEST_CASE("graph6 known strings")
{
    CHECK(to_graph6(make_family(FamilySpec::complete(4))) == "C~");
    CHECK(to_graph6(make_family(FamilySpec::cycle(5))) == "Dhc");
    CHECK(to_graph6(Graph(5)) == "D??");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(from_graph6(">>graph6<<C~\n") == make_family(FamilySpec::complete(4)));
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 62);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    g.add_edge(u, v);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("D?"), ParseError);
    CHECK_THROWS_AS(from_graph6("D???"), ParseError);
    CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);
}

TEST_CASE("edge list round trip and errors")
{
    auto g = make_family(FamilySpec::book(3));
    std::istringstream in(to_edge_list(g));
    CHECK(from_edge_list(in) == g);
    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(from_edge_list(bad), ParseError);
    std::istringstream loop("3 1\n1 1\n");
    CHECK_THROWS(from_edge_list(loop));
}

TEST_CASE("catalog reader reports the failing line")
{
    std::istringstream in("C~\n\nDhc\nD?\n");
    try {
        read_graph6_catalog(in);
        FAIL("expected a parse error");
    }
    catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("catalog counts")
{
    const int all[] = {1, 2, 4, 11, 34, 156, 1044};
    const int connected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(all_graphs(n).size() == all[n - 1]);
        CHECK(all_graphs(n, true).size() == connected[n - 1]);
    }
}

TEST_CASE("catalog matches exhaustive certificate classes")
{
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> ours, theirs;
        for (const auto &g : all_graphs(n))
            ours.push_back(oracle::certificate(oracle::matrix_of(g)));
        for (const auto &a : oracle::classes(n))
            theirs.push_back(oracle::certificate(a));
        std::sort(ours.begin(), ours.end());
        std::sort(theirs.begin(), theirs.end());
        CHECK(ours == theirs);
    }
}
