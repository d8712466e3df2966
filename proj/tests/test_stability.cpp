#include "distinguo/aut.hpp"
#include "distinguo/catalog.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/families.hpp"
#include "distinguo/stability.hpp"
#include "distinguo/subsets.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace distinguo;

namespace {

std::vector<std::vector<int>> as_actions(const Graph &g)
{
    std::vector<std::vector<int>> actions;
    for (const auto &p : automorphism_generators(g))
        actions.emplace_back(p.image().begin(), p.image().end());
    return actions;
}

}  // namespace

TEST_CASE("colex order of 2-subsets of 4")
{
    std::vector<std::vector<int>> seen;
    for (ColexSubsets s(4, 2); !s.done(); s.advance())
        seen.push_back(s.current());
    CHECK(seen == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("colex enumeration counts binomials")
{
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            long count = 0;
            for (ColexSubsets s(n, k); !s.done(); s.advance())
                ++count;
            long binom = 1;
            for (int i = 0; i < k; ++i)
                binom = binom * (n - i) / (i + 1);
            CHECK(count == binom);
        }
    CHECK(ColexSubsets(3, 4).done());
}

TEST_CASE("orbit representatives cover every subset exactly once up to symmetry")
{
    for (const auto &g : all_graphs(6)) {
        auto actions = as_actions(g);
        for (int k = 1; k <= 3; ++k) {
            auto reps = subset_orbit_representatives(6, k, actions);
            std::set<std::uint64_t> rep_masks;
            for (const auto &r : reps)
                rep_masks.insert(subset_mask(r));
            auto auts = oracle::automorphisms(oracle::matrix_of(g));
            for (ColexSubsets s(6, k); !s.done(); s.advance()) {
                int hits = 0;
                std::set<std::uint64_t> images;
                for (const auto &p : auts) {
                    std::uint64_t image = 0;
                    for (auto v : s.current())
                        image |= std::uint64_t{1} << p[v];
                    images.insert(image);
                }
                for (auto m : images)
                    hits += rep_masks.count(m);
                CHECK(hits == 1);
                // colex order on equal-size subsets is numeric order of their masks
                CHECK(rep_masks.count(*images.begin()) == 1);
            }
        }
    }
}

TEST_CASE("st_D and b_D equal brute force for every graph up to order 5")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto &g : all_graphs(n)) {
            DCache cache;
            auto a = oracle::matrix_of(g);
            REQUIRE(compute_stD(g, cache).value == oracle::stability(a));
            if (g.size() <= 7)
                REQUIRE(compute_bD(g, cache, std::nullopt).value == oracle::bondage(a));
        }
}

TEST_CASE("orbit reduction and parallel evaluation do not change values or witnesses")
{
    SubsetSearchOptions full{false, false, 64};
    SubsetSearchOptions parallel{true, true, 3};
    for (int n = 2; n <= 6; ++n)
        for (const auto &g : all_graphs(n)) {
            DCache cache;
            auto st = compute_stD(g, cache);
            auto st_full = compute_stD(g, cache, full);
            auto st_par = compute_stD(g, cache, parallel);
            CHECK(st.value == st_full.value);
            CHECK(st.witness == st_full.witness);
            CHECK(st.witness == st_par.witness);
            CHECK(st.subgraphs_evaluated <= st_full.subgraphs_evaluated);
            auto b = compute_bD(g, cache, std::nullopt);
            auto b_full = compute_bD(g, cache, std::nullopt, full);
            auto b_par = compute_bD(g, cache, std::nullopt, parallel);
            CHECK(b.value == b_full.value);
            CHECK(b.witness == b_full.witness);
            CHECK(b.witness == b_par.witness);
        }
}

TEST_CASE("witnesses change D")
{
    for (const auto &g : all_graphs(6, true)) {
        DCache cache;
        auto d = compute_D(g).value;
        auto st = compute_stD(g, cache);
        CHECK(st.witness.size() == static_cast<std::size_t>(st.value));
        CHECK(compute_D(delete_vertices(g, st.witness)).value != d);
        auto b = compute_bD(g, cache, std::nullopt);
        if (b.value > 0) {
            CHECK(b.witness.size() == static_cast<std::size_t>(b.value));
            CHECK(compute_D(delete_edges(g, b.witness)).value != d);
        }
    }
}

TEST_CASE("b_D cap reports a lower bound")
{
    DCache cache;
    auto c7 = make_family(FamilySpec::cycle(7));
    auto capped = compute_bD(c7, cache, 2);
    CHECK(capped.status == BondageStatus::lower_bound_only);
    CHECK(capped.value == 3);
    CHECK(capped.witness.empty());
    auto exact = compute_bD(c7, cache, 3);
    CHECK(exact.status == BondageStatus::exact);
    CHECK(exact.value == 3);
    CHECK(compute_bD(Graph(3), cache).value == 0);
    CHECK(compute_bD(Graph(3), cache).status == BondageStatus::exact);
}

TEST_CASE("b_D of the complement of C_7")
{
    DCache cache;
    CHECK(compute_bD(complement(make_family(FamilySpec::cycle(7))), cache, std::nullopt).value == 2);
}

TEST_CASE("st_D needs two vertices")
{
    DCache cache;
    CHECK_THROWS_AS(compute_stD(Graph(1), cache), ParameterError);
}

TEST_CASE("closed forms for st_D and b_D")
{
    CHECK(formula_stD(FamilySpec::path(4)) == 3);
    CHECK(formula_stD(FamilySpec::path(9)) == 2);
    CHECK(formula_stD(FamilySpec::cycle(7)) == 3);
    CHECK(formula_stD(FamilySpec::complete_bipartite(4, 3)) == 2);
    CHECK(formula_stD(FamilySpec::complete_bipartite(5, 3)) == 1);
    CHECK(formula_stD(FamilySpec::book(5)) == 1);
    CHECK(formula_stD(FamilySpec::book(3)) == 2);
    CHECK(friendship_stability(2) == 1);
    CHECK(friendship_stability(3) == 2);
    CHECK(friendship_stability(4) == 1);
    CHECK(friendship_stability(5) == 2);
    CHECK(friendship_stability(8) == 2);
    CHECK(formula_bD(FamilySpec::path(2)) == 0);
    CHECK(formula_bD(FamilySpec::path(4)) == 1);
    CHECK(formula_bD(FamilySpec::cycle(8)) == 3);
    CHECK(formula_bD(FamilySpec::complete(3)) == 1);
    CHECK_THROWS_AS(formula_bD(FamilySpec::complete_bipartite(1, 4)), ParameterError);
    CHECK_THROWS_AS(formula_bD(FamilySpec::book(3)), ParameterError);
}
