#pragma once

#include "distinguo/cache.hpp"
#include "distinguo/families.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/subsets.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace distinguo {

/// Minimum number of vertices whose deletion changes D, with the colex-first witness of that size.
struct StabilityResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t subgraphs_evaluated = 0;
};

enum class BondageStatus { exact, lower_bound_only };

std::string_view to_string(BondageStatus s);

/// Minimum number of edges whose deletion changes D. Zero (exact) when no edge subset changes it.
/// With a cap below m that is reached without a change, value is cap + 1 and status lower_bound_only.
struct BondageResult {
    int value = 0;
    std::vector<Edge> witness;
    BondageStatus status = BondageStatus::exact;
    std::uint64_t subgraphs_evaluated = 0;
};

inline constexpr int kDefaultBondageCap = 6;

/// Requires order >= 2.
StabilityResult compute_stD(const Graph &g, DCache &cache, const SubsetSearchOptions &options = {});

/// `k_cap` of nullopt searches every edge subset.
BondageResult compute_bD(const Graph &g, DCache &cache, std::optional<int> k_cap = kDefaultBondageCap,
                         const SubsetSearchOptions &options = {});

int formula_stD(const FamilySpec &spec);
int formula_bD(const FamilySpec &spec);

/// min{k >= 1 : 8(n-k)+1 is a perfect square}.
int friendship_stability(int n);

}  // namespace distinguo
