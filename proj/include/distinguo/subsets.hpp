#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace distinguo {

struct SubsetSearchOptions {
    /// Visit only the colex-least subset of each orbit under the supplied symmetry group.
    bool orbit_reduction = true;
    /// Evaluate candidates in OpenMP-parallel chunks; the reported subset is still the colex-least hit.
    bool parallel = false;
    int chunk = 64;
};

/// Steps through the k-subsets of {0..universe-1} in colexicographic order.
class ColexSubsets {
public:
    ColexSubsets(int universe, int k);

    bool done() const { return done_; }
    const std::vector<int> &current() const { return current_; }
    void advance();

private:
    int universe_;
    std::vector<int> current_;
    bool done_ = false;
};

std::uint64_t subset_mask(std::span<const int> members);

/// Colex-least representative of every orbit of k-subsets under the group generated by `generators`
/// (each a permutation of 0..universe-1). Requires universe <= 64.
std::vector<std::vector<int>> subset_orbit_representatives(int universe, int k,
                                                           std::span<const std::vector<int>> generators);

/// The colex-least k-subset satisfying `predicate`, where `predicate` is constant on orbits of `generators`.
/// `evaluated` is incremented once per predicate call. The predicate must be thread-safe when options.parallel.
std::optional<std::vector<int>> first_matching_subset(int universe, int k, std::span<const std::vector<int>> generators,
                                                      const std::function<bool(std::span<const int>)> &predicate,
                                                      const SubsetSearchOptions &options, std::uint64_t &evaluated);

}  // namespace distinguo
