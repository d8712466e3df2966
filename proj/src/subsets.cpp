#include "distinguo/subsets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace distinguo {

namespace {

std::uint64_t image_of(std::uint64_t mask, const std::vector<int> &perm)
{
    std::uint64_t image = 0;
    for (; mask != 0; mask &= mask - 1)
        image |= std::uint64_t{1} << perm[std::countr_zero(mask)];
    return image;
}

/// Colex enumeration that yields one subset per orbit when generators are supplied.
class CandidateStream {
public:
    CandidateStream(int universe, int k, std::span<const std::vector<int>> generators, bool reduce)
        : subsets_(universe, k), generators_(generators), reduce_(reduce && !generators.empty() && universe <= 64)
    {
    }

    std::optional<std::vector<int>> next()
    {
        while (!subsets_.done()) {
            auto candidate = subsets_.current();
            subsets_.advance();
            if (!reduce_)
                return candidate;
            auto mask = subset_mask(candidate);
            if (!seen_.insert(mask).second)
                continue;
            std::vector<std::uint64_t> frontier{mask};
            while (!frontier.empty()) {
                auto current = frontier.back();
                frontier.pop_back();
                for (const auto &g : generators_) {
                    auto image = image_of(current, g);
                    if (seen_.insert(image).second)
                        frontier.push_back(image);
                }
            }
            return candidate;
        }
        return std::nullopt;
    }

private:
    ColexSubsets subsets_;
    std::span<const std::vector<int>> generators_;
    bool reduce_;
    std::unordered_set<std::uint64_t> seen_;
};

}  // namespace

ColexSubsets::ColexSubsets(int universe, int k) : universe_(universe)
{
    if (k < 0 || k > universe) {
        done_ = true;
        return;
    }
    current_.resize(k);
    for (int i = 0; i < k; ++i)
        current_[i] = i;
}

void ColexSubsets::advance()
{
    auto k = static_cast<int>(current_.size());
    for (int i = 0; i < k; ++i) {
        int limit = i + 1 < k ? current_[i + 1] : universe_;
        if (current_[i] + 1 < limit) {
            ++current_[i];
            for (int j = 0; j < i; ++j)
                current_[j] = j;
            return;
        }
    }
    done_ = true;
}

std::uint64_t subset_mask(std::span<const int> members)
{
    std::uint64_t mask = 0;
    for (auto m : members) {
        if (m < 0 || m >= 64)
            throw std::out_of_range("subset member outside 0..63");
        mask |= std::uint64_t{1} << m;
    }
    return mask;
}

std::vector<std::vector<int>> subset_orbit_representatives(int universe, int k,
                                                           std::span<const std::vector<int>> generators)
{
    if (universe > 64)
        throw std::out_of_range("orbit representatives need a universe of at most 64");
    CandidateStream stream(universe, k, generators, true);
    std::vector<std::vector<int>> reps;
    while (auto c = stream.next())
        reps.push_back(std::move(*c));
    return reps;
}

std::optional<std::vector<int>> first_matching_subset(int universe, int k, std::span<const std::vector<int>> generators,
                                                      const std::function<bool(std::span<const int>)> &predicate,
                                                      const SubsetSearchOptions &options, std::uint64_t &evaluated)
{
    CandidateStream stream(universe, k, generators, options.orbit_reduction);
    if (!options.parallel) {
        while (auto c = stream.next()) {
            ++evaluated;
            if (predicate(*c))
                return c;
        }
        return std::nullopt;
    }

    const auto chunk_size = static_cast<std::size_t>(std::max(1, options.chunk));
    while (true) {
        std::vector<std::vector<int>> chunk;
        while (chunk.size() < chunk_size) {
            auto c = stream.next();
            if (!c)
                break;
            chunk.push_back(std::move(*c));
        }
        if (chunk.empty())
            return std::nullopt;
        std::vector<char> hit(chunk.size(), 0);
        const auto count = static_cast<long>(chunk.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i)
            hit[i] = predicate(chunk[i]) ? 1 : 0;
        evaluated += chunk.size();
        for (std::size_t i = 0; i < chunk.size(); ++i)
            if (hit[i])
                return chunk[i];
    }
}

}  // namespace distinguo
