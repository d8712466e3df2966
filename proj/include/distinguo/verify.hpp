#pragma once

#include "distinguo/cache.hpp"
#include "distinguo/families.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/stability.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace distinguo {

enum class CheckStatus { pass, vacuous, fail, skipped };

std::string_view to_string(CheckStatus s);

/// Outcome of one bound or theorem on one graph. `passed` is lhs `relation` rhs when the hypothesis held; vacuous and
/// skipped reports count as passed.
struct CheckReport {
    std::string check_id;
    std::string graph_key;
    bool hypothesis_held = true;
    std::optional<std::int64_t> lhs;
    std::optional<std::int64_t> rhs;
    std::string relation = "<=";
    bool passed = true;
    CheckStatus status = CheckStatus::pass;
    std::optional<std::string> witness;
    bool interpretation_dependent = false;
};

struct Violation {
    std::string check_id;
    std::string graph6;
    std::string details;
};

struct CheckCounts {
    std::size_t pass = 0;
    std::size_t vacuous = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;

    std::size_t total() const { return pass + vacuous + fail + skipped; }
};

struct Summary {
    std::map<std::string, CheckCounts> per_check;
    CheckCounts overall;
    std::vector<Violation> violations;
};

/// Exact D, st_D and b_D with memoisation by canonical form. Safe for concurrent use.
class InvariantStore {
public:
    explicit InvariantStore(DCache &cache, SubsetSearchOptions options = {});

    int D(const Graph &g);
    /// Requires order >= 2.
    int stD(const Graph &g);
    /// Exact (uncapped) bondage number.
    int bD(const Graph &g);

    DCache &cache() { return cache_; }
    const SubsetSearchOptions &options() const { return options_; }

private:
    DCache &cache_;
    SubsetSearchOptions options_;
    std::shared_mutex mutex_;
    std::unordered_map<std::string, int> stability_;
    std::unordered_map<std::string, int> bondage_;
};

enum class TableInvariant { D, stD, bD };

std::string_view to_string(TableInvariant t);

struct FamilyRange {
    Family family;
    int lo;
    int hi;
    TableInvariant which;
};

/// The family ranges swept by default: every member where a closed form is claimed and brute force is cheap.
std::vector<FamilyRange> default_family_ranges();

/// Order-and-degree bounds on st_D and b_D that need no extra hypothesis beyond what is computed from the graph.
std::vector<CheckReport> check_unconditional_bounds(const Graph &g, InvariantStore &store);

/// Bounds whose hypotheses quantify over vertex or edge deletions; hypotheses are evaluated exactly.
std::vector<CheckReport> check_conditional_theorems(const Graph &g, InvariantStore &store);

CheckReport check_contraction(const Graph &g, Vertex v, InvariantStore &store);
std::vector<CheckReport> check_contractions(const Graph &g, InvariantStore &store);

/// st_D(G) <= D(G) + 1 for connected G of order >= 2.
CheckReport check_conjecture(const Graph &g, InvariantStore &store);

/// D(G)-1 <= D(G-v) <= 2D(G) for every v and |D(G-e)-D(G)| <= 2 for every e, for connected G.
std::vector<CheckReport> check_deletion_bounds(const Graph &g, InvariantStore &store);

/// D and st_D agree on G and its complement.
std::vector<CheckReport> check_complement(const Graph &g, InvariantStore &store);

/// Computed value versus closed form for every family member with parameter in lo..hi. For complete_bipartite the
/// range is over p+q with p >= q >= 1.
std::vector<CheckReport> check_family_tables(Family family, int lo, int hi, TableInvariant which, InvariantStore &store);

/// Friendship graphs realising st_D = k for k = 1..max_k.
std::vector<CheckReport> check_stability_realisation(int max_k, InvariantStore &store);

/// (D, b_D) of F_4, F_5, F_6 against (4, 1), (4, 2), (4, 3).
std::vector<CheckReport> check_friendship_window(InvariantStore &store);

Summary summarize(std::span<const CheckReport> reports);

/// Sorts by (check_id, graph_key), keeping the relative order of equal keys.
void sort_reports(std::vector<CheckReport> &reports);

}  // namespace distinguo
