#pragma once

#include "distinguo/cache.hpp"
#include "distinguo/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace distinguo {

nlohmann::json to_json(const CheckReport &r);
nlohmann::json to_json(const Summary &s);

/// One report per line, then a line holding the summary object.
void write_reports_jsonl(std::ostream &out, std::span<const CheckReport> reports);

struct ScanRow {
    std::string graph6;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> D;
    std::optional<int> stD;
    std::optional<int> bD;
    /// "exact", "lower_bound_only", "skipped" or "error".
    std::string bD_status;
    std::string aut_order;
    std::optional<double> elapsed_ms;
    std::optional<std::string> error;
};

struct ScanOptions {
    bool skip_bd = false;
    /// nullopt removes the cap.
    std::optional<int> bd_cap = kDefaultBondageCap;
    bool timing = false;
    int max_order = 16;
};

/// Never throws; problems end up in `error` with bD_status "error".
ScanRow scan_graph6(const std::string &line, DCache &cache, const ScanOptions &options);

inline constexpr const char *kScanHeader = "graph6,n,m,D,stD,bD,bD_status,aut_order,elapsed_ms";

std::string to_csv(const ScanRow &row);

}  // namespace distinguo
