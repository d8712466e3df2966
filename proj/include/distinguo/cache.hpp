#pragma once

#include "distinguo/aut.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace distinguo {

/// Distinguishing numbers keyed by canonical form.
///
/// With a backing file the cache is an append-only log of lines "<canonical-graph6> <D>". The whole file is read at
/// open, corrupt lines are skipped with a warning on stderr, and every new entry is appended and flushed. Lookups may
/// run concurrently with each other and with inserts.
class DCache {
public:
    DCache() = default;
    explicit DCache(const std::filesystem::path &file);
    ~DCache();

    DCache(const DCache &) = delete;
    DCache &operator=(const DCache &) = delete;

    std::optional<int> lookup(const CanonicalKey &key) const;
    void store(const CanonicalKey &key, int d_value);

    std::size_t size() const;
    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    std::size_t skipped_lines() const { return skipped_lines_; }
    /// Last I/O problem, if any; the in-memory table keeps working regardless.
    std::optional<std::string> io_error() const;

    std::vector<std::pair<std::string, int>> entries() const;

    /// $DISTINGUO_CACHE when set, otherwise $XDG_CACHE_HOME/distinguo/dvalues.txt or ~/.cache/distinguo/dvalues.txt.
    static std::filesystem::path default_path();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, int> table_;
    std::FILE *log_ = nullptr;
    std::optional<std::string> io_error_;
    mutable std::atomic<std::size_t> hits_{0};
    mutable std::atomic<std::size_t> misses_{0};
    std::size_t skipped_lines_ = 0;
};

}  // namespace distinguo
