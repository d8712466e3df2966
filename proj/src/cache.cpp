#include "distinguo/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace distinguo {

namespace {

bool valid_key(const std::string &key)
{
    if (key.empty())
        return false;
    for (auto c : key)
        if (c < 63 || c > 126)
            return false;
    return true;
}

}  // namespace

DCache::DCache(const std::filesystem::path &file)
{
    {
        std::ifstream in(file);
        std::string line;
        int line_no = 0;
        while (in && std::getline(in, line)) {
            ++line_no;
            std::istringstream fields(line);
            std::string key;
            int value = 0;
            std::string extra;
            if (!(fields >> key >> value) || (fields >> extra) || !valid_key(key) || value < 1) {
                std::cerr << "warning: " << file.string() << ":" << line_no << ": skipping corrupt cache line\n";
                ++skipped_lines_;
                continue;
            }
            table_[key] = value;
        }
    }
    std::error_code ec;
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path(), ec);
    log_ = std::fopen(file.string().c_str(), "a");
    if (log_ == nullptr) {
        io_error_ = "cannot open " + file.string() + " for appending";
        std::cerr << "warning: " << *io_error_ << "; cache is memory-only\n";
    }
}

DCache::~DCache()
{
    if (log_ != nullptr)
        std::fclose(log_);
}

std::optional<int> DCache::lookup(const CanonicalKey &key) const
{
    std::shared_lock lock(mutex_);
    auto it = table_.find(key.bytes);
    if (it == table_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void DCache::store(const CanonicalKey &key, int d_value)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.insert_or_assign(key.bytes, d_value);
    if (!inserted || log_ == nullptr)
        return;
    auto line = key.bytes + ' ' + std::to_string(d_value) + '\n';
    if (std::fputs(line.c_str(), log_) < 0 || std::fflush(log_) != 0)
        io_error_ = "write to cache file failed";
}

std::size_t DCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::optional<std::string> DCache::io_error() const
{
    std::shared_lock lock(mutex_);
    return io_error_;
}

std::vector<std::pair<std::string, int>> DCache::entries() const
{
    std::shared_lock lock(mutex_);
    std::vector<std::pair<std::string, int>> result(table_.begin(), table_.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::filesystem::path DCache::default_path()
{
    if (const char *env = std::getenv("DISTINGUO_CACHE"); env != nullptr && *env != '\0')
        return env;
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0')
        return std::filesystem::path(xdg) / "distinguo" / "dvalues.txt";
    if (const char *home = std::getenv("HOME"); home != nullptr && *home != '\0')
        return std::filesystem::path(home) / ".cache" / "distinguo" / "dvalues.txt";
    return "distinguo-dvalues.txt";
}

}  // namespace distinguo
