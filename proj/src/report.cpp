#include "distinguo/report.hpp"

#include "distinguo/aut.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/graph6.hpp"
#include "distinguo/stability.hpp"

#include <chrono>
#include <cstdio>

namespace distinguo {

namespace {

nlohmann::json counts_json(const CheckCounts &c)
{
    return {{"pass", c.pass}, {"vacuous", c.vacuous}, {"fail", c.fail}, {"skipped", c.skipped}, {"total", c.total()}};
}

template <class T>
std::string cell(const std::optional<T> &v)
{
    return v ? std::to_string(*v) : std::string{};
}

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

nlohmann::json to_json(const CheckReport &r)
{
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["graph_key"] = r.graph_key;
    j["hypothesis_held"] = r.hypothesis_held;
    j["lhs"] = r.lhs ? nlohmann::json(*r.lhs) : nlohmann::json(nullptr);
    j["rhs"] = r.rhs ? nlohmann::json(*r.rhs) : nlohmann::json(nullptr);
    j["relation"] = r.relation;
    j["passed"] = r.passed;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    if (r.interpretation_dependent)
        j["interpretation_dependent"] = true;
    return j;
}

nlohmann::json to_json(const Summary &s)
{
    nlohmann::json per_check = nlohmann::json::object();
    for (const auto &[id, counts] : s.per_check)
        per_check[id] = counts_json(counts);
    nlohmann::json violations = nlohmann::json::array();
    for (const auto &v : s.violations)
        violations.push_back({{"check_id", v.check_id}, {"graph6", v.graph6}, {"details", v.details}});
    return {{"summary", {{"overall", counts_json(s.overall)}, {"per_check", per_check}, {"violations", violations}}}};
}

void write_reports_jsonl(std::ostream &out, std::span<const CheckReport> reports)
{
    for (const auto &r : reports)
        out << to_json(r).dump() << '\n';
    out << to_json(summarize(reports)).dump() << '\n';
}

ScanRow scan_graph6(const std::string &line, DCache &cache, const ScanOptions &options)
{
    ScanRow row;
    row.graph6 = line;
    auto start = std::chrono::steady_clock::now();
    try {
        auto g = from_graph6(line);
        row.n = g.order();
        row.m = g.size();
        if (g.order() > options.max_order)
            throw ParameterError("order " + std::to_string(g.order()) + " exceeds the limit of " +
                                 std::to_string(options.max_order));
        row.aut_order = group_order(g).str();
        row.D = compute_D_cached(g, cache);
        if (g.order() >= 2)
            row.stD = compute_stD(g, cache).value;
        if (options.skip_bd)
            row.bD_status = "skipped";
        else {
            auto b = compute_bD(g, cache, options.bd_cap);
            row.bD = b.value;
            row.bD_status = to_string(b.status);
        }
    }
    catch (const std::exception &e) {
        row.D.reset();
        row.stD.reset();
        row.bD.reset();
        row.aut_order.clear();
        row.bD_status = "error";
        row.error = e.what();
    }
    if (options.timing)
        row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string to_csv(const ScanRow &row)
{
    std::string elapsed;
    if (row.elapsed_ms) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *row.elapsed_ms);
        elapsed = buf;
    }
    return csv_quote(row.graph6) + ',' + cell(row.n) + ',' + cell(row.m) + ',' + cell(row.D) + ',' + cell(row.stD) + ',' +
           cell(row.bD) + ',' + row.bD_status + ',' + row.aut_order + ',' + elapsed;
}

}  // namespace distinguo
