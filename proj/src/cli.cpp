#include "distinguo/cli.hpp"

#include "distinguo/aut.hpp"
#include "distinguo/catalog.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/graph6.hpp"
#include "distinguo/parallel.hpp"
#include "distinguo/report.hpp"
#include "distinguo/stability.hpp"
#include "distinguo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace distinguo {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CacheOptions {
    std::string path;
    bool disabled = false;
};

void add_cache_options(CLI::App *cmd, CacheOptions &opts)
{
    cmd->add_option("--cache", opts.path, "D-value cache file (default: $DISTINGUO_CACHE or the user cache directory)");
    cmd->add_flag("--no-cache", opts.disabled, "Keep the cache in memory only");
}

std::unique_ptr<DCache> open_cache(const CacheOptions &opts, std::ostream &err)
{
    if (opts.disabled)
        return std::make_unique<DCache>();
    auto path = opts.path.empty() ? DCache::default_path() : std::filesystem::path(opts.path);
    auto cache = std::make_unique<DCache>(path);
    if (auto problem = cache->io_error())
        err << "warning: cache " << path.string() << ": " << *problem << "\n";
    return cache;
}

std::string vertex_list(std::span<const Vertex> vs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

std::string edge_list(std::span<const Edge> es)
{
    std::string s = "{";
    for (std::size_t i = 0; i < es.size(); ++i)
        s += (i ? " " : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
    return s + "}";
}

FamilySpec family_spec(const std::string &name, int n, std::optional<int> q)
{
    auto family = parse_family(name);
    FamilySpec spec{family, {n}};
    if (family == Family::complete_bipartite) {
        if (!q)
            throw ParameterError("complete_bipartite needs --q");
        spec.params.push_back(*q);
    }
    spec.validate();
    return spec;
}

std::vector<std::string> read_lines(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

std::vector<Graph> read_catalog_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    return read_graph6_catalog(in);
}

// compute

struct ComputeArgs {
    std::string graph6;
    std::string edges;
    std::string family;
    int n = 0;
    std::optional<int> q;
    bool std_flag = false;
    bool bd_flag = false;
    bool json = false;
    bool exact_bd = false;
    bool force = false;
    int limit = 16;
    CacheOptions cache;
};

int run_compute(const ComputeArgs &a, std::ostream &out, std::ostream &err)
{
    int sources = !a.graph6.empty() + !a.edges.empty() + !a.family.empty();
    if (sources != 1)
        throw UsageError("give exactly one of --graph6, --edges, --family");
    std::optional<FamilySpec> spec;
    auto g = [&] {
        if (!a.graph6.empty())
            return from_graph6(a.graph6);
        if (!a.edges.empty()) {
            std::ifstream in(a.edges);
            if (!in)
                throw UsageError("cannot read " + a.edges);
            return from_edge_list(in);
        }
        spec = family_spec(a.family, a.n, a.q);
        return make_family(*spec);
    }();
    if (g.order() > a.limit && !a.force) {
        err << "refusing: order " << g.order() << " exceeds --limit " << a.limit << " (use --force)\n";
        return kExitTooLarge;
    }
    if (a.std_flag && g.order() < 2)
        throw UsageError("st_D needs at least two vertices");

    auto cache = open_cache(a.cache, err);
    auto d = compute_D(g);
    cache->store(canonical_form(g), d.value);

    nlohmann::json j;
    j["graph6"] = g.order() <= 62 ? to_graph6(g) : std::string{};
    if (spec)
        j["family"] = spec->to_string();
    j["n"] = g.order();
    j["m"] = g.size();
    j["aut_order"] = group_order(g).str();
    j["D"] = d.value;
    j["coloring"] = std::vector<int>(d.witness.colors().begin(), d.witness.colors().end());
    if (a.std_flag) {
        auto st = compute_stD(g, *cache);
        j["stD"] = st.value;
        j["stD_witness"] = st.witness.members();
    }
    if (a.bd_flag) {
        auto b = compute_bD(g, *cache, a.exact_bd ? std::nullopt : std::optional<int>(kDefaultBondageCap));
        j["bD"] = b.value;
        j["bD_status"] = to_string(b.status);
        auto &w = j["bD_witness"] = nlohmann::json::array();
        for (const auto &e : b.witness)
            w.push_back({e.u, e.v});
    }

    if (a.json) {
        out << j.dump() << "\n";
        return kExitOk;
    }
    if (spec)
        out << "family: " << spec->to_string() << "\n";
    out << "graph6: " << j["graph6"].get<std::string>() << "\n";
    out << "n: " << g.order() << "\nm: " << g.size() << "\n";
    out << "aut_order: " << j["aut_order"].get<std::string>() << "\n";
    out << "D: " << d.value << "\ncoloring:";
    for (auto c : d.witness.colors())
        out << ' ' << c;
    out << "\n";
    if (a.std_flag)
        out << "stD: " << j["stD"].get<int>() << " delete "
            << vertex_list(j["stD_witness"].get<std::vector<Vertex>>()) << "\n";
    if (a.bd_flag) {
        std::vector<Edge> witness;
        for (const auto &e : j["bD_witness"])
            witness.emplace_back(e[0].get<int>(), e[1].get<int>());
        out << "bD: " << j["bD"].get<int>() << " (" << j["bD_status"].get<std::string>() << ")";
        if (!witness.empty())
            out << " delete " << edge_list(witness);
        out << "\n";
    }
    return kExitOk;
}

// scan

struct ScanArgs {
    std::string input;
    std::string output;
    int jobs = 0;
    bool skip_bd = false;
    bool exact_bd = false;
    bool timing = false;
    int limit = 16;
    CacheOptions cache;
};

int run_scan(const ScanArgs &a, std::ostream &out, std::ostream &err)
{
    auto lines = read_lines(a.input);
    auto cache = open_cache(a.cache, err);
    ScanOptions options;
    options.skip_bd = a.skip_bd;
    options.bd_cap = a.exact_bd ? std::nullopt : std::optional<int>(kDefaultBondageCap);
    options.timing = a.timing;
    options.max_order = a.limit;
    auto rows = map_items(std::span<const std::string>(lines),
                          [&](const std::string &line) { return scan_graph6(line, *cache, options); }, a.jobs);

    std::ofstream file;
    if (!a.output.empty() && a.output != "-") {
        file.open(a.output, std::ios::binary);
        if (!file)
            throw UsageError("cannot write " + a.output);
    }
    std::ostream &sink = file.is_open() ? file : out;
    sink << kScanHeader << "\n";
    std::size_t failures = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sink << to_csv(rows[i]) << "\n";
        if (rows[i].error) {
            ++failures;
            err << "line " << i + 1 << ": " << *rows[i].error << "\n";
        }
    }
    err << rows.size() << " rows, " << failures << " errors\n";
    return kExitOk;
}

// verify

struct VerifyArgs {
    std::vector<std::string> checks{"all"};
    std::string input;
    std::string family;
    int from = 0;
    int to = -1;
    std::optional<int> q;
    std::optional<int> catalog;
    bool connected = false;
    std::string output;
    int jobs = 0;
    CacheOptions cache;
};

const std::vector<std::string> kCheckGroups = {"families", "bounds",  "conditionals", "contraction",
                                               "conjecture", "friendship_window", "complement", "deletion"};

int run_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err)
{
    std::set<std::string> groups;
    for (const auto &c : a.checks) {
        if (c == "all")
            groups.insert(kCheckGroups.begin(), kCheckGroups.end());
        else if (std::find(kCheckGroups.begin(), kCheckGroups.end(), c) != kCheckGroups.end())
            groups.insert(c);
        else
            throw UsageError("unknown check '" + c + "'");
    }
    if (!a.family.empty() && a.from > a.to)
        throw UsageError("empty range --from " + std::to_string(a.from) + " --to " + std::to_string(a.to));
    if (!a.input.empty() + !a.family.empty() + a.catalog.has_value() > 1)
        throw UsageError("give at most one of --input, --family, --catalog");

    std::vector<Graph> graphs;
    if (!a.input.empty())
        graphs = read_catalog_file(a.input);
    else if (!a.family.empty()) {
        auto family = parse_family(a.family);
        for (int x = a.from; x <= a.to; ++x)
            graphs.push_back(make_family(family_spec(a.family, x, family == Family::complete_bipartite ? a.q : std::nullopt)));
    }
    else if (a.catalog) {
        if (*a.catalog < 1 || *a.catalog > 10)
            throw UsageError("--catalog takes an order in 1..10");
        graphs = all_graphs_between(1, *a.catalog, a.connected);
    }
    static const std::set<std::string> kGraphGroups = {"bounds",     "conditionals", "contraction",
                                                       "conjecture", "complement",   "deletion"};
    bool wants_graphs = std::any_of(groups.begin(), groups.end(), [](auto &g) { return kGraphGroups.count(g) > 0; });
    bool has_source = !a.input.empty() || !a.family.empty() || a.catalog;
    if (wants_graphs && !has_source) {
        if (a.checks != std::vector<std::string>{"all"})
            throw UsageError("graph checks need --input, --family or --catalog");
        for (const auto &g : kGraphGroups)
            groups.erase(g);
    }

    auto cache = open_cache(a.cache, err);
    InvariantStore store(*cache);
    std::vector<CheckReport> reports;
    auto append = [&](std::vector<CheckReport> more) {
        reports.insert(reports.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };

    if (groups.count("families")) {
        if (!a.family.empty()) {
            auto family = parse_family(a.family);
            for (auto which : {TableInvariant::D, TableInvariant::stD, TableInvariant::bD})
                append(check_family_tables(family, a.from, a.to, which, store));
        }
        else {
            for (const auto &r : default_family_ranges())
                append(check_family_tables(r.family, r.lo, r.hi, r.which, store));
            append(check_stability_realisation(3, store));
        }
    }
    if (groups.count("friendship_window"))
        append(check_friendship_window(store));

    auto per_graph = [&](const Graph &g) {
        std::vector<CheckReport> rs;
        auto take = [&](std::vector<CheckReport> more) { rs.insert(rs.end(), more.begin(), more.end()); };
        if (groups.count("bounds"))
            take(check_unconditional_bounds(g, store));
        if (groups.count("conditionals"))
            take(check_conditional_theorems(g, store));
        if (groups.count("contraction"))
            take(check_contractions(g, store));
        if (groups.count("conjecture"))
            rs.push_back(check_conjecture(g, store));
        if (groups.count("complement"))
            take(check_complement(g, store));
        if (groups.count("deletion"))
            take(check_deletion_bounds(g, store));
        return rs;
    };
    if (has_source)
        for (auto &rs : map_items(std::span<const Graph>(graphs), per_graph, a.jobs))
            append(std::move(rs));

    sort_reports(reports);
    std::ofstream file;
    if (!a.output.empty() && a.output != "-") {
        file.open(a.output, std::ios::binary);
        if (!file)
            throw UsageError("cannot write " + a.output);
    }
    std::ostream &sink = file.is_open() ? file : out;
    write_reports_jsonl(sink, reports);
    auto summary = summarize(reports);
    err << summary.overall.total() << " reports: " << summary.overall.pass << " pass, " << summary.overall.vacuous
        << " vacuous, " << summary.overall.skipped << " skipped, " << summary.overall.fail << " fail\n";
    for (const auto &v : summary.violations)
        err << "violation " << v.check_id << " " << v.graph6 << ": " << v.details << "\n";
    return summary.overall.fail == 0 ? kExitOk : kExitCheckFailed;
}

// gen, catalog, cache

int run_gen(const std::string &family, int from, int to, std::optional<int> q, std::ostream &out)
{
    if (from > to)
        throw UsageError("empty range --from " + std::to_string(from) + " --to " + std::to_string(to));
    auto f = parse_family(family);
    std::vector<std::string> lines;
    for (int x = from; x <= to; ++x)
        lines.push_back(to_graph6(make_family(family_spec(family, x, f == Family::complete_bipartite ? q : std::nullopt))));
    for (const auto &l : lines)
        out << l << "\n";
    return kExitOk;
}

int run_catalog(int n, bool connected, std::ostream &out)
{
    if (n < 1 || n > 10)
        throw UsageError("--n takes an order in 1..10");
    for (const auto &g : all_graphs(n, connected))
        out << to_graph6(g) << "\n";
    return kExitOk;
}

int run_cache_audit(const CacheOptions &opts, int samples, std::uint64_t seed, std::ostream &out, std::ostream &err)
{
    auto cache = open_cache(opts, err);
    auto entries = cache->entries();
    std::vector<std::pair<std::string, int>> picked;
    std::sample(entries.begin(), entries.end(), std::back_inserter(picked), samples, std::mt19937_64(seed));
    int mismatches = 0;
    for (const auto &[key, value] : picked) {
        auto fresh = compute_D(from_graph6(key)).value;
        bool ok = fresh == value;
        mismatches += !ok;
        out << key << " cached=" << value << " recomputed=" << fresh << (ok ? " ok" : " MISMATCH") << "\n";
    }
    out << picked.size() << " of " << entries.size() << " entries audited, " << mismatches << " mismatches\n";
    return mismatches == 0 ? kExitOk : kExitCheckFailed;
}

int run_cache_stats(const CacheOptions &opts, std::ostream &out, std::ostream &err)
{
    auto cache = open_cache(opts, err);
    out << "entries: " << cache->size() << "\nskipped_lines: " << cache->skipped_lines() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Distinguishing number, stability and bondage of small graphs", "distinguo"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto *c = app.add_subcommand("compute", "D, and optionally st_D and b_D, of one graph");
    c->add_option("--graph6", compute.graph6, "Graph in graph6");
    c->add_option("--edges", compute.edges, "Edge-list file: 'n m' then one 'u v' per line");
    c->add_option("--family", compute.family, "Family name (path, cycle, complete, ...)");
    c->add_option("--n", compute.n, "Family parameter");
    c->add_option("--q", compute.q, "Second parameter for complete_bipartite");
    c->add_flag("--std", compute.std_flag, "Also compute st_D");
    c->add_flag("--bd", compute.bd_flag, "Also compute b_D");
    c->add_flag("--json", compute.json, "Print one JSON object");
    c->add_flag("--exact-bd", compute.exact_bd, "Search every edge subset for b_D");
    c->add_flag("--force", compute.force, "Ignore --limit");
    c->add_option("--limit", compute.limit, "Largest order accepted without --force")->capture_default_str();
    add_cache_options(c, compute.cache);

    ScanArgs scan;
    auto *s = app.add_subcommand("scan", "CSV of D, st_D and b_D for every graph6 line of a file");
    s->add_option("--input", scan.input, "graph6 file, one graph per line")->required();
    s->add_option("--output", scan.output, "CSV file (default: standard output)");
    s->add_option("--jobs", scan.jobs, "Worker threads; 1 runs serially, 0 uses all")->capture_default_str();
    s->add_flag("--skip-bd", scan.skip_bd, "Leave the bD column empty");
    s->add_flag("--exact-bd", scan.exact_bd, "Search every edge subset for b_D");
    s->add_flag("--timing", scan.timing, "Fill elapsed_ms (makes output run-dependent)");
    s->add_option("--limit", scan.limit, "Largest order computed; larger rows are errors")->capture_default_str();
    add_cache_options(s, scan.cache);

    VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "Check the bounds and closed forms, JSON lines out");
    v->add_option("--checks", verify.checks, "families, bounds, conditionals, contraction, conjecture, friendship_window, "
                                             "complement, deletion, all")
        ->delimiter(',')
        ->capture_default_str();
    v->add_option("--input", verify.input, "graph6 catalog");
    v->add_option("--family", verify.family, "Family swept from --from to --to");
    v->add_option("--from", verify.from);
    v->add_option("--to", verify.to);
    v->add_option("--q", verify.q, "Second parameter for complete_bipartite");
    v->add_option("--catalog", verify.catalog, "Every graph of order 1..N");
    v->add_flag("--connected", verify.connected, "With --catalog, connected graphs only");
    v->add_option("--output", verify.output, "Report file (default: standard output)");
    v->add_option("--jobs", verify.jobs)->capture_default_str();
    add_cache_options(v, verify.cache);

    std::string gen_family;
    int gen_from = 0, gen_to = -1;
    std::optional<int> gen_q;
    auto *g = app.add_subcommand("gen", "graph6 lines for a family range");
    g->add_option("--family", gen_family)->required();
    g->add_option("--from", gen_from)->required();
    g->add_option("--to", gen_to)->required();
    g->add_option("--q", gen_q, "Second parameter for complete_bipartite");

    int catalog_n = 0;
    bool catalog_connected = false;
    auto *k = app.add_subcommand("catalog", "One graph6 line per isomorphism class of order N");
    k->add_option("--n", catalog_n)->required();
    k->add_flag("--connected", catalog_connected);

    CacheOptions cache_opts;
    int audit_samples = 10;
    std::uint64_t audit_seed = 1;
    auto *cache_cmd = app.add_subcommand("cache", "Inspect the D-value cache");
    cache_cmd->require_subcommand(1);
    auto *audit = cache_cmd->add_subcommand("audit", "Recompute random entries and compare");
    audit->add_option("--samples", audit_samples)->capture_default_str();
    audit->add_option("--seed", audit_seed)->capture_default_str();
    add_cache_options(audit, cache_opts);
    auto *stats = cache_cmd->add_subcommand("stats", "Entry count");
    add_cache_options(stats, cache_opts);

    std::vector<const char *> argv{"distinguo"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError &e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c->parsed())
            return run_compute(compute, out, err);
        if (s->parsed())
            return run_scan(scan, out, err);
        if (v->parsed())
            return run_verify(verify, out, err);
        if (g->parsed())
            return run_gen(gen_family, gen_from, gen_to, gen_q, out);
        if (k->parsed())
            return run_catalog(catalog_n, catalog_connected, out);
        if (audit->parsed())
            return run_cache_audit(cache_opts, audit_samples, audit_seed, out, err);
        if (stats->parsed())
            return run_cache_stats(cache_opts, out, err);
    }
    catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace distinguo
