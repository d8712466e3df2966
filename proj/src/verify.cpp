#include "distinguo/verify.hpp"

#include "distinguo/aut.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/graph6.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace distinguo {

namespace {

CheckReport report_for(std::string id, const Graph &g)
{
    CheckReport r;
    r.check_id = std::move(id);
    r.graph_key = to_graph6(g);
    return r;
}

void conclude(CheckReport &r, std::int64_t lhs, std::int64_t rhs, std::string relation = "<=")
{
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = std::move(relation);
    r.hypothesis_held = true;
    r.passed = r.relation == "==" ? lhs == rhs : lhs <= rhs;
    r.status = r.passed ? CheckStatus::pass : CheckStatus::fail;
}

void mark_vacuous(CheckReport &r, std::string why)
{
    r.hypothesis_held = false;
    r.passed = true;
    r.status = CheckStatus::vacuous;
    r.witness = std::move(why);
}

void mark_skipped(CheckReport &r, std::string why)
{
    r.hypothesis_held = false;
    r.passed = true;
    r.status = CheckStatus::skipped;
    r.witness = std::move(why);
}

std::string edge_text(const Edge &e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::vacuous:
        return "vacuous";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

std::string_view to_string(TableInvariant t)
{
    switch (t) {
    case TableInvariant::D:
        return "D";
    case TableInvariant::stD:
        return "stD";
    case TableInvariant::bD:
        return "bD";
    }
    return "unknown";
}

std::vector<FamilyRange> default_family_ranges()
{
    using F = Family;
    using T = TableInvariant;
    return {
        {F::path, 3, 10, T::D},          {F::cycle, 3, 10, T::D},        {F::complete, 1, 7, T::D},
        {F::complete_bipartite, 2, 9, T::D}, {F::book, 2, 5, T::D},      {F::friendship, 2, 5, T::D},
        {F::matching_union, 1, 5, T::D}, {F::path, 2, 9, T::stD},        {F::cycle, 3, 9, T::stD},
        {F::complete, 2, 6, T::stD},     {F::complete_bipartite, 2, 8, T::stD}, {F::book, 2, 4, T::stD},
        {F::friendship, 2, 5, T::stD},   {F::path, 2, 8, T::bD},         {F::cycle, 3, 8, T::bD},
        {F::complete, 3, 6, T::bD},      {F::complete_bipartite, 2, 7, T::bD},
    };
}

InvariantStore::InvariantStore(DCache &cache, SubsetSearchOptions options) : cache_(cache), options_(options) {}

int InvariantStore::D(const Graph &g) { return compute_D_cached(g, cache_); }

int InvariantStore::stD(const Graph &g)
{
    auto key = canonical_form(g).bytes;
    {
        std::shared_lock lock(mutex_);
        if (auto it = stability_.find(key); it != stability_.end())
            return it->second;
    }
    auto value = compute_stD(from_graph6(key), cache_, options_).value;
    std::unique_lock lock(mutex_);
    stability_[key] = value;
    return value;
}

int InvariantStore::bD(const Graph &g)
{
    auto key = canonical_form(g).bytes;
    {
        std::shared_lock lock(mutex_);
        if (auto it = bondage_.find(key); it != bondage_.end())
            return it->second;
    }
    auto value = compute_bD(from_graph6(key), cache_, std::nullopt, options_).value;
    std::unique_lock lock(mutex_);
    bondage_[key] = value;
    return value;
}

std::vector<CheckReport> check_unconditional_bounds(const Graph &g, InvariantStore &store)
{
    static const char *const kIds[] = {"stab.order_bound",  "stab.max_degree_bound",  "stab.diameter_bound", "stab.clique_bound", "stab.distinguishing_bound",
                                       "bond.size_bound",  "bond.max_degree_bound",  "bond.diameter_bound", "bond.clique_bound"};
    std::vector<CheckReport> reports;
    for (auto id : kIds)
        reports.push_back(report_for(id, g));
    const std::int64_t n = g.order();
    if (n < 2) {
        for (auto &r : reports)
            mark_skipped(r, "order < 2");
        return reports;
    }
    const std::int64_t m = g.size();
    const std::int64_t st = store.stD(g);
    const std::int64_t b = store.bD(g);
    const std::int64_t d_value = store.D(g);
    const auto met = metrics(g);
    const std::int64_t delta = met.max_degree;
    const std::int64_t omega = met.clique_number;

    conclude(reports[0], st, n - 1);

    if (delta >= 3 && has_induced_star(g, met.max_degree))
        conclude(reports[1], st, n - delta);
    else
        mark_vacuous(reports[1], "needs max degree >= 3 and an induced K_{1,max degree}");

    if (met.diameter) {
        const std::int64_t d = *met.diameter;
        std::int64_t rhs = (d == 3) ? n - d + 2 : (d == 1 || d == 4) ? n - d : n - d + 1;
        conclude(reports[2], st, rhs);
        reports[2].witness = "diameter=" + std::to_string(d) + "; a geodesic is an induced P_{d+1}";
    }
    else
        mark_vacuous(reports[2], "disconnected: diameter undefined");

    conclude(reports[3], st, n - omega + 1);
    conclude(reports[4], st, n - d_value + 1);
    conclude(reports[5], b, m);

    if (delta >= 3)
        conclude(reports[6], b, m - delta + 1);
    else
        mark_vacuous(reports[6], "needs max degree >= 3");

    if (met.diameter) {
        const std::int64_t d = *met.diameter;
        conclude(reports[7], b, n >= d + 3 ? m - d + 1 : m - d + 2);
        reports[7].witness = "diameter=" + std::to_string(d);
    }
    else
        mark_vacuous(reports[7], "disconnected: diameter undefined");

    conclude(reports[8], b, n <= 2 * omega ? m - choose2(omega) + 1 : m - choose2(omega) + omega - 1);
    reports[8].witness = "omega=" + std::to_string(omega);
    return reports;
}

std::vector<CheckReport> check_conditional_theorems(const Graph &g, InvariantStore &store)
{
    auto cond_d = report_for("stab.conditional_D_bound", g);
    auto co_diff = report_for("bond.complement_difference", g);
    auto co_sum_lower = report_for("bond.complement_sum_lower", g);
    auto co_sum_upper = report_for("bond.complement_sum_upper", g);
    auto edge_vertex = report_for("bond.critical_edge_bound", g);
    edge_vertex.interpretation_dependent = true;

    const int n = g.order();
    if (n < 2) {
        for (auto *r : {&cond_d, &co_diff, &co_sum_lower, &co_sum_upper, &edge_vertex})
            mark_skipped(*r, "order < 2");
        return {cond_d, co_diff, co_sum_lower, co_sum_upper, edge_vertex};
    }
    const int st = store.stD(g);
    const int d_value = store.D(g);
    const int b = store.bD(g);
    const auto co = complement(g);
    const int b_co = store.bD(co);
    const auto edges = g.edges();

    if (n < 3)
        mark_skipped(cond_d, "st_D(G-v) needs order >= 2");
    else {
        std::optional<Vertex> found;
        for (Vertex v = 0; v < n && !found; ++v)
            if (st <= store.stD(delete_vertex(g, v)))
                found = v;
        if (found) {
            conclude(cond_d, st, d_value);
            cond_d.witness = "v=" + std::to_string(*found);
        }
        else
            mark_vacuous(cond_d, "st_D(G) > st_D(G-v) for every v");
    }

    // Shared hypothesis of the complement bounds: b(G) <= b(G-e) and b(co(G)+e) <= b(co(G)).
    std::optional<Edge> nordhaus_edge;
    for (const auto &e : edges) {
        auto without = delete_edges(g, std::span<const Edge>(&e, 1));
        if (b <= store.bD(without) && store.bD(complement(without)) <= b_co) {
            nordhaus_edge = e;
            break;
        }
    }
    auto pair_text = "b_D(G)=" + std::to_string(b) + ", b_D(co G)=" + std::to_string(b_co);

    if (!is_connected(g))
        mark_vacuous(co_diff, "G is disconnected");
    else if (!nordhaus_edge)
        mark_vacuous(co_diff, "no edge satisfies the hypothesis");
    else {
        conclude(co_diff, std::abs(b - b_co), 1);
        co_diff.witness = "e=" + edge_text(*nordhaus_edge) + "; " + pair_text;
    }

    if (!nordhaus_edge) {
        mark_vacuous(co_sum_lower, "no edge satisfies the hypothesis");
        mark_vacuous(co_sum_upper, "no edge satisfies the hypothesis");
    }
    else {
        conclude(co_sum_lower, 1, b + b_co);
        conclude(co_sum_upper, b + b_co, 2 * std::min(b, b_co) + 1);
        co_sum_lower.witness = co_sum_upper.witness = "e=" + edge_text(*nordhaus_edge) + "; " + pair_text;
    }

    // Reading: some edge uv where deleting u or v changes D, and b(G) <= b(G-e).
    std::optional<Edge> critical_edge;
    for (const auto &e : edges) {
        bool endpoint_changes = store.D(delete_vertex(g, e.u)) != d_value || store.D(delete_vertex(g, e.v)) != d_value;
        if (endpoint_changes && b <= store.bD(delete_edges(g, std::span<const Edge>(&e, 1)))) {
            critical_edge = e;
            break;
        }
    }
    if (critical_edge) {
        conclude(edge_vertex, b, (st + 1) / 2 + 1);
        edge_vertex.witness = "e=" + edge_text(*critical_edge) + "; st_D=" + std::to_string(st);
    }
    else
        mark_vacuous(edge_vertex, "no edge with a D-critical endpoint and b_D(G) <= b_D(G-e)");

    return {cond_d, co_diff, co_sum_lower, co_sum_upper, edge_vertex};
}

CheckReport check_contraction(const Graph &g, Vertex v, InvariantStore &store)
{
    g.check_vertex(v);
    auto r = report_for("stab.contraction_bound", g);
    if (g.order() < 3) {
        mark_skipped(r, "v=" + std::to_string(v) + "; G/v has order < 2");
        return r;
    }
    auto contracted = contract(g, v);
    const int t = static_cast<int>(contracted.incident_neighbours.size());
    if (g.order() - 1 - t < 2) {
        mark_skipped(r, "v=" + std::to_string(v) + ", t=" + std::to_string(t) + "; G-v-v_1-...-v_t has order < 2");
        return r;
    }
    std::vector<Vertex> removed(contracted.incident_neighbours.begin(), contracted.incident_neighbours.end());
    removed.push_back(v);
    auto rest = delete_vertices(g, VertexSet(std::move(removed)));
    conclude(r, store.stD(contracted.graph), store.stD(rest) + t);
    r.witness = "v=" + std::to_string(v) + ", t=" + std::to_string(t) + ", added=" + std::to_string(contracted.added.size());
    return r;
}

std::vector<CheckReport> check_contractions(const Graph &g, InvariantStore &store)
{
    std::vector<CheckReport> reports;
    for (Vertex v = 0; v < g.order(); ++v)
        reports.push_back(check_contraction(g, v, store));
    return reports;
}

CheckReport check_conjecture(const Graph &g, InvariantStore &store)
{
    auto r = report_for("stab.conjecture_D_plus_one", g);
    if (g.order() < 2)
        mark_skipped(r, "order < 2");
    else if (!is_connected(g))
        mark_vacuous(r, "G is disconnected");
    else {
        auto d_value = store.D(g);
        conclude(r, store.stD(g), d_value + 1);
        r.witness = "D=" + std::to_string(d_value);
    }
    return r;
}

std::vector<CheckReport> check_deletion_bounds(const Graph &g, InvariantStore &store)
{
    auto lower = report_for("dist.vertex_deletion_lower", g);
    auto upper = report_for("dist.vertex_deletion_upper", g);
    auto edge = report_for("dist.edge_deletion", g);
    if (!is_connected(g)) {
        for (auto *r : {&lower, &upper, &edge})
            mark_vacuous(*r, "G is disconnected");
        return {lower, upper, edge};
    }
    const int d_value = store.D(g);
    if (g.order() < 2) {
        mark_skipped(lower, "order < 2");
        mark_skipped(upper, "order < 2");
    }
    else {
        int lowest = g.order();
        int highest = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto dv = store.D(delete_vertex(g, v));
            lowest = std::min(lowest, dv);
            highest = std::max(highest, dv);
        }
        conclude(lower, d_value - 1, lowest);
        conclude(upper, highest, 2 * d_value);
    }
    if (g.size() == 0)
        mark_vacuous(edge, "no edges");
    else {
        int worst = 0;
        for (const auto &e : g.edges())
            worst = std::max(worst, std::abs(store.D(delete_edges(g, std::span<const Edge>(&e, 1))) - d_value));
        conclude(edge, worst, 2);
    }
    return {lower, upper, edge};
}

std::vector<CheckReport> check_complement(const Graph &g, InvariantStore &store)
{
    auto d_report = report_for("dist.complement_equal", g);
    auto st_report = report_for("stab.complement_equal", g);
    auto co = complement(g);
    conclude(d_report, store.D(g), store.D(co), "==");
    if (g.order() < 2)
        mark_skipped(st_report, "order < 2");
    else
        conclude(st_report, store.stD(g), store.stD(co), "==");
    return {d_report, st_report};
}

std::vector<CheckReport> check_family_tables(Family family, int lo, int hi, TableInvariant which, InvariantStore &store)
{
    std::vector<FamilySpec> specs;
    for (int x = lo; x <= hi; ++x) {
        if (family == Family::complete_bipartite) {
            for (int q = 1; 2 * q <= x; ++q)
                specs.push_back(FamilySpec::complete_bipartite(x - q, q));
        }
        else
            specs.push_back({family, {x}});
    }
    std::vector<CheckReport> reports;
    auto id = "family." + std::string(family_name(family)) + "." + std::string(to_string(which));
    for (const auto &spec : specs) {
        try {
            spec.validate();
        }
        catch (const ParameterError &) {
            continue;
        }
        auto g = make_family(spec);
        auto r = report_for(id, g);
        if (which == TableInvariant::stD && g.order() < 2) {
            mark_skipped(r, spec.to_string() + "; order < 2");
            reports.push_back(std::move(r));
            continue;
        }
        std::int64_t computed = which == TableInvariant::D     ? store.D(g)
                                : which == TableInvariant::stD ? store.stD(g)
                                                               : store.bD(g);
        try {
            std::int64_t expected = which == TableInvariant::D     ? formula_D(spec)
                                    : which == TableInvariant::stD ? formula_stD(spec)
                                                                   : formula_bD(spec);
            conclude(r, computed, expected, "==");
            r.witness = spec.to_string();
        }
        catch (const ParameterError &) {
            mark_skipped(r, spec.to_string() + "; no closed form, computed " + std::to_string(computed));
            r.lhs = computed;
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<CheckReport> check_stability_realisation(int max_k, InvariantStore &store)
{
    constexpr int kLargestFriendship = 8;
    std::vector<CheckReport> reports;
    for (int k = 1; k <= max_k; ++k) {
        std::optional<int> found;
        for (int n = 2; n <= kLargestFriendship && !found; ++n)
            if (friendship_stability(n) == k && store.stD(make_family(FamilySpec::friendship(n))) == k)
                found = n;
        CheckReport r;
        r.check_id = "stab.every_value_realised";
        if (found) {
            auto spec = FamilySpec::friendship(*found);
            r.graph_key = to_graph6(make_family(spec));
            conclude(r, store.stD(make_family(spec)), k, "==");
            r.witness = spec.to_string();
        }
        else {
            r.graph_key = "";
            r.lhs = 0;
            r.rhs = k;
            r.relation = "==";
            r.passed = false;
            r.status = CheckStatus::fail;
            r.witness = "no friendship graph up to F_" + std::to_string(kLargestFriendship) + " has st_D=" + std::to_string(k);
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<CheckReport> check_friendship_window(InvariantStore &store)
{
    constexpr int kExpectedD = 4;
    std::vector<CheckReport> reports;
    for (auto [n, expected_b] : {std::pair{4, 1}, std::pair{5, 2}, std::pair{6, 3}}) {
        auto g = make_family(FamilySpec::friendship(n));
        auto r = report_for("bond.friendship_window", g);
        auto d_value = store.D(g);
        conclude(r, store.bD(g), expected_b, "==");
        if (d_value != kExpectedD) {
            r.passed = false;
            r.status = CheckStatus::fail;
        }
        r.witness = FamilySpec::friendship(n).to_string() + "; D=" + std::to_string(d_value) + " (expected " +
                    std::to_string(kExpectedD) + ")";
        reports.push_back(std::move(r));
    }
    return reports;
}

Summary summarize(std::span<const CheckReport> reports)
{
    Summary s;
    for (const auto &r : reports) {
        auto &counts = s.per_check[r.check_id];
        for (auto *c : {&counts, &s.overall}) {
            switch (r.status) {
            case CheckStatus::pass:
                ++c->pass;
                break;
            case CheckStatus::vacuous:
                ++c->vacuous;
                break;
            case CheckStatus::fail:
                ++c->fail;
                break;
            case CheckStatus::skipped:
                ++c->skipped;
                break;
            }
        }
        if (r.status == CheckStatus::fail) {
            std::ostringstream details;
            details << (r.lhs ? std::to_string(*r.lhs) : "?") << ' ' << r.relation << ' '
                    << (r.rhs ? std::to_string(*r.rhs) : "?") << " does not hold";
            if (r.witness)
                details << " (" << *r.witness << ")";
            s.violations.push_back({r.check_id, r.graph_key, details.str()});
        }
    }
    return s;
}

void sort_reports(std::vector<CheckReport> &reports)
{
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport &a, const CheckReport &b) {
        return std::tie(a.check_id, a.graph_key) < std::tie(b.check_id, b.graph_key);
    });
}

}  // namespace distinguo
