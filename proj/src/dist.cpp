#include "distinguo/dist.hpp"

#include <algorithm>
#include <numeric>

namespace distinguo {

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Graph &g, int labels, DistSearchOptions options)
        : g_(g), n_(g.order()), labels_(labels), options_(options), colors_(g.order(), 1)
    {
    }

    bool run() { return search(0, 0); }

    const std::vector<int> &colors() const { return colors_; }
    std::uint64_t tested() const { return tested_; }

private:
    bool search(int next, int used)
    {
        if (next == n_) {
            ++tested_;
            return is_distinguishing(g_, VertexColoring(colors_, labels_));
        }
        if (options_.first_occurrence && labels_ - used > n_ - next)
            return false;
        if (options_.prune_partial && next > 0 && partial_is_doomed(next))
            return false;
        int top = options_.first_occurrence ? std::min(labels_, used + 1) : labels_;
        for (int c = 1; c <= top; ++c) {
            colors_[next] = c;
            if (search(next + 1, std::max(used, c)))
                return true;
        }
        return false;
    }

    bool partial_is_doomed(int next) const
    {
        std::vector<int> fixed(colors_.begin(), colors_.begin() + next);
        for (int v = next; v < n_; ++v)
            fixed.push_back(labels_ + 1 + (v - next));
        return find_nontrivial_color_automorphism(g_, VertexColoring(std::move(fixed), labels_ + n_ - next)).has_value();
    }

    const Graph &g_;
    int n_;
    int labels_;
    DistSearchOptions options_;
    std::vector<int> colors_;
    std::uint64_t tested_ = 0;
};

}  // namespace

std::int64_t isqrt(std::int64_t x)
{
    if (x < 0)
        throw ParameterError("isqrt of a negative number");
    std::int64_t lo = 0;
    std::int64_t hi = std::min<std::int64_t>(x, 3037000499) + 1;
    while (hi - lo > 1) {
        auto mid = lo + (hi - lo) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool is_square(std::int64_t x)
{
    if (x < 0)
        return false;
    auto r = isqrt(x);
    return r * r == x;
}

int pair_labels_needed(std::int64_t n)
{
    auto disc = 8 * n + 1;
    auto s = isqrt(disc);
    if (s * s == disc)
        return static_cast<int>((1 + s) / 2);
    return static_cast<int>((s + 1) / 2 + 1);
}

bool is_distinguishing(const Graph &g, const VertexColoring &c) { return !find_nontrivial_color_automorphism(g, c); }

DistResult compute_D(const Graph &g, DistSearchOptions options)
{
    auto start = std::chrono::steady_clock::now();
    DistResult result;
    result.witness = VertexColoring::uniform(g.order());
    if (!find_nontrivial_automorphism(g, OrderedPartition::unit(g.order()))) {
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }
    for (int labels = 2; labels <= g.order(); ++labels) {
        ColoringSearch search(g, labels, options);
        bool found = search.run();
        result.colorings_tested += search.tested();
        if (found) {
            result.value = labels;
            result.witness = VertexColoring(search.colors(), labels);
            break;
        }
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

int compute_D_cached(const Graph &g, DCache &cache)
{
    auto key = canonical_form(g);
    if (auto hit = cache.lookup(key))
        return *hit;
    auto value = compute_D(g).value;
    cache.store(key, value);
    return value;
}

int formula_D(const FamilySpec &spec)
{
    spec.validate();
    auto n = spec.n();
    auto out_of_range = [&] { return ParameterError("no closed-form D for " + spec.to_string()); };
    switch (spec.family) {
    case Family::path:
        if (n < 3)
            throw out_of_range();
        return 2;
    case Family::cycle:
        return n <= 5 ? 3 : 2;
    case Family::complete:
        return n;
    case Family::complete_bipartite: {
        auto q = spec.q();
        if (n != q)
            return std::max(n, q);
        if (n < 4)
            throw out_of_range();
        return n + 1;
    }
    case Family::book: {
        auto r = static_cast<int>(isqrt(n));
        return r * r == n ? r : r + 1;
    }
    case Family::friendship:
        if (n < 2)
            throw out_of_range();
        return pair_labels_needed(n);
    case Family::matching_union:
        return pair_labels_needed(n);
    default:
        throw out_of_range();
    }
}

}  // namespace distinguo
