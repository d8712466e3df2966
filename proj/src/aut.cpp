#include "distinguo/aut.hpp"

#include "distinguo/graph6.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace distinguo {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

Mask bit(Vertex v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }

Mask orbit_closure(Mask seed, const std::vector<Permutation> &gens)
{
    Mask orbit = seed;
    Mask frontier = seed;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) {
            auto v = lowest(f);
            for (const auto &p : gens)
                next |= bit(p(v));
        }
        frontier = next & ~orbit;
        orbit |= next;
    }
    return orbit;
}

struct Group {
    std::vector<Permutation> generators;
    BigInt order = 1;
};

/// Individualisation-refinement search over partitions of one graph's vertex set.
class Engine {
public:
    explicit Engine(const Graph &g) : g_(g), n_(g.order()) {}

    Cells refine(Cells cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size(); ++s) {
                Mask splitter = cells[s];
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (std::popcount(cells[c]) == 1)
                        continue;
                    std::array<Mask, Graph::kMaxOrder + 1> buckets{};
                    int first = -1;
                    bool split = false;
                    for (Mask m = cells[c]; m != 0; m &= m - 1) {
                        auto v = lowest(m);
                        int count = std::popcount(g_.neighbour_mask(v) & splitter);
                        if (first < 0)
                            first = count;
                        else if (count != first)
                            split = true;
                        buckets[count] |= bit(v);
                    }
                    if (!split)
                        continue;
                    Cells parts;
                    for (int count = 0; count <= Graph::kMaxOrder; ++count)
                        if (buckets[count] != 0)
                            parts.push_back(buckets[count]);
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                    c += parts.size() - 1;
                    changed = true;
                }
            }
        }
        return cells;
    }

    bool compatible(const Cells &a, const Cells &b) const
    {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::popcount(a[i]) != std::popcount(b[i]))
                return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto ra = g_.neighbour_mask(lowest(a[i]));
            auto rb = g_.neighbour_mask(lowest(b[i]));
            for (std::size_t j = 0; j < a.size(); ++j)
                if (std::popcount(ra & a[j]) != std::popcount(rb & b[j]))
                    return false;
        }
        return true;
    }

    bool discrete(const Cells &cells) const { return static_cast<int>(cells.size()) == n_; }

    std::size_t target(const Cells &cells) const
    {
        std::size_t best = cells.size();
        int best_size = n_ + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int size = std::popcount(cells[i]);
            if (size > 1 && size < best_size) {
                best = i;
                best_size = size;
            }
        }
        return best;
    }

    Cells individualize(const Cells &cells, std::size_t t, Vertex v) const
    {
        Cells next = cells;
        next[t] &= ~bit(v);
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(t), bit(v));
        return refine(std::move(next));
    }

    std::optional<Permutation> leaf_map(const Cells &a, const Cells &b) const
    {
        std::vector<Vertex> image(n_);
        for (int i = 0; i < n_; ++i)
            image[lowest(a[i])] = lowest(b[i]);
        Permutation p(std::move(image));
        if (is_automorphism(g_, p))
            return p;
        return std::nullopt;
    }

    /// Some automorphism carrying partition a onto partition b, cell by cell.
    std::optional<Permutation> extend(const Cells &a, const Cells &b) const
    {
        if (discrete(a))
            return leaf_map(a, b);
        auto t = target(a);
        auto left = individualize(a, t, lowest(a[t]));
        for (Mask m = b[t]; m != 0; m &= m - 1) {
            auto right = individualize(b, t, lowest(m));
            if (!compatible(left, right))
                continue;
            if (auto p = extend(left, right))
                return p;
        }
        return std::nullopt;
    }

    std::optional<Permutation> nontrivial(const Cells &cells) const
    {
        if (discrete(cells))
            return std::nullopt;
        auto t = target(cells);
        auto v = lowest(cells[t]);
        auto left = individualize(cells, t, v);
        for (Mask m = cells[t] & ~bit(v); m != 0; m &= m - 1) {
            auto right = individualize(cells, t, lowest(m));
            if (!compatible(left, right))
                continue;
            if (auto p = extend(left, right))
                return p;
        }
        return nontrivial(left);
    }

    Group group(const Cells &cells) const
    {
        if (discrete(cells))
            return {};
        auto t = target(cells);
        auto v = lowest(cells[t]);
        auto left = individualize(cells, t, v);
        Group result = group(left);
        Mask orbit = orbit_closure(bit(v), result.generators);
        for (Mask m = cells[t] & ~bit(v); m != 0; m &= m - 1) {
            auto w = lowest(m);
            if (orbit & bit(w))
                continue;
            auto right = individualize(cells, t, w);
            if (!compatible(left, right))
                continue;
            if (auto p = extend(left, right)) {
                result.generators.push_back(std::move(*p));
                orbit = orbit_closure(orbit, result.generators);
            }
        }
        result.order *= std::popcount(orbit);
        return result;
    }

    void canonical(const Cells &cells, std::string &best) const
    {
        if (discrete(cells)) {
            std::vector<Vertex> new_id(n_);
            for (int i = 0; i < n_; ++i)
                new_id[lowest(cells[i])] = i;
            auto candidate = to_graph6(relabel(g_, new_id));
            if (best.empty() || candidate < best)
                best = std::move(candidate);
            return;
        }
        auto t = target(cells);
        auto stabiliser = group(cells);
        for (Mask remaining = cells[t]; remaining != 0;) {
            auto w = lowest(remaining);
            remaining &= ~orbit_closure(bit(w), stabiliser.generators);
            canonical(individualize(cells, t, w), best);
        }
    }

private:
    const Graph &g_;
    int n_;
};

Cells to_cells(const Graph &g, const OrderedPartition &p)
{
    Cells cells;
    Mask seen = 0;
    for (const auto &cell : p.cells) {
        Mask m = 0;
        for (auto v : cell) {
            g.check_vertex(v);
            if ((seen | m) & bit(v))
                throw ParameterError("partition repeats vertex " + std::to_string(v));
            m |= bit(v);
        }
        if (m != 0)
            cells.push_back(m);
        seen |= m;
    }
    if (std::popcount(seen) != g.order())
        throw ParameterError("partition does not cover every vertex");
    return cells;
}

OrderedPartition from_cells(const Cells &cells)
{
    OrderedPartition p;
    for (auto m : cells) {
        auto &cell = p.cells.emplace_back();
        for (; m != 0; m &= m - 1)
            cell.push_back(lowest(m));
    }
    return p;
}

std::vector<std::vector<Vertex>> orbits_from(int n, const std::vector<Permutation> &gens)
{
    std::vector<std::vector<Vertex>> result;
    Mask done = 0;
    for (int v = 0; v < n; ++v) {
        if (done & bit(v))
            continue;
        auto orbit = orbit_closure(bit(v), gens);
        done |= orbit;
        auto &cell = result.emplace_back();
        for (; orbit != 0; orbit &= orbit - 1)
            cell.push_back(lowest(orbit));
    }
    return result;
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image))
{
    std::vector<bool> hit(image_.size(), false);
    for (auto v : image_) {
        if (v < 0 || v >= size() || hit[v])
            throw ParameterError("permutation image is not a bijection");
        hit[v] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (image_[i] != i)
            return false;
    return true;
}

VertexColoring::VertexColoring(std::vector<int> colors, int labels) : colors_(std::move(colors)), labels_(labels)
{
    for (auto c : colors_)
        if (c < 1 || c > labels_)
            throw ParameterError("colour " + std::to_string(c) + " outside 1.." + std::to_string(labels_));
}

OrderedPartition OrderedPartition::unit(int n)
{
    OrderedPartition p;
    auto &cell = p.cells.emplace_back(n);
    std::iota(cell.begin(), cell.end(), 0);
    return p;
}

OrderedPartition OrderedPartition::from_coloring(const VertexColoring &c)
{
    OrderedPartition p;
    for (int colour = 1; colour <= c.labels(); ++colour) {
        std::vector<Vertex> cell;
        for (int v = 0; v < c.size(); ++v)
            if (c[v] == colour)
                cell.push_back(v);
        if (!cell.empty())
            p.cells.push_back(std::move(cell));
    }
    return p;
}

OrderedPartition refine(const Graph &g, const OrderedPartition &init)
{
    Engine engine(g);
    return from_cells(engine.refine(to_cells(g, init)));
}

bool is_automorphism(const Graph &g, const Permutation &p)
{
    if (p.size() != g.order())
        return false;
    for (int v = 0; v < g.order(); ++v) {
        Mask image = 0;
        for (Mask m = g.neighbour_mask(v); m != 0; m &= m - 1)
            image |= bit(p(lowest(m)));
        if (image != g.neighbour_mask(p(v)))
            return false;
    }
    return true;
}

std::optional<Permutation> find_nontrivial_automorphism(const Graph &g, const OrderedPartition &cells)
{
    Engine engine(g);
    auto init = to_cells(g, cells);
    auto found = engine.nontrivial(engine.refine(init));
    if (found) {
        bool preserves = found->is_identity() == false && is_automorphism(g, *found);
        for (auto m : init)
            for (Mask r = m; r != 0; r &= r - 1)
                preserves = preserves && (m & bit((*found)(lowest(r))));
        if (!preserves)
            throw std::logic_error("automorphism search returned an invalid permutation");
    }
    return found;
}

std::optional<Permutation> find_nontrivial_color_automorphism(const Graph &g, const VertexColoring &c)
{
    if (c.size() != g.order())
        throw ParameterError("colouring does not cover the graph");
    return find_nontrivial_automorphism(g, OrderedPartition::from_coloring(c));
}

AutomorphismGroup automorphism_group(const Graph &g, const OrderedPartition &cells)
{
    Engine engine(g);
    auto found = engine.group(engine.refine(to_cells(g, cells)));
    AutomorphismGroup result;
    result.orbits = orbits_from(g.order(), found.generators);
    result.generators = std::move(found.generators);
    result.order = found.order;
    return result;
}

AutomorphismGroup automorphism_group(const Graph &g) { return automorphism_group(g, OrderedPartition::unit(g.order())); }

std::vector<Permutation> automorphism_generators(const Graph &g) { return automorphism_group(g).generators; }

BigInt group_order(const Graph &g) { return automorphism_group(g).order; }

std::vector<std::vector<Vertex>> orbits(const Graph &g) { return automorphism_group(g).orbits; }

CanonicalKey canonical_form(const Graph &g)
{
    Engine engine(g);
    std::string best;
    engine.canonical(engine.refine({g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1}), best);
    return {std::move(best)};
}

}  // namespace distinguo
