#pragma once

#include "distinguo/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace distinguo {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex bijection; image(i) is the image of vertex i.
class Permutation {
public:
    explicit Permutation(std::vector<Vertex> image);
    static Permutation identity(int n);

    Vertex operator()(Vertex v) const { return image_[v]; }
    int size() const { return static_cast<int>(image_.size()); }
    std::span<const Vertex> image() const { return image_; }
    bool is_identity() const;

    bool operator==(const Permutation &) const = default;

private:
    std::vector<Vertex> image_;
};

/// Labeling V -> {1..labels}.
class VertexColoring {
public:
    VertexColoring(std::vector<int> colors, int labels);
    static VertexColoring uniform(int n) { return VertexColoring(std::vector<int>(n, 1), 1); }

    int operator[](Vertex v) const { return colors_[v]; }
    int size() const { return static_cast<int>(colors_.size()); }
    int labels() const { return labels_; }
    std::span<const int> colors() const { return colors_; }

    bool operator==(const VertexColoring &) const = default;

private:
    std::vector<int> colors_;
    int labels_;
};

struct OrderedPartition {
    std::vector<std::vector<Vertex>> cells;

    static OrderedPartition unit(int n);
    /// Cells ordered by colour value.
    static OrderedPartition from_coloring(const VertexColoring &c);
    bool is_discrete(int n) const { return static_cast<int>(cells.size()) == n; }
    bool operator==(const OrderedPartition &) const = default;
};

/// graph6 text of a canonically relabeled copy; equal exactly for isomorphic graphs.
struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey &) const = default;
};

struct AutomorphismGroup {
    std::vector<Permutation> generators;
    BigInt order = 1;
    std::vector<std::vector<Vertex>> orbits;
};

/// Coarsest equitable refinement. Cells split in place, sub-cells ordered by neighbour count into the splitting cell.
OrderedPartition refine(const Graph &g, const OrderedPartition &init);

bool is_automorphism(const Graph &g, const Permutation &p);

/// Some non-identity automorphism preserving every colour, or nothing when the colour stabiliser is trivial.
std::optional<Permutation> find_nontrivial_color_automorphism(const Graph &g, const VertexColoring &c);
std::optional<Permutation> find_nontrivial_automorphism(const Graph &g, const OrderedPartition &cells);

/// Generators, exact order and orbits of the automorphisms preserving `cells` (every automorphism when omitted).
AutomorphismGroup automorphism_group(const Graph &g, const OrderedPartition &cells);
AutomorphismGroup automorphism_group(const Graph &g);

std::vector<Permutation> automorphism_generators(const Graph &g);
BigInt group_order(const Graph &g);
std::vector<std::vector<Vertex>> orbits(const Graph &g);

CanonicalKey canonical_form(const Graph &g);

}  // namespace distinguo
