#pragma once

#include "distinguo/aut.hpp"
#include "distinguo/cache.hpp"
#include "distinguo/families.hpp"
#include "distinguo/graph.hpp"

#include <chrono>
#include <cstdint>

namespace distinguo {

struct DistSearchOptions {
    /// Colour j+1 may only appear after colour j has; colourings with fewer than d colours are skipped at level d.
    bool first_occurrence = true;
    /// Abandon a partial colouring once some non-identity automorphism preserves it while fixing every uncoloured
    /// vertex, since no completion can break that automorphism.
    bool prune_partial = true;
};

struct DistResult {
    int value = 1;
    VertexColoring witness = VertexColoring::uniform(1);
    std::uint64_t colorings_tested = 0;
    std::chrono::nanoseconds elapsed{0};
};

bool is_distinguishing(const Graph &g, const VertexColoring &c);

/// Exact D(G). The witness is the first distinguishing colouring in lexicographic vertex order.
DistResult compute_D(const Graph &g, DistSearchOptions options = {});

int compute_D_cached(const Graph &g, DCache &cache);

/// Closed-form D for the families where one is known; ParameterError outside those ranges.
int formula_D(const FamilySpec &spec);

/// floor(sqrt(x)) for x >= 0, exact.
std::int64_t isqrt(std::int64_t x);
bool is_square(std::int64_t x);
/// Smallest d with d(d-1)/2 >= n, i.e. ceil((1 + sqrt(8n+1)) / 2).
int pair_labels_needed(std::int64_t n);

}  // namespace distinguo
