#pragma once

#include "distinguo/graph.hpp"

#include <vector>

namespace distinguo {

/// One graph per isomorphism class of order n (each given in its canonical labeling), sorted by canonical graph6.
/// Built by extending every class of order n-1 with a new vertex in all possible ways.
std::vector<Graph> all_graphs(int n, bool connected_only = false);

/// Classes of every order in min_n..max_n, ordered by order and then canonical graph6.
std::vector<Graph> all_graphs_between(int min_n, int max_n, bool connected_only = false);

}  // namespace distinguo
