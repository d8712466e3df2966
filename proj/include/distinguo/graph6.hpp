#pragma once

#include "distinguo/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distinguo {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 encoding for orders 1..62, without a trailing newline.
std::string to_graph6(const Graph &g);

/// Accepts an optional ">>graph6<<" prefix and trailing CR/LF.
Graph from_graph6(std::string_view text);

/// Edge-list text: "n m" followed by m lines "u v", 0-based.
std::string to_edge_list(const Graph &g);
Graph from_edge_list(std::istream &in);

/// Reads every non-blank line of a graph6 catalog. Malformed lines raise ParseError naming the line number.
std::vector<Graph> read_graph6_catalog(std::istream &in);

}  // namespace distinguo
