#include "distinguo/graph6.hpp"

#include <istream>
#include <sstream>

namespace distinguo {

namespace {

constexpr int kMaxGraph6Order = 62;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t bit_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

std::string to_graph6(const Graph &g)
{
    auto n = g.order();
    if (n > kMaxGraph6Order)
        throw ParameterError("graph6 output supports at most 62 vertices");
    std::string out;
    out.reserve(1 + (bit_count(n) + 5) / 6);
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled != 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty string");
    for (auto c : text)
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside 63..126");
    int n = text[0] - 63;
    if (n > kMaxGraph6Order)
        throw ParseError("graph6: orders above 62 are not supported");
    if (n < 1)
        throw ParseError("graph6: order must be at least 1");
    auto expected = 1 + (bit_count(n) + 5) / 6;
    if (text.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) + ", got " +
                         std::to_string(text.size()));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int group = text[1 + k / 6] - 63;
            if ((group >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    return g;
}

std::string to_edge_list(const Graph &g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph from_edge_list(std::istream &in)
{
    int n = 0;
    int m = 0;
    if (!(in >> n >> m))
        throw ParseError("edge list: missing 'n m' header");
    if (n < 1 || n > Graph::kMaxOrder || m < 0)
        throw ParseError("edge list: bad header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v));
        if (g.adjacent(u, v))
            throw ParseError("edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

std::vector<Graph> read_graph6_catalog(std::istream &in)
{
    std::vector<Graph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            graphs.push_back(from_graph6(line));
        }
        catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return graphs;
}

}  // namespace distinguo
