#pragma once

#include "distinguo/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace distinguo {

enum class Family { path, cycle, complete, complete_bipartite, star, book, friendship, matching_union, empty };

/// A named graph family with its integer parameters (n, or p and q for complete_bipartite).
///
/// Vertex numbering of make_family:
///  - path(n): 0-1-...-(n-1); cycle(n) adds (n-1)-0.
///  - complete_bipartite(p, q): side of size p is 0..p-1, the other side p..p+q-1.
///  - star(n): K_{1,n} with centre 0.
///  - book(n): 0 and 1 are the common spine; page t (1..n) is 2t adjacent to 0 and 2t+1 adjacent to 1.
///  - friendship(n): 0 is the centre; triangle t (1..n) is 0, 2t-1, 2t.
///  - matching_union(n): edges {2i, 2i+1}.
struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;

    static FamilySpec path(int n) { return {Family::path, {n}}; }
    static FamilySpec cycle(int n) { return {Family::cycle, {n}}; }
    static FamilySpec complete(int n) { return {Family::complete, {n}}; }
    static FamilySpec complete_bipartite(int p, int q) { return {Family::complete_bipartite, {p, q}}; }
    static FamilySpec star(int n) { return {Family::star, {n}}; }
    static FamilySpec book(int n) { return {Family::book, {n}}; }
    static FamilySpec friendship(int n) { return {Family::friendship, {n}}; }
    static FamilySpec matching_union(int n) { return {Family::matching_union, {n}}; }
    static FamilySpec empty(int n) { return {Family::empty, {n}}; }

    int n() const { return params.at(0); }
    int q() const { return params.at(1); }

    /// Throws ParameterError when the parameters are outside the family's range.
    void validate() const;

    std::string to_string() const;
};

std::string_view family_name(Family f);
/// Throws ParameterError on an unknown name.
Family parse_family(std::string_view name);

Graph make_family(const FamilySpec &spec);

}  // namespace distinguo
