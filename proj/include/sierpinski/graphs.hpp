#pragma once

// Generalized Sierpinski graphs S(n,m), their triangle quotients S[n,m]
// (the gasket graphs for m = 3), and Hamming graphs K_m^n (hypercubes for
// m = 2). Vertices are packed word codes; see words.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/words.hpp"

namespace sierpinski {

struct Graph {
  std::string family;  // "sierpinski", "quotient", "hamming"
  int n = 0;
  int m = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted, symmetric
  std::vector<std::string> names;               // one label per vertex

  std::size_t num_vertices() const { return adj.size(); }
  std::size_t num_edges() const;
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  // Edges as sorted (u, v) pairs with u < v, in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

// Closed-form structure counts (64-bit checked).
std::uint64_t sierpinski_vertex_count(int n, int m);
std::uint64_t sierpinski_edge_count(int n, int m);
std::uint64_t quotient_vertex_count(int n, int m);
std::uint64_t quotient_edge_count(int n, int m);
std::uint64_t hamming_vertex_count(int n, int m);
std::uint64_t hamming_edge_count(int n, int m);

// In S(n,m), words u ~ v iff for some position h they share the prefix
// before h, differ at h, and after h each repeats the other's digit at h.
// Equivalently: they differ only in the last digit (edges inside the K_m
// cliques), or one is the other's exterior partner.
bool sierpinski_adjacent(const WordSpace& ws, Code u, Code v);

// A corner is a constant word i^n; corners have degree m-1, everything else
// has degree m.
bool is_corner(const WordSpace& ws, Code v);

// The exterior partner of a non-corner v: with v = p a c^r (a != c, maximal
// constant tail c^r), the partner is p c a^r. An involution on non-corners.
std::optional<Code> exterior_partner(const WordSpace& ws, Code v);

std::vector<Code> sierpinski_neighbors(const WordSpace& ws, Code v);

// The m^(n-1) disjoint K_m cliques: words agreeing except in the last digit.
// Returned as the list of base codes; clique k is {base, ..., base + m - 1}.
std::vector<Code> clique_bases(const WordSpace& ws);

// Coordinates y(v) in Z^m: y_j = sum of 2^(n-p) over positions p with
// v_p = j (position 1 is the most significant digit). The coordinate sum is
// 2^n - 1 for every word, and u ~ v in S(n,m) iff ||y(u) - y(v)||^2 = 2.
std::vector<std::uint64_t> embed(const WordSpace& ws, Code v);

Graph sierpinski_graph(int n, int m);

// Contracts every edge of S(n,m) that lies in no triangle; for m >= 3 those
// are exactly the exterior edges, so the classes are the pairs
// {v, exterior_partner(v)} plus the m corner singletons. Vertices are named
// by their lexicographically least member. m = 2 has no triangles and is
// rejected. For m = 3 this is the Sierpinski gasket graph with (3^n + 3)/2
// vertices.
struct QuotientGraph {
  Graph g;
  std::vector<std::vector<Code>> members;  // class index -> member codes, sorted
  std::vector<std::uint32_t> class_of;     // word code -> class index
};
QuotientGraph quotient_graph(int n, int m);

Graph hamming_graph(int n, int m);  // u ~ v iff they differ in exactly one position

// Plain text edge list: a `# family=... n=... m=...` header, then one
// `name1 name2` line per edge in lexicographic order.
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace sierpinski
