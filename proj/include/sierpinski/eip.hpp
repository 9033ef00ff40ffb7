#pragma once

// Edge-isoperimetric quantities: boundary counts, decorated boundaries,
// lexicographic profiles, and the two closed evaluations of the Lex profile
// of S(n,m) (a recursion for m = 3 and a per-level formula for general m).

#include <cstdint>
#include <string>
#include <vector>

#include "sierpinski/graphs.hpp"

namespace sierpinski {

// Decoration of S(n,m): corners i^n for i in I = {0..s-1} get a pendant edge
// whose far end is always inside the set, corners for i in K = {s+t..m-1}
// one whose far end is always outside; J = {s..s+t-1} corners are bare.
// s = 0, t = m is the undecorated graph.
struct Decoration {
  int s = 0;
  int t = 0;
  bool in_I(int i) const { return i < s; }
  bool in_J(int i) const { return i >= s && i < s + t; }
  bool in_K(int i) const { return i >= s + t; }
};

Decoration plain_decoration(int m);
std::vector<Decoration> all_decorations(int m);  // s,t >= 0, s+t <= m; (m+1)(m+2)/2 of them

Code corner_code(const WordSpace& ws, int i);  // the constant word i^n

// Number of edges with exactly one endpoint in the set.
std::uint64_t cut_edges(const Graph& g, const std::vector<char>& in_set);

// cut_edges plus the decoration terms: +1 per I-corner outside the set and
// +1 per K-corner inside it. `g` must be a sierpinski-family graph.
std::uint64_t decorated_boundary(const Graph& g, const Decoration& dec,
                                 const std::vector<char>& in_set);

std::vector<char> lex_segment(std::size_t num_vertices, std::uint64_t ell);

// Boundary of every initial segment of the vertex numbering, computed
// incrementally: profile[ell] for ell = 0..|V|.
std::vector<std::uint64_t> lex_profile(const Graph& g);
std::vector<std::uint64_t> decorated_lex_profile(const Graph& g, const Decoration& dec);

// The split of the m = 3 Lex profile into the top-level copy-to-copy part
// and the within-copy part, and the recursion they satisfy:
//   theta_top(n,ell)  = 0 at ell = 0 or 3^n; 1 below 3^(n-1)/2 of either end;
//                       2 in the middle band,
//   theta_sub(n,ell)  = 0 if ell is a multiple of 3^(n-1), else
//                       profile(n-1, ell mod 3^(n-1)) - 1,
// and profile(n) = theta_top(n) + theta_sub(n) with profile(1,ell) = ell(3-ell).
std::uint64_t theta_top_m3(int n, std::uint64_t ell);
std::uint64_t theta_sub_m3(int n, std::uint64_t ell);
std::vector<std::uint64_t> profile_recursive_m3(int n);  // size 3^n + 1

// Per-level evaluation of the Lex profile of S(n,m) at one cardinality.
// With d_1..d_n the base-m digits of ell-1 and, per level h,
// lp = #{ j in [0,m) : j^(n-h) <=_Lex (d_(h+1),...,d_n) }, the level
// contributes d_h(m - d_h) - min(lp, d_h) + max(0, lp - d_h - 1): complete
// copies cut d_h(m - d_h) level-h edges, corners of the partial copy cover
// min(lp, d_h) of them and cut max(0, lp - d_h - 1) new ones.
std::uint64_t profile_closed_form(int n, int m, std::uint64_t ell);

// CSV with header "ell,theta" (or "ell,theta,theta0,theta1" when the m = 3
// split is included), one row per cardinality, \n line endings.
std::string profile_csv(const std::vector<std::uint64_t>& profile);
std::string profile_csv_m3(int n);

}  // namespace sierpinski
