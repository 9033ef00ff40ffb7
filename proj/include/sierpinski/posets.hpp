#pragma once

// The stabilization order on the words of S(n,m): v goes up to (i j)v, for
// any digit pair i < j, exactly when the first digit of v lying in {i, j}
// is i. Components, Hasse covers, ideals, the quotient-graph version, and
// the weighted network of ideals live here.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sierpinski/graphs.hpp"
#include "sierpinski/words.hpp"

namespace sierpinski {

struct BudgetExceeded : std::runtime_error {
  std::uint64_t partial;
  explicit BudgetExceeded(std::uint64_t partial_)
      : std::runtime_error("enumeration budget exceeded"), partial(partial_) {}
};

// True when swapping digits i and j moves v upward (or fixes it): the first
// digit of v in {i, j} is i, or neither digit occurs.
bool chamber_side(const WordSpace& ws, Code v, int i, int j);

// y_0(v) >= y_1(v) >= ... >= y_(m-1)(v) under embed().
bool in_fundamental_chamber(const WordSpace& ws, Code v);

struct StabMove {
  Code to;
  int i, j;
};
std::vector<StabMove> stab_up_moves(const WordSpace& ws, Code v);

// A finite poset with Hasse covers labeled by the producing transposition.
struct Poset {
  int size = 0;
  std::vector<std::vector<char>> le;  // le[u][v] = (u <= v)
  struct Cover {
    int from, to, i, j;
  };
  std::vector<Cover> covers;
};

// Reflexive-transitive closure of labeled moves; covers by transitive
// reduction (each cover is realized by a direct move, which names it).
Poset close_moves(int n_elems, const std::vector<Poset::Cover>& moves);

// Components of the stabilization order: classes of words sharing the same
// partition of positions by digit equality. Sorted by least member.
std::vector<std::vector<Code>> stab_components(const WordSpace& ws);

// Sum over k <= m of the Stirling numbers of the second kind S(n,k); equals
// the number of components.
std::uint64_t stirling2(int n, int k);
std::uint64_t stirling_component_count(int n, int m);

struct StabComponent {
  std::vector<Code> elems;  // sorted ascending
  Code minimum;             // the unique minimal element
  Poset poset;              // on local indices into elems
};
StabComponent build_stab_component(const WordSpace& ws, std::vector<Code> elems);

// All down-closed subsets as bitmasks over local indices (size <= 64),
// ordered by cardinality, then lexicographic member list. Throws
// BudgetExceeded(cap) when more than cap ideals exist.
std::vector<std::uint64_t> enumerate_ideals(const Poset& p, std::uint64_t cap);

// Ideal count of the full stabilization order: the product over components.
std::uint64_t count_stab_ideals(const WordSpace& ws, std::uint64_t cap);

// Every down-closed set of the full order, as vertex masks (m^n <= 64):
// the componentwise products of component ideals. These are exactly the
// sets fixed by every stabilization. Ordered by (size, member list).
std::vector<std::uint64_t> stable_sets(const WordSpace& ws, std::uint64_t cap);

// The stabilization order induced on quotient classes: a transposition maps
// classes to classes (it commutes with the exterior involution), and the
// direction of a class move is the common direction of its members, which
// is checked. Elements are indexed as in QuotientGraph.
struct QuotientStabOrder {
  QuotientGraph quotient;
  Poset poset;
};
QuotientStabOrder build_quotient_stab_order(int n, int m);

struct DerivedNetwork {
  std::vector<std::uint64_t> nodes;    // ideal masks over graph vertices
  std::vector<std::uint64_t> weights;  // boundary of each ideal in the graph
  std::vector<std::pair<int, int>> arcs;  // (smaller, larger), one-element steps
};
DerivedNetwork derived_network(const std::vector<std::uint64_t>& ideals, const Graph& g);

// Greedy minimum-weight monotone path from the empty set to the full set;
// ties broken toward the earlier node. Returns node indices by level.
std::vector<int> sequentially_optimal_path(const DerivedNetwork& net);

std::string hasse_dot(const Poset& p, const std::vector<std::string>& labels);
std::string derived_network_dot(const DerivedNetwork& net, const Graph& g);
std::string components_json(const WordSpace& ws);

}  // namespace sierpinski
