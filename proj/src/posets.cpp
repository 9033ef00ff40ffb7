#include "sierpinski/posets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sierpinski/eip.hpp"

namespace sierpinski {

bool chamber_side(const WordSpace& ws, Code v, int i, int j) {
  int pos = ws.first_of_pair(v, i, j);
  return pos == 0 || ws.digit(v, pos) == i;
}

bool in_fundamental_chamber(const WordSpace& ws, Code v) {
  auto y = embed(ws, v);
  for (int d = 0; d + 1 < ws.m; ++d)
    if (y[d] < y[d + 1]) return false;
  return true;
}

std::vector<StabMove> stab_up_moves(const WordSpace& ws, Code v) {
  std::vector<StabMove> moves;
  for (int i = 0; i < ws.m; ++i) {
    for (int j = i + 1; j < ws.m; ++j) {
      if (!chamber_side(ws, v, i, j)) continue;
      Code w = ws.transpose(v, i, j);
      if (w != v) moves.push_back({w, i, j});
    }
  }
  return moves;
}

Poset close_moves(int n_elems, const std::vector<Poset::Cover>& moves) {
  Poset p;
  p.size = n_elems;
  p.le.assign(n_elems, std::vector<char>(n_elems, 0));
  std::vector<std::vector<int>> out(n_elems);
  for (const auto& mv : moves) out[mv.from].push_back(mv.to);
  for (int u = 0; u < n_elems; ++u) {
    // DFS for the up-set of u.
    std::vector<int> stack = {u};
    p.le[u][u] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out[x])
        if (!p.le[u][y]) {
          p.le[u][y] = 1;
          stack.push_back(y);
        }
    }
  }
  for (const auto& mv : moves) {
    bool cover = true;
    for (int w = 0; w < n_elems && cover; ++w)
      if (w != mv.from && w != mv.to && p.le[mv.from][w] && p.le[w][mv.to]) cover = false;
    if (cover) p.covers.push_back(mv);
  }
  std::sort(p.covers.begin(), p.covers.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.i, a.j) < std::tie(b.from, b.to, b.i, b.j);
  });
  return p;
}

std::vector<std::vector<Code>> stab_components(const WordSpace& ws) {
  // Position partition signature: relabel digits by first occurrence.
  std::map<std::vector<int>, std::vector<Code>> groups;
  for (Code v = 0; v < ws.size(); ++v) {
    std::vector<int> sig(ws.n), seen(ws.m, -1);
    int next = 0;
    for (int pos = 1; pos <= ws.n; ++pos) {
      int d = ws.digit(v, pos);
      if (seen[d] < 0) seen[d] = next++;
      sig[pos - 1] = seen[d];
    }
    groups[sig].push_back(v);
  }
  std::vector<std::vector<Code>> comps;
  for (auto& [sig, elems] : groups) {
    (void)sig;
    std::sort(elems.begin(), elems.end());
    comps.push_back(std::move(elems));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::uint64_t stirling2(int n, int k) {
  if (k < 0 || k > n) return n == 0 && k == 0;
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j)
      s[i][j] = s[i - 1][j - 1] + static_cast<std::uint64_t>(j) * s[i - 1][j];
  return s[n][k];
}

std::uint64_t stirling_component_count(int n, int m) {
  std::uint64_t total = 0;
  for (int k = 1; k <= m; ++k) total += stirling2(n, k);
  return total;
}

StabComponent build_stab_component(const WordSpace& ws, std::vector<Code> elems) {
  std::sort(elems.begin(), elems.end());
  StabComponent comp;
  comp.elems = std::move(elems);
  std::map<Code, int> index;
  for (int k = 0; k < static_cast<int>(comp.elems.size()); ++k) index[comp.elems[k]] = k;
  std::vector<Poset::Cover> moves;
  for (int k = 0; k < static_cast<int>(comp.elems.size()); ++k)
    for (const auto& mv : stab_up_moves(ws, comp.elems[k]))
      moves.push_back({k, index.at(mv.to), mv.i, mv.j});
  comp.poset = close_moves(static_cast<int>(comp.elems.size()), moves);

  int min_count = 0;
  for (int k = 0; k < comp.poset.size; ++k) {
    bool minimal = true;
    for (int u = 0; u < comp.poset.size && minimal; ++u)
      if (u != k && comp.poset.le[u][k]) minimal = false;
    if (minimal) {
      comp.minimum = comp.elems[k];
      ++min_count;
    }
  }
  if (min_count != 1) throw std::logic_error("component without a unique minimum");
  return comp;
}

namespace {

// Ordered by cardinality, then lexicographic sorted member list (so the
// ideal whose smallest element is smaller comes first).
bool ideal_order(std::uint64_t a, std::uint64_t b) {
  int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
  if (pa != pb) return pa < pb;
  while (a && b) {
    int ea = __builtin_ctzll(a), eb = __builtin_ctzll(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Recursive include/exclude scan along a linear extension; an element may be
// included only when all its predecessors are in.
void ideal_rec(const Poset& p, const std::vector<int>& topo, std::size_t idx,
               std::uint64_t mask, std::vector<std::uint64_t>& out, std::uint64_t cap) {
  if (idx == topo.size()) {
    if (out.size() >= cap) throw BudgetExceeded(out.size());
    out.push_back(mask);
    return;
  }
  int e = topo[idx];
  ideal_rec(p, topo, idx + 1, mask, out, cap);
  for (int u = 0; u < p.size; ++u)
    if (u != e && p.le[u][e] && !(mask >> u & 1)) return;
  ideal_rec(p, topo, idx + 1, mask | (std::uint64_t{1} << e), out, cap);
}

}  // namespace

std::vector<std::uint64_t> enumerate_ideals(const Poset& p, std::uint64_t cap) {
  if (p.size > 64) throw std::invalid_argument("poset too large for mask ideals");
  std::vector<int> topo(p.size);
  for (int k = 0; k < p.size; ++k) topo[k] = k;
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
    int ra = 0, rb = 0;
    for (int u = 0; u < p.size; ++u) {
      ra += (u != a && p.le[u][a]);
      rb += (u != b && p.le[u][b]);
    }
    return ra < rb;
  });
  std::vector<std::uint64_t> out;
  ideal_rec(p, topo, 0, 0, out, cap);
  std::sort(out.begin(), out.end(), ideal_order);
  return out;
}

std::uint64_t count_stab_ideals(const WordSpace& ws, std::uint64_t cap) {
  std::uint64_t product = 1;
  for (auto& elems : stab_components(ws)) {
    auto comp = build_stab_component(ws, elems);
    std::uint64_t c = enumerate_ideals(comp.poset, cap).size();
    if (product > cap / c) throw BudgetExceeded(product);
    product *= c;
  }
  return product;
}

std::vector<std::uint64_t> stable_sets(const WordSpace& ws, std::uint64_t cap) {
  if (ws.size() > 64) throw std::invalid_argument("vertex masks need m^n <= 64");
  count_stab_ideals(ws, cap);
  std::vector<std::uint64_t> sets = {0};
  for (auto& elems : stab_components(ws)) {
    auto comp = build_stab_component(ws, elems);
    auto local = enumerate_ideals(comp.poset, cap);
    std::vector<std::uint64_t> vertex_masks;
    vertex_masks.reserve(local.size());
    for (std::uint64_t ideal : local) {
      std::uint64_t mask = 0;
      for (int k = 0; k < comp.poset.size; ++k)
        if (ideal >> k & 1) mask |= std::uint64_t{1} << comp.elems[k];
      vertex_masks.push_back(mask);
    }
    std::vector<std::uint64_t> next;
    next.reserve(sets.size() * vertex_masks.size());
    for (std::uint64_t base : sets)
      for (std::uint64_t add : vertex_masks) next.push_back(base | add);
    sets = std::move(next);
  }
  std::sort(sets.begin(), sets.end(), ideal_order);
  return sets;
}

QuotientStabOrder build_quotient_stab_order(int n, int m) {
  QuotientStabOrder order;
  order.quotient = quotient_graph(n, m);
  WordSpace ws(n, m);
  const auto& q = order.quotient;
  int N = static_cast<int>(q.g.num_vertices());
  std::vector<Poset::Cover> moves;
  for (int k = 0; k < N; ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        int image = -1, direction = 0;  // +1 up, -1 down
        for (Code w : q.members[k]) {
          Code wi = ws.transpose(w, i, j);
          int ci = q.class_of[wi];
          if (ci == k) continue;
          int dir = chamber_side(ws, w, i, j) ? +1 : -1;
          if (image == -1) {
            image = ci;
            direction = dir;
          } else if (image != ci || direction != dir) {
            throw std::logic_error("transposition acts inconsistently on a class");
          }
        }
        if (image >= 0 && direction > 0) moves.push_back({k, image, i, j});
      }
    }
  }
  order.poset = close_moves(N, moves);
  return order;
}

DerivedNetwork derived_network(const std::vector<std::uint64_t>& ideals, const Graph& g) {
  DerivedNetwork net;
  net.nodes = ideals;
  std::sort(net.nodes.begin(), net.nodes.end(), ideal_order);
  std::size_t V = g.num_vertices();
  net.weights.reserve(net.nodes.size());
  for (std::uint64_t mask : net.nodes) {
    std::vector<char> in(V, 0);
    for (std::size_t v = 0; v < V; ++v) in[v] = (mask >> v) & 1;
    net.weights.push_back(cut_edges(g, in));
  }
  std::map<std::uint64_t, int> index;
  for (int k = 0; k < static_cast<int>(net.nodes.size()); ++k) index[net.nodes[k]] = k;
  for (int k = 0; k < static_cast<int>(net.nodes.size()); ++k) {
    std::uint64_t mask = net.nodes[k];
    for (std::size_t v = 0; v < V; ++v) {
      if ((mask >> v) & 1) continue;
      auto it = index.find(mask | (std::uint64_t{1} << v));
      if (it != index.end()) net.arcs.emplace_back(k, it->second);
    }
  }
  std::sort(net.arcs.begin(), net.arcs.end());
  return net;
}

std::vector<int> sequentially_optimal_path(const DerivedNetwork& net) {
  std::vector<std::vector<int>> succ(net.nodes.size());
  for (auto [a, b] : net.arcs) succ[a].push_back(b);
  int cur = 0;  // ideals are sorted, so index 0 is the empty set
  std::vector<int> path = {cur};
  while (!succ[cur].empty()) {
    int best = -1;
    for (int nxt : succ[cur])
      if (best < 0 || net.weights[nxt] < net.weights[best]) best = nxt;
    cur = best;
    path.push_back(cur);
  }
  return path;
}

std::string hasse_dot(const Poset& p, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int k = 0; k < p.size; ++k)
    out << "  v" << k << " [label=\"" << labels[k] << "\"];\n";
  for (const auto& c : p.covers)
    out << "  v" << c.from << " -> v" << c.to << " [label=\"(" << c.i << " " << c.j
        << ")\"];\n";
  out << "}\n";
  return out.str();
}

std::string derived_network_dot(const DerivedNetwork& net, const Graph& g) {
  std::ostringstream out;
  out << "digraph derived {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < net.nodes.size(); ++k) {
    std::uint64_t mask = net.nodes[k];
    out << "  n" << k << " [label=\"size=" << __builtin_popcountll(mask)
        << " weight=" << net.weights[k] << "\"];\n";
  }
  (void)g;
  for (auto [a, b] : net.arcs) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string components_json(const WordSpace& ws) {
  std::ostringstream out;
  out << "{\n  \"n\": " << ws.n << ",\n  \"m\": " << ws.m << ",\n  \"components\": [\n";
  auto comps = stab_components(ws);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    auto comp = build_stab_component(ws, comps[k]);
    out << "    {\"minimum\": \"" << ws.str(comp.minimum) << "\", \"size\": "
        << comp.elems.size() << ", \"ideals\": ";
    if (comp.elems.size() <= 32) {
      try {
        out << enumerate_ideals(comp.poset, std::uint64_t{1} << 24).size();
      } catch (const BudgetExceeded&) {
        out << "null";
      }
    } else {
      out << "null";
    }
    out << ", \"elements\": [";
    for (std::size_t e = 0; e < comp.elems.size(); ++e)
      out << (e ? ", " : "") << "\"" << ws.str(comp.elems[e]) << "\"";
    out << "]}" << (k + 1 < comps.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace sierpinski
