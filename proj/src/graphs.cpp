#include "sierpinski/graphs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sierpinski {

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t u = 0; u < adj.size(); ++u)
    for (std::uint32_t v : adj[u])
      if (u < v) es.emplace_back(u, v);
  return es;
}

std::uint64_t sierpinski_vertex_count(int n, int m) { return pow_checked(m, n); }

std::uint64_t sierpinski_edge_count(int n, int m) {
  return (pow_checked(m, n + 1) - m) / 2;
}

std::uint64_t quotient_vertex_count(int n, int m) {
  return (pow_checked(m, n) + m) / 2;
}

std::uint64_t quotient_edge_count(int n, int m) {
  // Interior edges survive contraction one-to-one: m^(n-1) cliques, C(m,2) each.
  return pow_checked(m, n - 1) * m * (m - 1) / 2;
}

std::uint64_t hamming_vertex_count(int n, int m) { return pow_checked(m, n); }

std::uint64_t hamming_edge_count(int n, int m) {
  return pow_checked(m, n) * n * (m - 1) / 2;
}

bool is_corner(const WordSpace& ws, Code v) {
  int d = ws.digit(v, 1);
  for (int pos = 2; pos <= ws.n; ++pos)
    if (ws.digit(v, pos) != d) return false;
  return true;
}

std::optional<Code> exterior_partner(const WordSpace& ws, Code v) {
  int n = ws.n;
  int c = ws.digit(v, n);
  int h = n - 1;
  while (h >= 1 && ws.digit(v, h) == c) --h;
  if (h == 0) return std::nullopt;  // constant word
  int a = ws.digit(v, h);
  Code u = ws.with_digit(v, h, c);
  for (int pos = h + 1; pos <= n; ++pos) u = ws.with_digit(u, pos, a);
  return u;
}

bool sierpinski_adjacent(const WordSpace& ws, Code u, Code v) {
  if (u == v) return false;
  if (u / static_cast<Code>(ws.m) == v / static_cast<Code>(ws.m)) return true;
  auto p = exterior_partner(ws, v);
  return p && *p == u;
}

std::vector<Code> sierpinski_neighbors(const WordSpace& ws, Code v) {
  std::vector<Code> nb;
  Code base = v / ws.m * ws.m;
  for (Code u = base; u < base + static_cast<Code>(ws.m); ++u)
    if (u != v) nb.push_back(u);
  if (auto p = exterior_partner(ws, v)) nb.push_back(*p);
  std::sort(nb.begin(), nb.end());
  return nb;
}

std::vector<Code> clique_bases(const WordSpace& ws) {
  std::vector<Code> bases;
  std::uint64_t count = ws.size() / ws.m;
  bases.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k)
    bases.push_back(static_cast<Code>(k * ws.m));
  return bases;
}

std::vector<std::uint64_t> embed(const WordSpace& ws, Code v) {
  std::vector<std::uint64_t> y(ws.m, 0);
  for (int pos = 1; pos <= ws.n; ++pos)
    y[ws.digit(v, pos)] += std::uint64_t{1} << (ws.n - pos);
  return y;
}

Graph sierpinski_graph(int n, int m) {
  if (n < 1 || m < 2) throw std::invalid_argument("S(n,m) requires n >= 1, m >= 2");
  WordSpace ws(n, m);
  Graph g;
  g.family = "sierpinski";
  g.n = n;
  g.m = m;
  std::uint64_t N = ws.size();
  g.adj.resize(N);
  g.names.resize(N);
  for (Code v = 0; v < N; ++v) {
    auto nb = sierpinski_neighbors(ws, v);
    g.adj[v].assign(nb.begin(), nb.end());
    g.names[v] = ws.str(v);
  }
  return g;
}

QuotientGraph quotient_graph(int n, int m) {
  if (m < 3) throw std::invalid_argument("the quotient needs triangles: m >= 3");
  if (n < 1) throw std::invalid_argument("quotient requires n >= 1");
  WordSpace ws(n, m);
  std::uint64_t N = ws.size();

  QuotientGraph q;
  q.class_of.assign(N, 0);
  std::vector<Code> reps;
  for (Code v = 0; v < N; ++v) {
    auto p = exterior_partner(ws, v);
    Code rep = p ? std::min(v, *p) : v;
    if (rep == v) reps.push_back(v);
  }
  std::sort(reps.begin(), reps.end());
  q.members.resize(reps.size());
  for (std::uint32_t k = 0; k < reps.size(); ++k) {
    Code v = reps[k];
    q.members[k] = {v};
    if (auto p = exterior_partner(ws, v)) q.members[k].push_back(*p);
    for (Code w : q.members[k]) q.class_of[w] = k;
  }

  Graph& g = q.g;
  g.family = "quotient";
  g.n = n;
  g.m = m;
  g.adj.resize(reps.size());
  g.names.resize(reps.size());
  for (std::uint32_t k = 0; k < reps.size(); ++k) g.names[k] = ws.str(reps[k]);

  // Only interior edges (within the K_m cliques) survive; check that no two
  // of them collapse onto the same class pair and none becomes a loop.
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen;
  for (Code base : clique_bases(ws)) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        std::uint32_t ca = q.class_of[base + a];
        std::uint32_t cb = q.class_of[base + b];
        if (ca == cb)
          throw std::logic_error("quotient produced a loop edge");
        auto key = std::minmax(ca, cb);
        if (++seen[{key.first, key.second}] > 1)
          throw std::logic_error("quotient produced a parallel edge");
      }
    }
  }
  for (const auto& [e, cnt] : seen) {
    (void)cnt;
    g.adj[e.first].push_back(e.second);
    g.adj[e.second].push_back(e.first);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return q;
}

Graph hamming_graph(int n, int m) {
  if (n < 1 || m < 2) throw std::invalid_argument("K_m^n requires n >= 1, m >= 2");
  WordSpace ws(n, m);
  Graph g;
  g.family = "hamming";
  g.n = n;
  g.m = m;
  std::uint64_t N = ws.size();
  g.adj.resize(N);
  g.names.resize(N);
  for (Code v = 0; v < N; ++v) {
    g.names[v] = ws.str(v);
    for (int pos = 1; pos <= n; ++pos) {
      int d = ws.digit(v, pos);
      for (int e = 0; e < m; ++e)
        if (e != d) g.adj[v].push_back(ws.with_digit(v, pos, e));
    }
    std::sort(g.adj[v].begin(), g.adj[v].end());
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# family=" << g.family << " n=" << g.n << " m=" << g.m << "\n";
  for (auto [u, v] : g.edges()) out << g.names[u] << " " << g.names[v] << "\n";
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.family << " {\n";
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    out << "  v" << v << " [label=\"" << g.names[v] << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sierpinski
