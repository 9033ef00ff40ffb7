#include "sierpinski/eip.hpp"

#include <sstream>
#include <stdexcept>

namespace sierpinski {

Decoration plain_decoration(int m) { return Decoration{0, m}; }

std::vector<Decoration> all_decorations(int m) {
  std::vector<Decoration> ds;
  for (int s = 0; s <= m; ++s)
    for (int t = 0; s + t <= m; ++t) ds.push_back(Decoration{s, t});
  return ds;
}

Code corner_code(const WordSpace& ws, int i) {
  return static_cast<Code>(static_cast<std::uint64_t>(i) * (ws.size() - 1) /
                           (ws.m - 1));
}

std::uint64_t cut_edges(const Graph& g, const std::vector<char>& in_set) {
  std::uint64_t cut = 0;
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u)
    for (std::uint32_t v : g.adj[u])
      if (u < v && in_set[u] != in_set[v]) ++cut;
  return cut;
}

std::uint64_t decorated_boundary(const Graph& g, const Decoration& dec,
                                 const std::vector<char>& in_set) {
  if (g.family != "sierpinski")
    throw std::invalid_argument("decorations apply to sierpinski graphs");
  std::uint64_t b = cut_edges(g, in_set);
  WordSpace ws(g.n, g.m);
  for (int i = 0; i < g.m; ++i) {
    Code c = corner_code(ws, i);
    if (dec.in_I(i) && !in_set[c]) ++b;
    if (dec.in_K(i) && in_set[c]) ++b;
  }
  return b;
}

std::vector<char> lex_segment(std::size_t num_vertices, std::uint64_t ell) {
  if (ell > num_vertices) throw std::invalid_argument("segment longer than the graph");
  std::vector<char> in(num_vertices, 0);
  for (std::uint64_t v = 0; v < ell; ++v) in[v] = 1;
  return in;
}

std::vector<std::uint64_t> lex_profile(const Graph& g) {
  std::size_t N = g.num_vertices();
  std::vector<std::uint64_t> prof(N + 1, 0);
  std::vector<char> in(N, 0);
  std::uint64_t cut = 0;
  for (std::uint32_t v = 0; v < N; ++v) {
    std::uint64_t inside = 0;
    for (std::uint32_t w : g.adj[v]) inside += in[w];
    cut += g.adj[v].size() - 2 * inside;
    in[v] = 1;
    prof[v + 1] = cut;
  }
  return prof;
}

std::vector<std::uint64_t> decorated_lex_profile(const Graph& g, const Decoration& dec) {
  if (g.family != "sierpinski")
    throw std::invalid_argument("decorations apply to sierpinski graphs");
  WordSpace ws(g.n, g.m);
  auto prof = lex_profile(g);
  std::vector<int> corner_delta(g.num_vertices() + 1, 0);
  int base = 0;
  for (int i = 0; i < g.m; ++i) {
    Code c = corner_code(ws, i);
    if (dec.in_I(i)) {
      ++base;                    // cut while the corner is still outside
      corner_delta[c + 1] -= 1;  // covered once it joins
    }
    if (dec.in_K(i)) corner_delta[c + 1] += 1;
  }
  int acc = base;
  for (std::size_t ell = 0; ell < prof.size(); ++ell) {
    if (ell > 0) acc += corner_delta[ell];
    prof[ell] += acc;
  }
  return prof;
}

namespace {

std::uint64_t pow3(int n) { return pow_checked(3, n); }

}  // namespace

std::uint64_t theta_top_m3(int n, std::uint64_t ell) {
  std::uint64_t full = pow3(n);
  if (ell == 0 || ell == full) return 0;
  std::uint64_t half_band = pow3(n - 1);  // thresholds compared via 2*ell
  if (2 * ell < half_band) return 1;
  if (2 * ell > 2 * full - half_band) return 1;
  return 2;
}

std::uint64_t theta_sub_m3(int n, std::uint64_t ell) {
  if (n == 0) return 0;
  std::uint64_t sub = pow3(n - 1);
  std::uint64_t r = ell % sub;
  if (r == 0) return 0;
  return profile_recursive_m3(n - 1)[r] - 1;
}

std::vector<std::uint64_t> profile_recursive_m3(int n) {
  if (n < 1) throw std::invalid_argument("profile needs n >= 1");
  std::vector<std::uint64_t> prof = {0, 2, 2, 0};
  for (int k = 2; k <= n; ++k) {
    std::uint64_t full = pow3(k);
    std::uint64_t sub = pow3(k - 1);
    std::vector<std::uint64_t> next(full + 1, 0);
    for (std::uint64_t ell = 0; ell <= full; ++ell) {
      std::uint64_t r = ell % sub;
      std::uint64_t inner = (r == 0) ? 0 : prof[r] - 1;
      next[ell] = theta_top_m3(k, ell) + inner;
    }
    prof = std::move(next);
  }
  return prof;
}

std::uint64_t profile_closed_form(int n, int m, std::uint64_t ell) {
  std::uint64_t full = pow_checked(m, n);
  if (ell > full) throw std::invalid_argument("cardinality out of range");
  if (ell == 0) return 0;
  std::uint64_t r = ell - 1;
  std::vector<int> d(n + 1, 0);  // d[1..n], most significant first
  for (int h = n; h >= 1; --h) {
    d[h] = static_cast<int>(r % m);
    r /= m;
  }
  std::uint64_t total = 0;
  for (int h = 1; h <= n; ++h) {
    // lp = how many constant words j^(n-h) are <=_Lex the digit suffix.
    int lp = 0;
    for (int j = 0; j < m; ++j) {
      bool leq = true;
      for (int p = h + 1; p <= n; ++p) {
        if (d[p] == j) continue;
        leq = d[p] > j;
        break;
      }
      if (leq) ++lp;
    }
    std::uint64_t dh = static_cast<std::uint64_t>(d[h]);
    total += dh * (m - dh);
    total -= std::min<std::uint64_t>(lp, dh);
    if (static_cast<std::uint64_t>(lp) > dh + 1) total += lp - dh - 1;
  }
  return total;
}

std::string profile_csv(const std::vector<std::uint64_t>& profile) {
  std::ostringstream out;
  out << "ell,theta\n";
  for (std::size_t ell = 0; ell < profile.size(); ++ell)
    out << ell << "," << profile[ell] << "\n";
  return out.str();
}

std::string profile_csv_m3(int n) {
  std::ostringstream out;
  out << "ell,theta,theta0,theta1\n";
  auto prof = profile_recursive_m3(n);
  for (std::size_t ell = 0; ell < prof.size(); ++ell)
    out << ell << "," << prof[ell] << "," << theta_top_m3(n, ell) << ","
        << theta_sub_m3(n, ell) << "\n";
  return out.str();
}

}  // namespace sierpinski
