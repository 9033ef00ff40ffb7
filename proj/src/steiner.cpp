#include "sierpinski/steiner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sierpinski {

SteinerContext::SteinerContext(int N_, int m_, Decoration dec_)
    : N(N_), m(m_), dec(dec_), ws(N_, m_), ws_sub(N_ - 1, m_),
      g(sierpinski_graph(N_, m_)), section_size(ws_sub.size()) {
  if (N < 2) throw std::invalid_argument("sections need N >= 2");
  if (ws.size() > 64) throw std::invalid_argument("vertex masks need m^N <= 64");
  if (dec.s < 0 || dec.t < 0 || dec.s + dec.t > m)
    throw std::invalid_argument("decoration out of range");
}

Mask SteinerContext::section_mask(int h) const {
  Mask ones = (section_size == 64) ? ~Mask{0} : ((Mask{1} << section_size) - 1);
  return ones << (static_cast<std::uint64_t>(h) * section_size);
}

std::uint64_t SteinerContext::section_count(Mask S, int h) const {
  return __builtin_popcountll(S & section_mask(h));
}

std::vector<std::uint64_t> SteinerContext::ell_vector(Mask S) const {
  std::vector<std::uint64_t> ell(m);
  for (int h = 0; h < m; ++h) ell[h] = section_count(S, h);
  return ell;
}

Code SteinerContext::corner_word(int i, int j) const {
  return static_cast<Code>(i * section_size + corner_code(ws_sub, j));
}

std::vector<char> SteinerContext::membership(Mask S) const {
  std::vector<char> in(ws.size(), 0);
  for (std::uint64_t v = 0; v < ws.size(); ++v) in[v] = (S >> v) & 1;
  return in;
}

std::uint64_t SteinerContext::boundary(Mask S) const {
  return decorated_boundary(g, dec, membership(S));
}

BoundaryParts boundary_parts(const SteinerContext& ctx, Mask S) {
  BoundaryParts parts;
  for (auto [u, v] : ctx.g.edges()) {
    if (((S >> u) & 1) == ((S >> v) & 1)) continue;
    if (u / ctx.section_size == v / ctx.section_size)
      ++parts.interior;
    else
      ++parts.exterior;
  }
  for (int i = 0; i < ctx.m; ++i) {
    Code c = corner_code(ctx.ws, i);
    bool in = (S >> c) & 1;
    if (ctx.dec.in_I(i) && !in) ++parts.corner;
    if (ctx.dec.in_K(i) && in) ++parts.corner;
  }
  return parts;
}

SectionOrder section_order(const SteinerContext& ctx, Mask S, int h) {
  SectionOrder so;
  for (int i = 0; i < ctx.m; ++i) {
    bool attracting, repelling;
    if (i == h) {
      attracting = ctx.dec.in_I(i);
      repelling = ctx.dec.in_K(i);
    } else {
      attracting = (S >> ctx.corner_word(i, h)) & 1;
      repelling = !attracting;
    }
    if (attracting)
      so.I.push_back(i);
    else if (repelling)
      so.K.push_back(i);
    else
      so.J.push_back(i);
  }
  so.perm.resize(ctx.m);
  int rank = 0;
  for (int d : so.I) so.perm[d] = rank++;
  for (int d : so.J) so.perm[d] = rank++;
  for (int d : so.K) so.perm[d] = rank++;
  return so;
}

Mask compress(const SteinerContext& ctx, Mask S, int h) {
  std::uint64_t ell = ctx.section_count(S, h);
  SectionOrder so = section_order(ctx, S, h);
  Mask section = 0;
  for (std::uint64_t r = 0; r < ell; ++r) {
    Code sub = ctx.ws_sub.unrank_permuted(r, so.perm);
    section |= Mask{1} << (h * ctx.section_size + sub);
  }
  return (S & ~ctx.section_mask(h)) | section;
}

bool is_compressed(const SteinerContext& ctx, Mask S, int h) {
  return compress(ctx, S, h) == S;
}

bool is_compressed(const SteinerContext& ctx, Mask S) {
  for (int h = 0; h < ctx.m; ++h)
    if (!is_compressed(ctx, S, h)) return false;
  return true;
}

Mask stabilize(const SteinerContext& ctx, Mask S, int i, int j) {
  Mask out = S;
  for (std::uint64_t v = 0; v < ctx.ws.size(); ++v) {
    int pos = ctx.ws.first_of_pair(static_cast<Code>(v), i, j);
    if (pos == 0 || ctx.ws.digit(static_cast<Code>(v), pos) != i) continue;
    Code w = ctx.ws.transpose(static_cast<Code>(v), i, j);
    // v is the chamber-side member of the orbit {v, w}.
    bool has_v = (S >> v) & 1, has_w = (S >> w) & 1;
    if (has_w && !has_v) {
      out &= ~(Mask{1} << w);
      out |= Mask{1} << v;
    }
  }
  return out;
}

bool is_stable(const SteinerContext& ctx, Mask S) {
  for (int i = 0; i < ctx.m; ++i)
    for (int j = i + 1; j < ctx.m; ++j)
      if (stabilize(ctx, S, i, j) != S) return false;
  return true;
}

FixpointResult compress_fix(const SteinerContext& ctx, Mask S) {
  FixpointResult r{S, 0};
  for (;;) {
    Mask before = r.result;
    for (int h = 0; h < ctx.m; ++h) r.result = compress(ctx, r.result, h);
    if (r.result == before) return r;
    ++r.rounds;
  }
}

FixpointResult stabilize_fix(const SteinerContext& ctx, Mask S) {
  FixpointResult r{S, 0};
  for (;;) {
    Mask before = r.result;
    for (int i = 0; i < ctx.m; ++i)
      for (int j = i + 1; j < ctx.m; ++j) r.result = stabilize(ctx, r.result, i, j);
    if (r.result == before) return r;
    ++r.rounds;
  }
}

std::uint64_t tau(const SteinerContext& ctx, Mask S) {
  std::uint64_t total = 0;
  for (int i = 0; i < ctx.m; ++i) {
    for (int j = i + 1; j < ctx.m; ++j) {
      bool a = (S >> ctx.corner_word(i, j)) & 1;
      bool b = (S >> ctx.corner_word(j, i)) & 1;
      if (a != b) ++total;
    }
    Code c = corner_code(ctx.ws, i);
    bool in = (S >> c) & 1;
    if (ctx.dec.in_I(i) && !in) ++total;
    if (ctx.dec.in_K(i) && in) ++total;
  }
  return total;
}

std::uint64_t rho(const SteinerContext& ctx, Mask S) {
  std::uint64_t total = 0;
  for (int i = 0; i < ctx.m; ++i) {
    for (int j = 0; j < ctx.m; ++j) {
      Code corner = ctx.corner_word(i, j);
      bool in = (S >> corner) & 1;
      bool attracting, repelling;
      if (j == i) {
        attracting = ctx.dec.in_I(i);
        repelling = ctx.dec.in_K(i);
      } else {
        attracting = (S >> ctx.corner_word(j, i)) & 1;
        repelling = !attracting;
      }
      if (!in && attracting) total += ctx.m - j;
      if (in && repelling) total += j;
    }
  }
  return total;
}

MergeResult subadditivate(const SteinerContext& ctx, Mask S) {
  if (!is_stable(ctx, S)) throw std::invalid_argument("set is not stable");
  if (!is_compressed(ctx, S)) throw std::invalid_argument("set is not compressed");
  auto ell = ctx.ell_vector(S);
  std::uint64_t full = ctx.section_size;
  int h_min = ctx.m, h_max = -1;
  for (int h = 0; h < ctx.m; ++h) {
    if (ell[h] < full && h_min == ctx.m) h_min = h;
    if (ell[h] > 0) h_max = h;
  }
  MergeResult res;
  if (h_min >= h_max) {
    res.result = S;
    res.already_segment = true;
    return res;
  }
  BoundaryParts before = boundary_parts(ctx, S);
  SectionOrder order_min = section_order(ctx, S, h_min);
  SectionOrder order_max = section_order(ctx, S, h_max);
  std::uint64_t sum = ell[h_min] + ell[h_max];
  Mask out = S & ~ctx.section_mask(h_min) & ~ctx.section_mask(h_max);
  auto fill = [&](int h, const SectionOrder& so, std::uint64_t count) {
    for (std::uint64_t r = 0; r < count; ++r)
      out |= Mask{1} << (h * ctx.section_size + ctx.ws_sub.unrank_permuted(r, so.perm));
  };
  if (sum <= full) {
    fill(h_min, order_min, sum);
  } else {
    fill(h_min, order_min, full);
    fill(h_max, order_max, sum - full);
  }
  BoundaryParts after = boundary_parts(ctx, out);
  res.result = out;
  res.d_interior = static_cast<std::int64_t>(after.interior) - static_cast<std::int64_t>(before.interior);
  res.d_exterior = static_cast<std::int64_t>(after.exterior) - static_cast<std::int64_t>(before.exterior);
  res.d_corner = static_cast<std::int64_t>(after.corner) - static_cast<std::int64_t>(before.corner);
  return res;
}

Mask lex_perm_segment(const SteinerContext& ctx, const std::vector<int>& perm,
                      std::uint64_t ell) {
  Mask out = 0;
  for (std::uint64_t r = 0; r < ell; ++r)
    out |= Mask{1} << ctx.ws.unrank_permuted(r, perm);
  return out;
}

Graph cartesian_product(const Graph& G, const Graph& H) {
  Graph p;
  p.family = "product";
  std::size_t nh = H.num_vertices();
  p.adj.resize(G.num_vertices() * nh);
  p.names.resize(p.adj.size());
  for (std::uint32_t v = 0; v < G.num_vertices(); ++v) {
    for (std::uint32_t w = 0; w < nh; ++w) {
      std::uint32_t id = v * nh + w;
      p.names[id] = G.names[v] + "," + H.names[w];
      for (std::uint32_t v2 : G.adj[v]) p.adj[id].push_back(v2 * nh + w);
      for (std::uint32_t w2 : H.adj[w]) p.adj[id].push_back(v * nh + w2);
      std::sort(p.adj[id].begin(), p.adj[id].end());
    }
  }
  return p;
}

std::vector<std::uint64_t> product_columns(const Graph& G, const Graph& H, Mask S) {
  std::size_t nh = H.num_vertices();
  std::vector<std::uint64_t> cols(nh, 0);
  for (std::uint32_t v = 0; v < G.num_vertices(); ++v)
    for (std::uint32_t w = 0; w < nh; ++w)
      if ((S >> (v * nh + w)) & 1) ++cols[w];
  return cols;
}

Mask product_compress(const Graph& G, const Graph& H, Mask S) {
  auto cols = product_columns(G, H, S);
  std::size_t nh = H.num_vertices();
  Mask out = 0;
  for (std::uint32_t w = 0; w < nh; ++w)
    for (std::uint64_t v = 0; v < cols[w]; ++v) out |= Mask{1} << (v * nh + w);
  return out;
}

std::uint64_t product_lower_bound(const std::vector<std::uint64_t>& g_profile,
                                  const Graph& H,
                                  const std::vector<std::uint64_t>& columns) {
  std::uint64_t bound = 0;
  for (std::uint64_t ell : columns) bound += g_profile[ell];
  for (auto [w1, w2] : H.edges()) {
    std::uint64_t a = columns[w1], b = columns[w2];
    bound += (a > b) ? a - b : b - a;
  }
  return bound;
}

TraceEntry make_trace_entry(const SteinerContext& ctx, const std::string& op, Mask S) {
  TraceEntry e;
  e.op = op;
  e.ell = ctx.ell_vector(S);
  e.boundary = ctx.boundary(S);
  e.tau_value = tau(ctx, S);
  e.rho_value = rho(ctx, S);
  return e;
}

std::string trace_jsonl(const std::vector<TraceEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << "{\"op\":\"" << e.op << "\",\"ell\":[";
    for (std::size_t k = 0; k < e.ell.size(); ++k) out << (k ? "," : "") << e.ell[k];
    out << "],\"boundary\":" << e.boundary << ",\"tau\":" << e.tau_value
        << ",\"rho\":" << e.rho_value << "}\n";
  }
  return out.str();
}

}  // namespace sierpinski
