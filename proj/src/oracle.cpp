#include "sierpinski/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace sierpinski {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct SweepGraph {
  int V = 0;
  std::vector<Mask> adjm;
  std::vector<int> deg;
  std::vector<int> dd;    // boundary change from decoration when a vertex joins
  std::uint64_t base = 0; // decorated boundary of the empty set
};

SweepGraph make_sweep_graph(const Graph& g, const Decoration* dec) {
  if (g.num_vertices() > 30)
    throw std::invalid_argument("exhaustive sweep limited to 30 vertices");
  SweepGraph sg;
  sg.V = static_cast<int>(g.num_vertices());
  sg.adjm.assign(sg.V, 0);
  sg.deg.assign(sg.V, 0);
  sg.dd.assign(sg.V, 0);
  for (int v = 0; v < sg.V; ++v) {
    for (std::uint32_t w : g.adj[v]) sg.adjm[v] |= Mask{1} << w;
    sg.deg[v] = static_cast<int>(g.adj[v].size());
  }
  if (dec) {
    WordSpace ws(g.n, g.m);
    for (int i = 0; i < g.m; ++i) {
      Code c = corner_code(ws, i);
      if (dec->in_I(i)) {
        sg.dd[c] -= 1;
        ++sg.base;
      }
      if (dec->in_K(i)) sg.dd[c] += 1;
    }
  }
  return sg;
}

struct SweepMinima {
  std::vector<std::uint64_t> minima;
  std::vector<Mask> witnesses;
  explicit SweepMinima(int V)
      : minima(V + 1, ~std::uint64_t{0}), witnesses(V + 1, 0) {}
  void feed(int ell, std::uint64_t b, Mask S) {
    if (b < minima[ell] || (b == minima[ell] && S < witnesses[ell])) {
      minima[ell] = b;
      witnesses[ell] = S;
    }
  }
  void merge(const SweepMinima& other) {
    for (std::size_t ell = 0; ell < minima.size(); ++ell) {
      if (other.minima[ell] < minima[ell] ||
          (other.minima[ell] == minima[ell] && other.witnesses[ell] < witnesses[ell]))
        minima[ell] = other.minima[ell], witnesses[ell] = other.witnesses[ell];
    }
  }
};

// Enumerates every subset with the given top-bit prefix in Gray-code order.
template <typename Visit>
void sweep_prefix(const SweepGraph& sg, int low_bits, Mask prefix, Visit&& visit) {
  Mask S = prefix << low_bits;
  // Boundary of the prefix set, built one vertex at a time from the empty set.
  Mask built = 0;
  std::uint64_t B = sg.base;
  int ell = 0;
  for (Mask rest = S; rest; rest &= rest - 1) {
    int v = __builtin_ctzll(rest);
    int inside = __builtin_popcountll(sg.adjm[v] & built);
    B += static_cast<std::uint64_t>(sg.deg[v] - 2 * inside + sg.dd[v]);
    built |= Mask{1} << v;
    ++ell;
  }
  visit(ell, B, S);
  std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t t = 1; t < steps; ++t) {
    int v = __builtin_ctzll(t);
    int inside = __builtin_popcountll(sg.adjm[v] & S);
    Mask bit = Mask{1} << v;
    if (S & bit) {
      S ^= bit;
      B += static_cast<std::uint64_t>(2 * inside - sg.deg[v] - sg.dd[v]);
      --ell;
    } else {
      S ^= bit;
      B += static_cast<std::uint64_t>(sg.deg[v] - 2 * inside + sg.dd[v]);
      ++ell;
    }
    visit(ell, B, S);
  }
}

int prefix_bits_for(int jobs, int V) {
  int bits = 0;
  while ((1 << bits) < jobs && bits < V) ++bits;
  return bits;
}

}  // namespace

ProfileResult exact_profile(const Graph& g, const Decoration* dec,
                            const OracleOptions& opt) {
  auto start = Clock::now();
  SweepGraph sg = make_sweep_graph(g, dec);
  std::uint64_t total = std::uint64_t{1} << sg.V;
  if (total > opt.budget_subsets) throw BudgetExceeded(0);

  int jobs = std::max(1, opt.jobs);
  int pbits = prefix_bits_for(jobs, sg.V);
  int chunks = 1 << pbits;
  int low = sg.V - pbits;

  std::vector<SweepMinima> results(chunks, SweepMinima(sg.V));
  auto run_chunk = [&](int c) {
    sweep_prefix(sg, low, static_cast<Mask>(c),
                 [&](int ell, std::uint64_t b, Mask S) { results[c].feed(ell, b, S); });
  };
  if (jobs == 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(jobs, chunks); ++w)
      pool.emplace_back([&, w] {
        for (int c = w; c < chunks; c += jobs) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }
  ProfileResult res;
  SweepMinima all(sg.V);
  for (const auto& r : results) all.merge(r);
  res.minima = std::move(all.minima);
  res.witnesses = std::move(all.witnesses);
  res.subsets_examined = total;
  res.elapsed_ms = ms_since(start);
  return res;
}

ProfileResult exact_profile_ideals(const Graph& g, const Decoration* dec,
                                   const OracleOptions& opt) {
  auto start = Clock::now();
  if (g.family != "sierpinski")
    throw std::invalid_argument("ideal-restricted profiles need sierpinski graphs");
  WordSpace ws(g.n, g.m);
  auto sets = stable_sets(ws, opt.budget_ideals);
  SweepGraph sg = make_sweep_graph(g, dec);
  SweepMinima all(sg.V);
  for (Mask S : sets) {
    std::uint64_t B = sg.base;
    int ell = 0;
    Mask built = 0;
    for (Mask rest = S; rest; rest &= rest - 1) {
      int v = __builtin_ctzll(rest);
      int inside = __builtin_popcountll(sg.adjm[v] & built);
      B += static_cast<std::uint64_t>(sg.deg[v] - 2 * inside + sg.dd[v]);
      built |= Mask{1} << v;
      ++ell;
    }
    all.feed(ell, B, S);
  }
  ProfileResult res;
  res.minima = std::move(all.minima);
  res.witnesses = std::move(all.witnesses);
  res.subsets_examined = sets.size();
  res.elapsed_ms = ms_since(start);
  return res;
}

NestedResult nested_solutions(const Graph& g, const OracleOptions& opt) {
  SweepGraph sg = make_sweep_graph(g, nullptr);
  if (sg.V > 20) throw std::invalid_argument("nested search limited to 20 vertices");
  std::uint64_t total = std::uint64_t{1} << sg.V;
  if (total > opt.budget_subsets) throw BudgetExceeded(0);

  SweepMinima mins(sg.V);
  sweep_prefix(sg, sg.V, 0,
               [&](int ell, std::uint64_t b, Mask S) { mins.feed(ell, b, S); });
  std::vector<std::vector<Mask>> optimal(sg.V + 1);
  sweep_prefix(sg, sg.V, 0, [&](int ell, std::uint64_t b, Mask S) {
    if (b == mins.minima[ell]) optimal[ell].push_back(S);
  });
  for (auto& level : optimal) std::sort(level.begin(), level.end());

  NestedResult res;
  std::map<Mask, Mask> parent;
  std::vector<Mask> reachable = {0};
  for (int ell = 0; ell < sg.V; ++ell) {
    std::vector<Mask> next;
    for (Mask S : reachable) {
      for (int v = 0; v < sg.V; ++v) {
        if ((S >> v) & 1) continue;
        Mask T = S | (Mask{1} << v);
        if (!std::binary_search(optimal[ell + 1].begin(), optimal[ell + 1].end(), T))
          continue;
        if (parent.emplace(T, S).second) next.push_back(T);
      }
    }
    if (next.empty()) {
      res.exists = false;
      res.break_ell = ell + 1;
      return res;
    }
    std::sort(next.begin(), next.end());
    reachable = std::move(next);
  }
  res.exists = true;
  Mask cur = (sg.V == 64) ? ~Mask{0} : (Mask{1} << sg.V) - 1;
  std::vector<Mask> chain = {cur};
  while (cur) {
    cur = parent.at(cur);
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  res.chain = std::move(chain);
  return res;
}

std::optional<SubadditivityViolation> check_subadditive(
    const std::vector<std::uint64_t>& f, bool strong) {
  std::uint64_t N = f.size();
  if (f[0] != 0) return SubadditivityViolation{0, 0};
  for (std::uint64_t x = 1; x < N; ++x) {
    for (std::uint64_t y = x; y < N; ++y) {
      std::uint64_t s = (x + y) % N;
      std::uint64_t rhs = f[x] + f[y];
      if (f[s] > rhs || (strong && f[s] == rhs)) return SubadditivityViolation{x, y};
    }
  }
  return std::nullopt;
}

std::string report_json(const Report& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["scope"] = r.scope;
  j["status"] = r.status;
  j["witness"] = r.witness;
  j["checked"] = r.checked;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

namespace {

std::string mask_to_words(const Graph& g, Mask S) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    if (!((S >> v) & 1)) continue;
    out << (first ? "" : ",") << g.names[v];
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

Report verify_lex_optimal(int n, int m, const OracleOptions& opt) {
  auto start = Clock::now();
  Report rep;
  rep.claim = "lex-segments-optimal";
  {
    std::ostringstream s;
    s << "S(" << n << "," << m << "), all subsets";
    rep.scope = s.str();
  }
  Graph g = sierpinski_graph(n, m);
  try {
    ProfileResult oracle = exact_profile(g, nullptr, opt);
    auto lex = lex_profile(g);
    rep.checked = oracle.subsets_examined;
    rep.status = "verified";
    for (std::size_t ell = 0; ell < lex.size(); ++ell) {
      if (lex[ell] != oracle.minima[ell]) {
        rep.status = "counterexample";
        std::ostringstream w;
        w << "ell=" << ell << " lex=" << lex[ell] << " min=" << oracle.minima[ell]
          << " set=" << mask_to_words(g, oracle.witnesses[ell]);
        rep.witness = w.str();
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    rep.status = "budget-exceeded";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_lex_optimal_decorated(int n, int m, int s, int t,
                                    const OracleOptions& opt) {
  auto start = Clock::now();
  Report rep;
  rep.claim = "lex-segments-optimal-decorated";
  {
    std::ostringstream sc;
    sc << "S_{" << s << "," << t << "}(" << n << "," << m << "), all subsets";
    rep.scope = sc.str();
  }
  Graph g = sierpinski_graph(n, m);
  Decoration dec{s, t};
  try {
    ProfileResult oracle = exact_profile(g, &dec, opt);
    auto lex = decorated_lex_profile(g, dec);
    rep.checked = oracle.subsets_examined;
    rep.status = "verified";
    for (std::size_t ell = 0; ell < lex.size(); ++ell) {
      if (lex[ell] != oracle.minima[ell]) {
        rep.status = "counterexample";
        std::ostringstream w;
        w << "ell=" << ell << " lex=" << lex[ell] << " min=" << oracle.minima[ell]
          << " set=" << mask_to_words(g, oracle.witnesses[ell]);
        rep.witness = w.str();
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    rep.status = "budget-exceeded";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_lex_optimal_ideals(int n, int m, const OracleOptions& opt) {
  auto start = Clock::now();
  Report rep;
  rep.claim = "lex-segments-optimal-among-stable-sets";
  {
    std::ostringstream sc;
    sc << "S(" << n << "," << m << "), stabilization-order ideals, every decoration";
    rep.scope = sc.str();
  }
  Graph g = sierpinski_graph(n, m);
  rep.status = "verified";
  try {
    for (const Decoration& dec : all_decorations(m)) {
      ProfileResult oracle = exact_profile_ideals(g, &dec, opt);
      auto lex = decorated_lex_profile(g, dec);
      rep.checked += oracle.subsets_examined;
      for (std::size_t ell = 0; ell < lex.size(); ++ell) {
        if (lex[ell] != oracle.minima[ell]) {
          rep.status = "counterexample";
          std::ostringstream w;
          w << "s=" << dec.s << " t=" << dec.t << " ell=" << ell << " lex=" << lex[ell]
            << " min=" << oracle.minima[ell]
            << " set=" << mask_to_words(g, oracle.witnesses[ell]);
          rep.witness = w.str();
          rep.elapsed_ms = ms_since(start);
          return rep;
        }
      }
    }
  } catch (const BudgetExceeded&) {
    rep.status = "budget-exceeded";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_min_boundary_sierpinski(int n, int m, const OracleOptions& opt) {
  auto start = Clock::now();
  Report rep;
  rep.claim = "min-boundary-at-least-m-minus-1";
  {
    std::ostringstream sc;
    sc << "S(" << n << "," << m << "), equality exactly at powers of " << m
       << " and their complements";
    rep.scope = sc.str();
  }
  Graph g = sierpinski_graph(n, m);
  try {
    ProfileResult oracle = exact_profile(g, nullptr, opt);
    rep.checked = oracle.subsets_examined;
    std::uint64_t full = pow_checked(m, n);
    std::set<std::uint64_t> expected;
    for (int k = 0; k < n; ++k) {
      expected.insert(pow_checked(m, k));
      expected.insert(full - pow_checked(m, k));
    }
    rep.status = "verified";
    for (std::uint64_t ell = 1; ell < full; ++ell) {
      std::uint64_t bound = static_cast<std::uint64_t>(m - 1);
      bool eq_expected = expected.count(ell) > 0;
      if (oracle.minima[ell] < bound ||
          (oracle.minima[ell] == bound) != eq_expected) {
        rep.status = "counterexample";
        std::ostringstream w;
        w << "ell=" << ell << " min=" << oracle.minima[ell]
          << " set=" << mask_to_words(g, oracle.witnesses[ell]);
        rep.witness = w.str();
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    rep.status = "budget-exceeded";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_min_boundary_quotient(int n, const OracleOptions& opt) {
  auto start = Clock::now();
  Report rep;
  rep.claim = "quotient-min-boundary-2-with-subgasket-equality";
  {
    std::ostringstream sc;
    sc << "S[" << n << ",3], bound >= 2 plus equality at sizes (3^k+3)/2, 1 <= k < n";
    rep.scope = sc.str();
  }
  Graph g = quotient_graph(n, 3).g;
  try {
    ProfileResult oracle = exact_profile(g, nullptr, opt);
    rep.checked = oracle.subsets_examined;
    std::uint64_t full = g.num_vertices();
    std::set<std::uint64_t> claimed;
    for (int k = 1; k < n; ++k) claimed.insert((pow_checked(3, k) + 3) / 2);
    rep.status = "verified";
    for (std::uint64_t ell = 1; ell < full; ++ell) {
      if (oracle.minima[ell] < 2) {
        rep.status = "counterexample";
        std::ostringstream w;
        w << "bound: ell=" << ell << " min=" << oracle.minima[ell]
          << " set=" << mask_to_words(g, oracle.witnesses[ell]);
        rep.witness = w.str();
        break;
      }
      if (claimed.count(ell) && oracle.minima[ell] != 2) {
        rep.status = "counterexample";
        std::ostringstream w;
        w << "claimed equality fails at ell=" << ell << ": min="
          << oracle.minima[ell] << ", best=" << mask_to_words(g, oracle.witnesses[ell]);
        rep.witness = w.str();
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    rep.status = "budget-exceeded";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_nested(const Graph& g, const std::string& scope, const OracleOptions& opt) {
  auto start = Clock::now();
  Report rep;
  rep.claim = "nested-solutions-exist";
  rep.scope = scope;
  try {
    NestedResult nr = nested_solutions(g, opt);
    rep.checked = std::uint64_t{1} << g.num_vertices();
    if (nr.exists) {
      rep.status = "verified";
      std::ostringstream w;
      w << "chain";
      for (Mask S : nr.chain) w << " " << mask_to_words(g, S);
      rep.witness = w.str();
    } else {
      rep.status = "counterexample";
      std::ostringstream w;
      w << "no optimal set of size " << nr.break_ell
        << " extends an optimal set of size " << nr.break_ell - 1;
      rep.witness = w.str();
    }
  } catch (const BudgetExceeded&) {
    rep.status = "budget-exceeded";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_profile_subadditive(int max_n, const OracleOptions& opt) {
  (void)opt;
  auto start = Clock::now();
  Report rep;
  rep.claim = "lex-profile-strongly-subadditive";
  {
    std::ostringstream sc;
    sc << "S(n,3) profiles, n <= " << max_n;
    rep.scope = sc.str();
  }
  rep.status = "verified";
  for (int n = 1; n <= max_n; ++n) {
    auto prof = profile_recursive_m3(n);
    prof.pop_back();  // the profile as a function on Z_(3^n)
    rep.checked += (prof.size() - 1) * (prof.size() - 1) / 2;
    if (auto v = check_subadditive(prof, true)) {
      rep.status = "counterexample";
      std::ostringstream w;
      w << "n=" << n << " x=" << v->x << " y=" << v->y;
      rep.witness = w.str();
      break;
    }
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

CaseGrid enumerate_cases(int m) {
  WordSpace ws(2, m);
  CaseGrid grid;
  bool found = false;
  for (auto& elems : stab_components(ws)) {
    if (std::find(elems.begin(), elems.end(), Code{1}) != elems.end()) {
      grid.component = build_stab_component(ws, elems);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("two-digit component not found");
  auto ideals = enumerate_ideals(grid.component.poset, std::uint64_t{1} << 20);
  for (std::uint64_t ideal : ideals)
    for (int s = 0; s <= m; ++s)
      for (int t = 0; s + t <= m; ++t) grid.cases.push_back({ideal, s, t});
  return grid;
}

CaseId dual_case(const CaseGrid& grid, int m, const CaseId& c) {
  WordSpace ws(2, m);
  std::vector<int> rev(m);
  for (int d = 0; d < m; ++d) rev[d] = m - 1 - d;
  std::map<Code, int> index;
  for (int k = 0; k < static_cast<int>(grid.component.elems.size()); ++k)
    index[grid.component.elems[k]] = k;
  std::uint64_t dual_ideal = 0;
  for (int k = 0; k < static_cast<int>(grid.component.elems.size()); ++k) {
    if ((c.ideal >> k) & 1) continue;  // complement
    Code image = ws.relabel(grid.component.elems[k], rev);
    dual_ideal |= std::uint64_t{1} << index.at(image);
  }
  return CaseId{dual_ideal, m - c.s - c.t, c.t};
}

std::uint64_t count_case_orbits(int m) {
  CaseGrid grid = enumerate_cases(m);
  std::uint64_t self_dual = 0;
  for (const CaseId& c : grid.cases) {
    CaseId d = dual_case(grid, m, c);
    if (d.ideal == c.ideal && d.s == c.s && d.t == c.t) ++self_dual;
  }
  return (grid.cases.size() + self_dual) / 2;
}

std::vector<CaseSweepRow> sweep_cases(int m) {
  CaseGrid grid = enumerate_cases(m);
  WordSpace ws(2, m);
  Mask comp_mask = 0;
  for (Code v : grid.component.elems) comp_mask |= Mask{1} << v;

  std::map<std::tuple<std::uint64_t, int, int>, std::size_t> row_of;
  std::vector<CaseSweepRow> rows;
  rows.reserve(grid.cases.size());
  for (const CaseId& c : grid.cases) {
    row_of[{c.ideal, c.s, c.t}] = rows.size();
    rows.push_back({c, false, 0, 0});
  }

  auto stable = stable_sets(ws, std::uint64_t{1} << 20);
  for (int s = 0; s <= m; ++s) {
    for (int t = 0; s + t <= m; ++t) {
      SteinerContext ctx(2, m, Decoration{s, t});
      for (Mask S : stable) {
        if (!is_compressed(ctx, S)) continue;
        std::uint64_t ideal = 0;
        for (int k = 0; k < static_cast<int>(grid.component.elems.size()); ++k)
          if ((S >> grid.component.elems[k]) & 1) ideal |= std::uint64_t{1} << k;
        auto it = row_of.find({ideal, s, t});
        if (it == row_of.end()) throw std::logic_error("stable set outside the case grid");
        CaseSweepRow& row = rows[it->second];
        MergeResult mr = subadditivate(ctx, S);
        std::int64_t delta = mr.already_segment ? 0 : mr.delta();
        if (!row.applicable || delta > row.max_delta) {
          row.max_delta = delta;
          row.witness = S;
        }
        row.applicable = true;
      }
    }
  }
  return rows;
}

}  // namespace sierpinski
