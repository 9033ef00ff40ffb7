// Command-line front end: graph export, profile tables, single-set
// boundaries, the exhaustive oracle, named verification suites, poset
// exports, and the continuous-limit functions.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sierpinski/eip.hpp"
#include "sierpinski/graphs.hpp"
#include "sierpinski/limits.hpp"
#include "sierpinski/oracle.hpp"
#include "sierpinski/posets.hpp"
#include "sierpinski/steiner.hpp"

namespace {

using namespace sierpinski;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + out_path);
  f << text;
}

int default_jobs() {
  if (const char* env = std::getenv("SIERPINSKI_EIP_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

Graph make_graph(const std::string& family, int n, int m) {
  if (family == "sierpinski") return sierpinski_graph(n, m);
  if (family == "quotient") return quotient_graph(n, m).g;
  if (family == "hamming") return hamming_graph(n, m);
  throw CLI::ValidationError("--family", "unknown family: " + family);
}

// Graph tags: SG<n> (quotient of S(n,3)), S(<n>,<m>), Q<n>, K<m>^<n>.
Graph graph_from_tag(const std::string& tag) {
  int a = 0, b = 0;
  if (std::sscanf(tag.c_str(), "SG%d", &a) == 1) return quotient_graph(a, 3).g;
  if (std::sscanf(tag.c_str(), "S(%d,%d)", &a, &b) == 2) return sierpinski_graph(a, b);
  if (std::sscanf(tag.c_str(), "Q%d", &a) == 1) return hamming_graph(a, 2);
  if (std::sscanf(tag.c_str(), "K%d^%d", &a, &b) == 2) return hamming_graph(b, a);
  throw CLI::ValidationError("--graph", "unknown graph tag: " + tag);
}

std::vector<char> parse_set(const Graph& g, const std::string& spec) {
  if (spec.rfind("lex:", 0) == 0) {
    std::uint64_t ell = 0;
    try {
      ell = std::stoull(spec.substr(4));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--set", "bad lex size in: " + spec);
    }
    if (ell > g.num_vertices())
      throw CLI::ValidationError("--set", "lex size exceeds the vertex count");
    return lex_segment(g.num_vertices(), ell);
  }
  std::vector<char> in(g.num_vertices(), 0);
  std::stringstream ss(spec);
  std::string word;
  while (std::getline(ss, word, ',')) {
    auto it = std::find(g.names.begin(), g.names.end(), word);
    if (it == g.names.end()) throw CLI::ValidationError("--set", "not a vertex: " + word);
    in[it - g.names.begin()] = 1;
  }
  return in;
}

std::vector<std::string> witness_words(const Graph& g, Mask S) {
  std::vector<std::string> words;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    if ((S >> v) & 1) words.push_back(g.names[v]);
  return words;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected an integer or p/q: " + text);
  }
}

int exit_for(const Report& rep) {
  if (rep.status == "verified") return 0;
  if (rep.status == "counterexample") return 1;
  return 2;
}

struct Options {
  int n = -1, m = -1, s = -1, t = -1;
  std::string family = "sierpinski";
  std::string format;
  std::string out;
  std::string set_spec;
  std::string claim;
  std::string graph_tag;
  std::string component_word;
  std::string export_what = "components";
  std::string eta_arg, lambda_arg;
  std::uint64_t ell = 0;
  bool ideals = false;
  OracleOptions oracle;
};

void require_nm(const Options& o) {
  if (o.n < 0 || o.m < 0) throw CLI::ValidationError("--n/--m", "both are required here");
}

Decoration decoration_of(const Options& o) {
  int s = std::max(o.s, 0), t = std::max(o.t, 0);
  if (s + t > o.m) throw CLI::ValidationError("--s/--t", "need s + t <= m");
  return Decoration{s, t};
}

int run_graph(const Options& o) {
  require_nm(o);
  Graph g = make_graph(o.family, o.n, o.m);
  emit(o.format == "dot" ? to_dot(g) : to_edge_list(g), o.out);
  return 0;
}

int run_profile(const Options& o) {
  require_nm(o);
  Graph g = sierpinski_graph(o.n, o.m);
  std::string text;
  if (o.s >= 0 || o.t >= 0)
    text = profile_csv(decorated_lex_profile(g, decoration_of(o)));
  else if (o.m == 3)
    text = profile_csv_m3(o.n);
  else
    text = profile_csv(lex_profile(g));
  emit(text, o.out);
  return 0;
}

int run_boundary(const Options& o) {
  require_nm(o);
  Graph g = make_graph(o.family, o.n, o.m);
  if (o.set_spec.empty()) throw CLI::ValidationError("--set", "required");
  auto in = parse_set(g, o.set_spec);
  std::uint64_t value = (o.s >= 0 || o.t >= 0)
                            ? decorated_boundary(g, decoration_of(o), in)
                            : cut_edges(g, in);
  emit(std::to_string(value) + "\n", o.out);
  return 0;
}

int run_solve(const Options& o) {
  require_nm(o);
  Graph g = make_graph(o.family, o.n, o.m);
  const bool decorated = o.s >= 0 || o.t >= 0;
  if (decorated && o.family != "sierpinski")
    throw CLI::ValidationError("--s/--t", "decorations need the sierpinski family");
  Decoration dec = decorated ? decoration_of(o) : Decoration{0, 0};
  ProfileResult res;
  try {
    res = o.ideals ? exact_profile_ideals(g, decorated ? &dec : nullptr, o.oracle)
                   : exact_profile(g, decorated ? &dec : nullptr, o.oracle);
  } catch (const BudgetExceeded&) {
    std::cerr << "budget exceeded; raise --budget-subsets/--budget-ideals\n";
    return 2;
  }
  if (o.format == "json") {
    nlohmann::json j;
    j["family"] = g.family;
    j["n"] = o.n;
    j["m"] = o.m;
    j["s"] = decorated ? dec.s : -1;
    j["t"] = decorated ? dec.t : -1;
    j["ideals"] = o.ideals;
    j["minima"] = res.minima;
    nlohmann::json wits = nlohmann::json::array();
    for (Mask w : res.witnesses) wits.push_back(witness_words(g, w));
    j["witnesses"] = wits;
    j["subsets_examined"] = res.subsets_examined;
    j["elapsed_ms"] = res.elapsed_ms;
    emit(j.dump(2) + "\n", o.out);
  } else {
    emit(profile_csv(res.minima), o.out);
  }
  return 0;
}

int run_verify(const Options& o) {
  Report rep;
  if (o.claim == "conjecture1") {
    require_nm(o);
    rep = verify_lex_optimal(o.n, o.m, o.oracle);
  } else if (o.claim == "conjecture2") {
    require_nm(o);
    if (o.s >= 0 || o.t >= 0) {
      Decoration dec = decoration_of(o);
      rep = verify_lex_optimal_decorated(o.n, o.m, dec.s, dec.t, o.oracle);
    } else if (o.ideals) {
      rep = verify_lex_optimal_ideals(o.n, o.m, o.oracle);
    } else {
      rep.claim = "lex-segments-optimal-decorated";
      std::ostringstream sc;
      sc << "S(" << o.n << "," << o.m << "), every decoration";
      rep.scope = sc.str();
      rep.status = "verified";
      for (const Decoration& dec : all_decorations(o.m)) {
        Report one = verify_lex_optimal_decorated(o.n, o.m, dec.s, dec.t, o.oracle);
        rep.checked += one.checked;
        rep.elapsed_ms += one.elapsed_ms;
        if (one.status != "verified") {
          rep.status = one.status;
          rep.witness = one.witness;
          break;
        }
      }
    }
  } else if (o.claim == "subadditivity") {
    rep = verify_profile_subadditive(o.n < 0 ? 6 : o.n, o.oracle);
  } else if (o.claim == "nested") {
    if (o.graph_tag.empty()) throw CLI::ValidationError("--graph", "required for nested");
    rep = verify_nested(graph_from_tag(o.graph_tag), o.graph_tag, o.oracle);
  } else if (o.claim == "theorem2") {
    if (!o.graph_tag.empty()) {
      int k = 0;
      if (std::sscanf(o.graph_tag.c_str(), "SG%d", &k) != 1)
        throw CLI::ValidationError("--graph", "theorem2 takes SG<n> or --n/--m");
      rep = verify_min_boundary_quotient(k, o.oracle);
    } else {
      require_nm(o);
      rep = verify_min_boundary_sierpinski(o.n, o.m, o.oracle);
    }
  } else if (o.claim == "cases") {
    if (o.m < 0) throw CLI::ValidationError("--m", "required for cases");
    auto rows = sweep_cases(o.m);
    if (o.format == "csv") {
      WordSpace ws(2, o.m);
      std::ostringstream csv;
      csv << "ideal,s,t,applicable,max_delta,witness\n";
      for (const auto& row : rows) {
        csv << row.id.ideal << "," << row.id.s << "," << row.id.t << ","
            << (row.applicable ? 1 : 0) << "," << row.max_delta << ",";
        bool first = true;
        for (Code v = 0; v < ws.size(); ++v)
          if ((row.witness >> v) & 1) {
            csv << (first ? "" : " ") << ws.str(v);
            first = false;
          }
        csv << "\n";
      }
      emit(csv.str(), o.out);
      bool bad = std::any_of(rows.begin(), rows.end(), [](const CaseSweepRow& r) {
        return r.applicable && r.max_delta > 0;
      });
      return bad ? 1 : 0;
    }
    rep.claim = "merge-delta-nonpositive";
    {
      std::ostringstream sc;
      sc << rows.size() << " cases on S(2," << o.m << "), " << count_case_orbits(o.m)
         << " dual orbits";
      rep.scope = sc.str();
    }
    rep.status = "verified";
    WordSpace ws(2, o.m);
    for (const auto& row : rows) {
      if (!row.applicable) continue;
      ++rep.checked;
      if (row.max_delta > 0) {
        rep.status = "counterexample";
        std::ostringstream w;
        w << "ideal=" << row.id.ideal << " s=" << row.id.s << " t=" << row.id.t
          << " delta=" << row.max_delta << " set={";
        bool first = true;
        for (Code v = 0; v < ws.size(); ++v)
          if ((row.witness >> v) & 1) {
            w << (first ? "" : ",") << ws.str(v);
            first = false;
          }
        w << "}";
        rep.witness = w.str();
        break;
      }
    }
  } else {
    throw CLI::ValidationError("--claim", "unknown claim: " + o.claim);
  }
  emit(report_json(rep), o.out);
  return exit_for(rep);
}

int run_poset(const Options& o) {
  require_nm(o);
  if (o.export_what == "components") {
    WordSpace ws(o.n, o.m);
    emit(components_json(ws), o.out);
    return 0;
  }
  if (o.export_what == "hasse") {
    if (o.family == "quotient") {
      QuotientStabOrder qso = build_quotient_stab_order(o.n, o.m);
      emit(hasse_dot(qso.poset, qso.quotient.g.names), o.out);
      return 0;
    }
    WordSpace ws(o.n, o.m);
    Code member = ws.parse(o.component_word.empty() ? std::string(o.n, '0') : o.component_word);
    for (auto& elems : stab_components(ws)) {
      if (std::find(elems.begin(), elems.end(), member) == elems.end()) continue;
      StabComponent comp = build_stab_component(ws, elems);
      std::vector<std::string> labels;
      for (Code c : comp.elems) labels.push_back(ws.str(c));
      emit(hasse_dot(comp.poset, labels), o.out);
      return 0;
    }
    throw CLI::ValidationError("--component", "no component contains that word");
  }
  if (o.export_what == "network") {
    if (o.family == "quotient") {
      QuotientStabOrder qso = build_quotient_stab_order(o.n, o.m);
      auto ideals = enumerate_ideals(qso.poset, o.oracle.budget_ideals);
      emit(derived_network_dot(derived_network(ideals, qso.quotient.g), qso.quotient.g), o.out);
      return 0;
    }
    WordSpace ws(o.n, o.m);
    auto ideals = stable_sets(ws, o.oracle.budget_ideals);
    Graph g = sierpinski_graph(o.n, o.m);
    emit(derived_network_dot(derived_network(ideals, g), g), o.out);
    return 0;
  }
  throw CLI::ValidationError("--export", "unknown export: " + o.export_what);
}

int run_limit(const Options& o) {
  if (!o.eta_arg.empty()) {
    EtaPoint p = eta_inverse(parse_rational(o.eta_arg, "--eta-inverse"));
    emit(point_string(p) + "\n", o.out);
    return 0;
  }
  if (!o.lambda_arg.empty()) {
    LambdaValue v = lambda_value(parse_rational(o.lambda_arg, "--lambda"));
    emit(v.countably_infinite ? "countably-infinite\n" : std::to_string(v.value) + "\n",
         o.out);
    return 0;
  }
  if (o.n >= 0) {
    emit(std::to_string(lambda_triadic(o.ell, o.n)) + "\n", o.out);
    return 0;
  }
  throw CLI::ValidationError("limit", "give --eta-inverse, --lambda, or --ell with --n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact edge-isoperimetry workbench for Sierpinski-like graphs"};
  app.require_subcommand(1);

  Options o;
  o.oracle.jobs = default_jobs();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "word length / recursion depth");
    cmd->add_option("--m", o.m, "alphabet size");
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
  };
  auto add_decoration = [&](CLI::App* cmd) {
    cmd->add_option("--s", o.s, "attracting corner count");
    cmd->add_option("--t", o.t, "free corner count");
  };
  auto add_oracle = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", o.oracle.jobs, "parallel sweep width");
    cmd->add_option("--budget-subsets", o.oracle.budget_subsets, "max subsets to sweep");
    cmd->add_option("--budget-ideals", o.oracle.budget_ideals, "max ideals to enumerate");
  };

  CLI::App* graph = app.add_subcommand("graph", "emit a graph as an edge list or DOT");
  add_common(graph);
  graph->add_option("--family", o.family, "sierpinski | quotient | hamming");
  graph->add_option("--format", o.format, "edges (default) | dot");

  CLI::App* profile = app.add_subcommand("profile", "Lex-segment boundary table as CSV");
  add_common(profile);
  add_decoration(profile);

  CLI::App* boundary = app.add_subcommand("boundary", "boundary of one vertex set");
  add_common(boundary);
  add_decoration(boundary);
  boundary->add_option("--family", o.family, "sierpinski | quotient | hamming");
  boundary->add_option("--set", o.set_spec, "comma-separated words, or lex:<ell>");

  CLI::App* solve = app.add_subcommand("solve", "exhaustive minimum-boundary profile");
  add_common(solve);
  add_decoration(solve);
  add_oracle(solve);
  solve->add_option("--family", o.family, "sierpinski | quotient | hamming");
  solve->add_option("--format", o.format, "csv (default) | json");
  solve->add_flag("--ideals", o.ideals, "search stabilization-order ideals only");

  CLI::App* verify = app.add_subcommand("verify", "run a named claim suite");
  add_common(verify);
  add_decoration(verify);
  add_oracle(verify);
  verify->add_option("--claim", o.claim,
                     "conjecture1 | conjecture2 | subadditivity | nested | theorem2 | cases")
      ->required();
  verify->add_option("--graph", o.graph_tag, "graph tag: SG<n>, S(<n>,<m>), Q<n>, K<m>^<n>");
  verify->add_option("--format", o.format, "json report (default) | csv (cases only)");
  verify->add_flag("--ideals", o.ideals, "restrict conjecture2 to stable sets");

  CLI::App* poset = app.add_subcommand("poset", "stabilization-order exports");
  add_common(poset);
  poset->add_option("--family", o.family, "sierpinski | quotient");
  poset->add_option("--export", o.export_what, "components | hasse | network");
  poset->add_option("--component", o.component_word, "word whose component to export");
  poset->add_option("--budget-ideals", o.oracle.budget_ideals, "max ideals to enumerate");

  CLI::App* limit = app.add_subcommand("limit", "continuous-limit values");
  limit->add_option("--eta-inverse", o.eta_arg, "exact rational a in [0,1]");
  limit->add_option("--lambda", o.lambda_arg, "exact rational a in [0,1]");
  limit->add_option("--ell", o.ell, "cardinality for lambda at ell/3^n");
  limit->add_option("--n", o.n, "depth for lambda at ell/3^n");
  limit->add_option("--out", o.out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (graph->parsed()) return run_graph(o);
    if (profile->parsed()) return run_profile(o);
    if (boundary->parsed()) return run_boundary(o);
    if (solve->parsed()) return run_solve(o);
    if (verify->parsed()) return run_verify(o);
    if (poset->parsed()) return run_poset(o);
    if (limit->parsed()) return run_limit(o);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
