#pragma once

// Exhaustive ground truth for small graphs: minimum boundary per cardinality
// over every subset (Gray-code sweep with O(1) updates per step), the same
// restricted to stabilization-order ideals, nested-solution detection, and
// the verification entry points the CLI exposes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/eip.hpp"
#include "sierpinski/graphs.hpp"
#include "sierpinski/posets.hpp"
#include "sierpinski/steiner.hpp"

namespace sierpinski {

struct OracleOptions {
  int jobs = 1;
  std::uint64_t budget_subsets = std::uint64_t{1} << 28;
  std::uint64_t budget_ideals = std::uint64_t{1} << 24;
};

struct ProfileResult {
  std::vector<std::uint64_t> minima;  // index = cardinality
  std::vector<Mask> witnesses;        // numerically least optimal set per cardinality
  std::uint64_t subsets_examined = 0;
  double elapsed_ms = 0;
};

// Sweeps all 2^|V| subsets. The decoration may be null (plain boundary);
// graphs must have at most 30 vertices and fit the subset budget. Results
// are independent of the worker count: workers own disjoint top-bit
// prefixes and merges prefer smaller boundary, then smaller mask.
ProfileResult exact_profile(const Graph& g, const Decoration* dec,
                            const OracleOptions& opt);

// Minimum decorated boundary per cardinality over ideals of the
// stabilization order only (vertex masks from stable_sets).
ProfileResult exact_profile_ideals(const Graph& g, const Decoration* dec,
                                   const OracleOptions& opt);

struct NestedResult {
  bool exists = false;
  std::vector<Mask> chain;     // one optimal set per cardinality when nested
  std::uint64_t break_ell = 0; // least cardinality unreachable by extensions
};
// A nested family exists iff some chain of one-element extensions passes
// through an optimal set at every cardinality.
NestedResult nested_solutions(const Graph& g, const OracleOptions& opt);

struct SubadditivityViolation {
  std::uint64_t x, y;
};
// f over Z_N (N = f.size()): requires f[0] = 0 and
// f[(x+y) mod N] <= f[x] + f[y] for x, y != 0; strict when strong.
std::optional<SubadditivityViolation> check_subadditive(
    const std::vector<std::uint64_t>& f, bool strong);

struct Report {
  std::string claim;
  std::string scope;
  std::string status;  // "verified" | "counterexample" | "budget-exceeded"
  std::string witness;
  std::uint64_t checked = 0;
  double elapsed_ms = 0;
};
std::string report_json(const Report& r);

Report verify_lex_optimal(int n, int m, const OracleOptions& opt);
Report verify_lex_optimal_decorated(int n, int m, int s, int t, const OracleOptions& opt);
// Ideal-restricted variant over every decoration of S(n,m).
Report verify_lex_optimal_ideals(int n, int m, const OracleOptions& opt);
// Minimum boundary >= m-1 on S(n,m) with equality exactly at powers of m
// and their complements.
Report verify_min_boundary_sierpinski(int n, int m, const OracleOptions& opt);
// Minimum boundary >= 2 on the gasket quotient with the claimed equality
// sizes (3^k + 3)/2; reports honestly when the equality part fails.
Report verify_min_boundary_quotient(int n, const OracleOptions& opt);
Report verify_nested(const Graph& g, const std::string& scope, const OracleOptions& opt);
Report verify_profile_subadditive(int max_n, const OracleOptions& opt);

// The case grid: ideals of the two-digit component of S(2,m) crossed with
// decorations, the duality pairing on cases, and the merge-delta sweep.
struct CaseId {
  std::uint64_t ideal;  // local mask over the two-digit component
  int s, t;
};
struct CaseGrid {
  StabComponent component;  // the two-digit component of S(2,m)
  std::vector<CaseId> cases;
};
CaseGrid enumerate_cases(int m);
CaseId dual_case(const CaseGrid& grid, int m, const CaseId& c);
std::uint64_t count_case_orbits(int m);

struct CaseSweepRow {
  CaseId id;
  bool applicable = false;       // some stable compressed set matches the case
  std::int64_t max_delta = 0;
  Mask witness = 0;              // a set attaining max_delta
};
// For every case, the largest boundary change of the section merge over
// stable compressed sets S of S(2,m) whose two-digit part equals the case
// ideal. Nonpositive deltas everywhere mean the merge never hurts.
std::vector<CaseSweepRow> sweep_cases(int m);

}  // namespace sierpinski
