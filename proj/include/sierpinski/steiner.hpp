#pragma once

// Set-rearrangement operations on decorated Sierpinski graphs S_{s,t}(N,m):
// pairwise stabilization, per-section compression toward permuted Lex
// segments, the two potentials that bound compression rounds, and the merge
// of the two extreme partial sections. Sets are vertex bitmasks (m^N <= 64).

#include <cstdint>
#include <string>
#include <vector>

#include "sierpinski/eip.hpp"
#include "sierpinski/graphs.hpp"
#include "sierpinski/words.hpp"

namespace sierpinski {

using Mask = std::uint64_t;

struct SteinerContext {
  int N, m;
  Decoration dec;
  WordSpace ws;      // words of length N
  WordSpace ws_sub;  // section subwords, length N-1
  Graph g;           // materialized S(N,m)
  std::uint64_t section_size;

  SteinerContext(int N_, int m_, Decoration dec_);

  Mask section_mask(int h) const;
  std::uint64_t section_count(Mask S, int h) const;
  std::vector<std::uint64_t> ell_vector(Mask S) const;
  Code corner_word(int i, int j) const;  // the word i j^(N-1)
  std::vector<char> membership(Mask S) const;
  std::uint64_t boundary(Mask S) const;  // decorated
};

// Edge cut split into the part inside sections, the part between sections,
// and the decoration part. Their sum is the decorated boundary.
struct BoundaryParts {
  std::uint64_t interior = 0, exterior = 0, corner = 0;
  std::uint64_t total() const { return interior + exterior + corner; }
};
BoundaryParts boundary_parts(const SteinerContext& ctx, Mask S);

// Per-section digit classes seen from section h: a digit i != h is
// attracting (I) when the corner word i h^(N-1) lies in S, repelling (K)
// otherwise; h itself inherits its global decoration class. The section
// order ranks I ascending, then J, then K.
struct SectionOrder {
  std::vector<int> I, J, K;
  std::vector<int> perm;  // digit -> rank
};
SectionOrder section_order(const SteinerContext& ctx, Mask S, int h);

// Replaces the section-h part of S by the first |S ∩ section h| subwords in
// the section order computed from S.
Mask compress(const SteinerContext& ctx, Mask S, int h);
bool is_compressed(const SteinerContext& ctx, Mask S, int h);
bool is_compressed(const SteinerContext& ctx, Mask S);

// For each orbit {v, (i j)v} with exactly one member in S, keeps the member
// on the chamber side of the pair (first {i,j} digit is i).
Mask stabilize(const SteinerContext& ctx, Mask S, int i, int j);
bool is_stable(const SteinerContext& ctx, Mask S);

struct FixpointResult {
  Mask result = 0;
  int rounds = 0;  // full sweeps that changed something
};
// Cycles h = 0..m-1 until a full cycle is the identity.
FixpointResult compress_fix(const SteinerContext& ctx, Mask S);
// Cycles all pairs (i,j), i < j, ascending, until a full sweep is the identity.
FixpointResult stabilize_fix(const SteinerContext& ctx, Mask S);

// tau: the number of external edges (between sections, or decoration
// pendants) cut by S, each counted once.
std::uint64_t tau(const SteinerContext& ctx, Mask S);

// rho: the weighted potential over ordered digit pairs (i,j); the corner
// word i j^(N-1) contributes m-j when it is missing from S but attracting
// (j in I_i), and j when present but repelling (j in K_i). Once every
// section is a permuted segment (automatic for N = 2, and one full sweep
// establishes it in general), compress_fix takes at most 1 + m * rho(S)
// further productive sweeps. A single compression can raise rho by
// rewriting corners that other sections read.
std::uint64_t rho(const SteinerContext& ctx, Mask S);

// Merge of the two extreme partial sections: the lowest non-full section
// h_min absorbs the content of the highest non-empty section h_max (over-
// flow beyond a full section stays at h_max), both rewritten as initial
// segments of their section orders. Requires S stable and compressed.
struct MergeResult {
  Mask result = 0;
  bool already_segment = false;  // h_min >= h_max: nothing to merge
  std::int64_t d_interior = 0, d_exterior = 0, d_corner = 0;
  std::int64_t delta() const { return d_interior + d_exterior + d_corner; }
};
MergeResult subadditivate(const SteinerContext& ctx, Mask S);

// The full-graph order that ranks words by perm-relabeled digits; segments
// of it are the stable compressed model sets.
Mask lex_perm_segment(const SteinerContext& ctx, const std::vector<int>& perm,
                      std::uint64_t ell);

// Compression in a cartesian product G x H toward a fixed numbering of G
// (vertex index order): every column G x {w} is replaced by the first
// ell_w vertices of G. Vertices of the product are indexed v*|V_H| + w.
Graph cartesian_product(const Graph& G, const Graph& H);
std::vector<std::uint64_t> product_columns(const Graph& G, const Graph& H, Mask S);
Mask product_compress(const Graph& G, const Graph& H, Mask S);
// Sum of G-profile values per column plus column differences across H-edges;
// a lower bound for the cut of any S with those column counts.
std::uint64_t product_lower_bound(const std::vector<std::uint64_t>& g_profile,
                                  const Graph& H,
                                  const std::vector<std::uint64_t>& columns);

// One JSONL line per fixpoint step: operation, ell vector, boundary, tau, rho.
struct TraceEntry {
  std::string op;
  std::vector<std::uint64_t> ell;
  std::uint64_t boundary = 0, tau_value = 0, rho_value = 0;
};
std::string trace_jsonl(const std::vector<TraceEntry>& entries);
TraceEntry make_trace_entry(const SteinerContext& ctx, const std::string& op, Mask S);

}  // namespace sierpinski
