#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "sierpinski/eip.hpp"
#include "sierpinski/posets.hpp"
#include "sierpinski/steiner.hpp"

using namespace sierpinski;

namespace {

int popcount(Mask S) { return __builtin_popcountll(S); }

std::vector<SteinerContext> contexts_23() {
  std::vector<SteinerContext> out;
  for (const Decoration& dec : all_decorations(3)) out.emplace_back(2, 3, dec);
  return out;
}

Mask section_segment(const SteinerContext& ctx, int h, const std::vector<int>& perm,
                     std::uint64_t ell) {
  Mask out = 0;
  for (std::uint64_t r = 0; r < ell; ++r)
    out |= Mask{1} << (h * ctx.section_size + ctx.ws_sub.unrank_permuted(r, perm));
  return out;
}

}  // namespace

TEST_CASE("context geometry") {
  SteinerContext ctx(2, 3, plain_decoration(3));
  CHECK(ctx.section_size == 3);
  CHECK(ctx.section_mask(0) == 0b000000111);
  CHECK(ctx.section_mask(2) == 0b111000000);
  CHECK(ctx.corner_word(1, 2) == ctx.ws.parse("12"));
  Mask S = (Mask{1} << ctx.ws.parse("00")) | (Mask{1} << ctx.ws.parse("12"));
  CHECK(ctx.ell_vector(S) == std::vector<std::uint64_t>{1, 1, 0});
  CHECK_THROWS_AS(SteinerContext(1, 3, plain_decoration(3)), std::invalid_argument);
}

TEST_CASE("boundary agrees with the direct decorated evaluation") {
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      CHECK(ctx.boundary(S) == decorated_boundary(ctx.g, ctx.dec, ctx.membership(S)));
      BoundaryParts parts = boundary_parts(ctx, S);
      CHECK(parts.total() == ctx.boundary(S));
      CHECK(tau(ctx, S) == parts.exterior + parts.corner);
    }
  }
}

TEST_CASE("compression preserves cardinality, never raises the boundary") {
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      for (int h = 0; h < 3; ++h) {
        Mask C = compress(ctx, S, h);
        CHECK(popcount(C) == popcount(S));
        CHECK(ctx.boundary(C) <= ctx.boundary(S));
        CHECK(is_compressed(ctx, C, h));
      }
    }
  }
}

TEST_CASE("a single compression can raise the corner potential") {
  // Compressing section 1 of {11} moves its corner to 10; section 0 then
  // reads digit 1 as attracting and charges m - 1 for the missing corner
  // 01.  rho budgets full sweeps (below), not single compressions.
  SteinerContext ctx(2, 3, Decoration{0, 0});
  Mask S = Mask{1} << ctx.ws.parse("11");
  Mask C = compress(ctx, S, 1);
  CHECK(C == (Mask{1} << ctx.ws.parse("10")));
  CHECK(rho(ctx, S) == 1);
  CHECK(rho(ctx, C) == 2);
  CHECK(ctx.boundary(C) == ctx.boundary(S));
}

TEST_CASE("compression is not monotone") {
  SteinerContext ctx(2, 3, plain_decoration(3));
  Mask S = Mask{1} << ctx.ws.parse("01");
  Mask T = S | (Mask{1} << ctx.ws.parse("10"));
  CHECK(compress(ctx, S, 0) == (Mask{1} << ctx.ws.parse("00")));
  CHECK(compress(ctx, T, 0) == T);
  CHECK((compress(ctx, S, 0) & ~compress(ctx, T, 0)) != 0);  // S ⊂ T but not after
}

TEST_CASE("stabilization satisfies the Steiner operation properties") {
  for (const SteinerContext& ctx : contexts_23()) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        std::vector<Mask> table(512);
        for (Mask S = 0; S < 512; ++S) {
          table[S] = stabilize(ctx, S, i, j);
          CHECK(popcount(table[S]) == popcount(S));
          CHECK(ctx.boundary(table[S]) <= ctx.boundary(S));
          CHECK(stabilize(ctx, table[S], i, j) == table[S]);
        }
        // Monotone: S ⊆ T ⇒ Stab(S) ⊆ Stab(T), over all nested pairs.
        for (Mask T = 0; T < 512; ++T)
          for (Mask S = T; ; S = (S - 1) & T) {
            CHECK((table[S] & ~table[T]) == 0);
            if (S == 0) break;
          }
      }
    }
  }
}

TEST_CASE("a set fixed by the adjacent pairs need not be stable") {
  SteinerContext ctx(2, 3, plain_decoration(3));
  WordSpace& ws = ctx.ws;
  Mask S = (Mask{1} << ws.parse("01")) | (Mask{1} << ws.parse("10")) |
           (Mask{1} << ws.parse("20"));
  CHECK(stabilize(ctx, S, 0, 1) == S);
  CHECK(stabilize(ctx, S, 1, 2) == S);
  CHECK(stabilize(ctx, S, 0, 2) != S);
  CHECK_FALSE(is_stable(ctx, S));
}

TEST_CASE("stable sets are exactly the stabilization-order ideals") {
  SteinerContext ctx(2, 3, plain_decoration(3));
  std::set<Mask> ideals;
  for (Mask S : stable_sets(ctx.ws, 1000)) ideals.insert(S);
  for (Mask S = 0; S < 512; ++S) CHECK(is_stable(ctx, S) == (ideals.count(S) > 0));

  SteinerContext ctx4(2, 4, plain_decoration(4));
  std::set<Mask> ideals4;
  for (Mask S : stable_sets(ctx4.ws, 1000)) ideals4.insert(S);
  std::uint64_t stable_count = 0;
  for (Mask S = 0; S < 65536; ++S)
    if (is_stable(ctx4, S)) {
      ++stable_count;
      CHECK(ideals4.count(S) > 0);
    }
  CHECK(stable_count == 140);
}

TEST_CASE("stabilize_fix reaches a stable set") {
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      FixpointResult fr = stabilize_fix(ctx, S);
      CHECK(is_stable(ctx, fr.result));
      CHECK(popcount(fr.result) == popcount(S));
      CHECK(ctx.boundary(fr.result) <= ctx.boundary(S));
    }
  }
}

TEST_CASE("compress_fix converges within 1 + m*rho productive sweeps") {
  // One-digit subwords make every section a permuted segment, so the bound
  // holds for arbitrary sets.
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      FixpointResult fr = compress_fix(ctx, S);
      CHECK(is_compressed(ctx, fr.result));
      CHECK(popcount(fr.result) == popcount(S));
      CHECK(static_cast<std::uint64_t>(fr.rounds) <= 1 + 3 * rho(ctx, S));
    }
  }
  // Longer subwords need a normalizing sweep first: a raw set can spend a
  // productive sweep at rho zero while the first compressions rewrite the
  // corners later sections read.
  SteinerContext ctx33(3, 3, plain_decoration(3));
  Mask raw = 0;
  for (const char* w : {"022", "122", "200", "211"})
    raw |= Mask{1} << ctx33.ws.parse(w);
  CHECK(rho(ctx33, raw) == 0);
  CHECK(compress_fix(ctx33, raw).rounds == 2);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Mask S = rng() & ((Mask{1} << 27) - 1);
    Mask T = S;
    for (int h = 0; h < 3; ++h) T = compress(ctx33, T, h);
    FixpointResult fr = compress_fix(ctx33, T);
    CHECK(is_compressed(ctx33, fr.result));
    CHECK(popcount(fr.result) == popcount(S));
    CHECK(static_cast<std::uint64_t>(fr.rounds) <= 1 + 3 * rho(ctx33, T));
  }
}

TEST_CASE("stabilization maps a compressed section to a derived segment") {
  // When the section-count vector is unchanged, the h-section afterwards is
  // the initial segment of the order derived from the original set, except
  // that the stabilized pair may be transposed in it.
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      for (int h = 0; h < 3; ++h) {
        if (!is_compressed(ctx, S, h)) continue;
        SectionOrder so = section_order(ctx, S, h);
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            Mask T = stabilize(ctx, S, i, j);
            if (ctx.ell_vector(T) > ctx.ell_vector(S)) continue;
            std::vector<int> swapped = so.perm;
            std::swap(swapped[i], swapped[j]);
            Mask sec = T & ctx.section_mask(h);
            std::uint64_t ell = ctx.section_count(T, h);
            CHECK((sec == section_segment(ctx, h, so.perm, ell) ||
                   sec == section_segment(ctx, h, swapped, ell)));
          }
      }
    }
  }
}

TEST_CASE("stabilization can break the compression fixed point") {
  // {00,12} is 0-compressed.  Stabilizing (0,2) moves 12 to 10 with section
  // counts unchanged; the arriving corner 10 makes digit 1 attracting for
  // section 0, so the unchanged 0-section is no longer first in the new
  // derived order.
  SteinerContext ctx(2, 3, plain_decoration(3));
  WordSpace& ws = ctx.ws;
  Mask S = (Mask{1} << ws.parse("00")) | (Mask{1} << ws.parse("12"));
  REQUIRE(is_compressed(ctx, S, 0));
  Mask T = stabilize(ctx, S, 0, 2);
  CHECK(T == ((Mask{1} << ws.parse("00")) | (Mask{1} << ws.parse("10"))));
  CHECK(ctx.ell_vector(T) == ctx.ell_vector(S));
  CHECK_FALSE(is_compressed(ctx, T, 0));
}

TEST_CASE("full stabilization of a compressed set") {
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      if (!is_compressed(ctx, S)) continue;
      Mask T = stabilize_fix(ctx, S).result;
      bool ell_grew = ctx.ell_vector(T) > ctx.ell_vector(S);
      CHECK((ell_grew || is_compressed(ctx, T)));
    }
  }
}

TEST_CASE("permuted segments map to permuted segments under stabilization") {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const SteinerContext& ctx : contexts_23()) {
    for (const auto& perm : perms) {
      for (std::uint64_t ell = 0; ell <= 9; ++ell) {
        Mask S = lex_perm_segment(ctx, perm, ell);
        CHECK(popcount(S) == static_cast<int>(ell));
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            Mask T = stabilize(ctx, S, i, j);
            if (perm[i] < perm[j]) {
              CHECK(T == S);
            } else {
              std::vector<int> swapped = perm;
              std::swap(swapped[i], swapped[j]);
              CHECK(T == lex_perm_segment(ctx, swapped, ell));
            }
          }
      }
    }
  }
}

TEST_CASE("identity Lex segments are stable and compressed") {
  SteinerContext ctx(2, 3, plain_decoration(3));
  for (std::uint64_t ell = 0; ell <= 9; ++ell) {
    Mask S = (ell == 0) ? 0 : ((Mask{1} << ell) - 1);  // vertices are in Lex order
    CHECK(is_stable(ctx, S));
    CHECK(is_compressed(ctx, S));
  }
}

TEST_CASE("the merge needs a stable compressed input") {
  SteinerContext ctx(2, 3, plain_decoration(3));
  CHECK_THROWS_AS(subadditivate(ctx, Mask{1} << ctx.ws.parse("10")), std::invalid_argument);
  CHECK_THROWS_AS(subadditivate(ctx, Mask{1} << ctx.ws.parse("01")), std::invalid_argument);
}

TEST_CASE("the merge preserves cardinality and accounts its delta") {
  for (const SteinerContext& ctx : contexts_23()) {
    for (Mask S = 0; S < 512; ++S) {
      if (!is_stable(ctx, S) || !is_compressed(ctx, S)) continue;
      MergeResult mr = subadditivate(ctx, S);
      CHECK(popcount(mr.result) == popcount(S));
      std::int64_t diff = static_cast<std::int64_t>(ctx.boundary(mr.result)) -
                          static_cast<std::int64_t>(ctx.boundary(S));
      CHECK(mr.delta() == diff);
      CHECK(mr.delta() <= 0);
      if (mr.already_segment) CHECK(mr.result == S);
    }
  }
}

TEST_CASE("product compression on K_3 x K_3") {
  Graph K3 = hamming_graph(1, 3);
  Graph P = cartesian_product(K3, K3);
  CHECK(P.num_vertices() == 9);
  CHECK(P.num_edges() == 18);
  auto k3_profile = lex_profile(K3);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    Mask S = rng() & ((Mask{1} << 9) - 1);
    Mask C = product_compress(K3, K3, S);
    CHECK(popcount(C) == popcount(S));
    std::vector<char> inS(9), inC(9);
    for (int v = 0; v < 9; ++v) inS[v] = (S >> v) & 1, inC[v] = (C >> v) & 1;
    CHECK(cut_edges(P, inC) <= cut_edges(P, inS));
    CHECK(product_compress(K3, K3, C) == C);
    auto cols = product_columns(K3, K3, S);
    CHECK(product_lower_bound(k3_profile, K3, cols) <= cut_edges(P, inS));
  }
}

TEST_CASE("product compression on the cube") {
  Graph K2 = hamming_graph(1, 2);
  Graph C4 = cartesian_product(K2, K2);
  Graph Q3 = cartesian_product(K2, C4);
  CHECK(Q3.num_vertices() == 8);
  CHECK(Q3.num_edges() == 12);
  auto k2_profile = lex_profile(K2);

  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 500; ++trial) {
    Mask S = rng() & 0xFF;
    Mask C = product_compress(K2, C4, S);
    CHECK(popcount(C) == popcount(S));
    std::vector<char> inS(8), inC(8);
    for (int v = 0; v < 8; ++v) inS[v] = (S >> v) & 1, inC[v] = (C >> v) & 1;
    CHECK(cut_edges(Q3, inC) <= cut_edges(Q3, inS));
    auto cols = product_columns(K2, C4, S);
    CHECK(product_lower_bound(k2_profile, C4, cols) <= cut_edges(Q3, inS));
  }
}

TEST_CASE("fixpoint traces serialize one JSON object per line") {
  SteinerContext ctx(2, 3, Decoration{1, 1});
  Mask S = (Mask{1} << ctx.ws.parse("10")) | (Mask{1} << ctx.ws.parse("21"));
  std::vector<TraceEntry> trace;
  trace.push_back(make_trace_entry(ctx, "input", S));
  trace.push_back(make_trace_entry(ctx, "stabilize", stabilize_fix(ctx, S).result));
  std::string text = trace_jsonl(trace);
  std::size_t lines = 0, pos = 0;
  while ((pos = text.find('\n', pos)) != std::string::npos) ++lines, ++pos;
  CHECK(lines == 2);
  auto first = nlohmann::json::parse(text.substr(0, text.find('\n')));
  CHECK(first["op"] == "input");
  CHECK(first["boundary"].is_number_unsigned());
  CHECK(first["ell"].is_array());
  CHECK(first["tau"].is_number_unsigned());
  CHECK(first["rho"].is_number_unsigned());
}
