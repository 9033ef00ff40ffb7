#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>

#include "sierpinski/graphs.hpp"

using namespace sierpinski;

TEST_CASE("vertex and edge counts match the closed formulas") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      Graph g = sierpinski_graph(n, m);
      CHECK(g.num_vertices() == pow_checked(m, n));
      CHECK(g.num_vertices() == sierpinski_vertex_count(n, m));
      CHECK(g.num_edges() == (pow_checked(m, n + 1) - m) / 2);
      CHECK(g.num_edges() == sierpinski_edge_count(n, m));
    }
  }
}

TEST_CASE("S(n,2) is the path on 2^n vertices in code order") {
  for (int n = 1; n <= 10; ++n) {
    Graph g = sierpinski_graph(n, 2);
    std::uint64_t V = g.num_vertices();
    CHECK(g.num_edges() == V - 1);
    for (std::uint32_t k = 0; k + 1 < V; ++k) CHECK(g.adjacent(k, k + 1));
  }
}

TEST_CASE("corners have degree m-1, all other vertices degree m") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 2; m <= 4; ++m) {
      Graph g = sierpinski_graph(n, m);
      WordSpace ws(n, m);
      for (Code v = 0; v < ws.size(); ++v) {
        std::size_t want = is_corner(ws, v) ? m - 1 : m;
        CHECK(g.adj[v].size() == want);
      }
    }
  }
}

TEST_CASE("exterior partner is an involution on non-corners") {
  WordSpace ws(3, 3);
  CHECK(exterior_partner(ws, ws.parse("011")) == ws.parse("100"));
  CHECK(exterior_partner(ws, ws.parse("100")) == ws.parse("011"));
  CHECK(exterior_partner(ws, ws.parse("012")) == ws.parse("021"));
  CHECK_FALSE(exterior_partner(ws, ws.parse("000")).has_value());
  for (Code v = 0; v < ws.size(); ++v) {
    auto p = exterior_partner(ws, v);
    CHECK(p.has_value() == !is_corner(ws, v));
    if (p) CHECK(exterior_partner(ws, *p) == v);
  }
}

TEST_CASE("interior cliques partition vertices into m-cliques") {
  WordSpace ws(3, 3);
  auto bases = clique_bases(ws);
  CHECK(bases.size() == 9);  // m^(n-1) cliques
  Graph g = sierpinski_graph(3, 3);
  for (Code b : bases)
    for (int a = 0; a < 3; ++a)
      for (int c = a + 1; c < 3; ++c) CHECK(g.adjacent(b + a, b + c));
}

TEST_CASE("embedding separates neighbors at squared distance 2") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 2; m <= 4; ++m) {
      WordSpace ws(n, m);
      for (Code u = 0; u < ws.size(); ++u) {
        auto yu = embed(ws, u);
        std::uint64_t sum = 0;
        for (auto c : yu) sum += c;
        CHECK(sum == (std::uint64_t{1} << n) - 1);
        for (Code v = u + 1; v < ws.size(); ++v) {
          auto yv = embed(ws, v);
          std::int64_t d2 = 0;
          for (int j = 0; j < m; ++j) {
            std::int64_t d = static_cast<std::int64_t>(yu[j]) - static_cast<std::int64_t>(yv[j]);
            d2 += d * d;
          }
          CHECK((d2 == 2) == sierpinski_adjacent(ws, u, v));
        }
      }
    }
  }
}

TEST_CASE("quotient of S(2,3) is the triforce") {
  QuotientGraph q = quotient_graph(2, 3);
  CHECK(q.g.num_vertices() == 6);
  CHECK(q.g.num_edges() == 9);
  std::multiset<std::size_t> degrees;
  for (const auto& row : q.g.adj) degrees.insert(row.size());
  CHECK(degrees == std::multiset<std::size_t>{2, 2, 2, 4, 4, 4});
  // Classes are named by their Lex-least member.
  CHECK(q.g.names[0] == "00");
  CHECK(q.g.names[1] == "01");  // the class {01, 10}
  WordSpace ws(2, 3);
  CHECK(q.class_of[ws.parse("01")] == q.class_of[ws.parse("10")]);
  CHECK(q.class_of[ws.parse("00")] != q.class_of[ws.parse("01")]);
}

TEST_CASE("quotient counts follow the contraction formulas") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 3; m <= 4; ++m) {
      QuotientGraph q = quotient_graph(n, m);
      CHECK(q.g.num_vertices() == (pow_checked(m, n) + m) / 2);
      CHECK(q.g.num_vertices() == quotient_vertex_count(n, m));
      std::uint64_t interior = pow_checked(m, n - 1) * m * (m - 1) / 2;
      CHECK(q.g.num_edges() == interior);
      CHECK(q.g.num_edges() == quotient_edge_count(n, m));
    }
    CHECK(quotient_edge_count(n, 3) == pow_checked(3, n));
  }
  CHECK_THROWS_AS(quotient_graph(2, 2), std::invalid_argument);
}

TEST_CASE("hamming graphs") {
  Graph q3 = hamming_graph(3, 2);
  CHECK(q3.num_vertices() == 8);
  CHECK(q3.num_edges() == 12);
  CHECK(hamming_edge_count(3, 2) == 12);
  Graph k32 = hamming_graph(2, 3);
  CHECK(k32.num_vertices() == 9);
  CHECK(k32.num_edges() == 18);
  CHECK(hamming_vertex_count(2, 3) == 9);
  WordSpace ws(2, 3);
  CHECK(k32.adjacent(ws.parse("01"), ws.parse("21")));
  CHECK_FALSE(k32.adjacent(ws.parse("01"), ws.parse("12")));
}

TEST_CASE("edge list export carries the family header") {
  Graph g = sierpinski_graph(2, 3);
  std::string text = to_edge_list(g);
  CHECK(text.rfind("# family=sierpinski n=2 m=3\n", 0) == 0);
  QuotientGraph q = quotient_graph(2, 3);
  CHECK(to_edge_list(q.g).rfind("# family=quotient n=2 m=3\n", 0) == 0);
  CHECK(to_dot(g).rfind("graph", 0) == 0);
}
