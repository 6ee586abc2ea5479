#include <doctest.h>

#include <queue>
#include <random>

#include "c2lat/geometry.hpp"
#include "c2lat/graph_aut.hpp"
#include "c2lat/library.hpp"

using namespace c2lat;

namespace {

constexpr std::size_t kInf = static_cast<std::size_t>(-1);

// Shortest u-v path avoiding the edge {u, v}, plus one.
std::optional<std::size_t> naive_girth(const BipartiteGraph& g) {
  std::size_t best = kInf;
  const std::size_t n = g.num_vertices();
  for (std::uint32_t u = 0; u < n; ++u)
    for (auto v : g.adj[u]) {
      if (v < u) continue;
      std::vector<std::size_t> d(n, kInf);
      std::queue<std::uint32_t> q;
      d[u] = 0;
      q.push(u);
      while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto y : g.adj[x]) {
          if ((x == u && y == v) || (x == v && y == u)) continue;
          if (d[y] == kInf) {
            d[y] = d[x] + 1;
            q.push(y);
          }
        }
      }
      if (d[v] != kInf) best = std::min(best, d[v] + 1);
    }
  if (best == kInf) return std::nullopt;
  return best;
}

std::optional<std::size_t> naive_diameter(const BipartiteGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (auto j : g.adj[i]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t out = 0;
  for (auto& row : d)
    for (auto x : row) {
      if (x == kInf) return std::nullopt;
      out = std::max(out, x);
    }
  return out;
}

BipartiteGraph random_bipartite(std::mt19937& rng, std::size_t n0, std::size_t n1, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n0; ++i)
    for (std::uint32_t j = 0; j < n1; ++j)
      if (coin(rng)) edges.push_back({i, static_cast<std::uint32_t>(n0 + j)});
  return BipartiteGraph::from_edges(n0, n1, edges);
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("GF(4) is a field with alpha^2 = alpha + 1") {
    using namespace gf4;
    CHECK(mul(kAlpha, kAlpha) == add(kAlpha, 1));
    for (Elem a = 0; a < 4; ++a) {
      CHECK(add(a, a) == 0);
      for (Elem b = 0; b < 4; ++b) {
        CHECK(mul(a, b) == mul(b, a));
        for (Elem c = 0; c < 4; ++c) CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      }
      if (a) CHECK(mul(a, inv(a)) == 1);
    }
    CHECK_THROWS(inv(0));
  }

  TEST_CASE("F2 matrices") {
    auto id = F2Matrix::identity();
    CHECK(id.order() == 1);
    for (int i = 1; i <= 6; ++i) CHECK(id.apply(basis(i)) == basis(i));
    auto z = F2Matrix{};
    CHECK_FALSE(z.invertible());
    CHECK_THROWS(z.order());
  }

  TEST_CASE("Q counts and polygon order") {
    auto q = build_Q();
    CHECK(q.num_points == 64);
    CHECK(q.num_lines == 96);
    CHECK(q.flags.size() == 384);
    auto pc = is_generalized_polygon(q, 4);
    REQUIRE(pc);
    CHECK(*pc.order == std::pair<std::size_t, std::size_t>{3, 5});
    CHECK_FALSE(is_generalized_polygon(q, 3));
    auto g = incidence_graph(q);
    CHECK(girth(g) == 8u);
    CHECK(diameter(g) == 4u);
  }

  TEST_CASE("complete bipartite graphs are generalized digons") {
    for (std::size_t m = 2; m <= 6; ++m) {
      auto g = incidence_graph(build_Kmm(m));
      CHECK(g.num_edges() == m * m);
      auto pc = is_generalized_polygon(g, 2);
      REQUIRE(pc);
      CHECK(pc.order->first == m - 1);
    }
    CHECK_THROWS(build_Kmm(1));
  }

  TEST_CASE("girth and diameter agree with naive oracles") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n0 = 2 + rng() % 40, n1 = 2 + rng() % 40;
      const double p = 0.03 + 0.3 * (rng() % 100) / 100.0;
      auto g = random_bipartite(rng, n0, n1, p);
      CHECK(girth(g) == naive_girth(g));
      CHECK(diameter(g) == naive_diameter(g));
    }
    // Larger sparse graphs up to 200 vertices.
    for (int trial = 0; trial < 5; ++trial) {
      auto g = random_bipartite(rng, 100, 100, 0.04);
      CHECK(girth(g) == naive_girth(g));
      CHECK(diameter(g) == naive_diameter(g));
    }
    CHECK(girth(incidence_graph(build_Q())) == naive_girth(incidence_graph(build_Q())));
  }

  TEST_CASE("coset graphs of library groups") {
    const auto& l1 = library_group(1);
    auto cg = coset_graph(l1.group, l1.edges.b, l1.edges.a);
    CHECK(cg.graph.n0 == 64);
    CHECK(cg.graph.n1 == 96);
    CHECK(graph_isomorphism(cg.graph, incidence_graph(build_Q()), true));
    const auto& l12 = library_group(12);
    auto k = coset_graph(l12.group, l12.edges.b, l12.edges.a);
    CHECK(graph_isomorphism(k.graph, incidence_graph(build_Kmm(4)), true));
    CHECK_THROWS(coset_graph(l1.group, l1.edges.a, l1.edges.a));
  }

  TEST_CASE("adjacency export format") {
    auto g = BipartiteGraph::from_edges(1, 2, {{0, 1}, {0, 2}});
    CHECK(export_adjacency(g) == "0 1 2\n1 0\n1 0\n");
    CHECK_THROWS(BipartiteGraph::from_edges(2, 1, {{0, 1}}));
  }
}
