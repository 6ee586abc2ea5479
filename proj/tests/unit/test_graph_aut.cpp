#include <doctest.h>

#include <random>

#include "c2lat/geometry.hpp"
#include "c2lat/graph_aut.hpp"
#include "c2lat/special_matrices.hpp"

using namespace c2lat;

namespace {

BipartiteGraph cycle(std::size_t half) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < half; ++i) {
    e.push_back({i, static_cast<std::uint32_t>(half + i)});
    e.push_back({(i + 1) % static_cast<std::uint32_t>(half), static_cast<std::uint32_t>(half + i)});
  }
  return BipartiteGraph::from_edges(half, half, e);
}

}  // namespace

TEST_SUITE("graph_aut") {
  TEST_CASE("small graphs") {
    CHECK(graph_automorphisms(incidence_graph(build_Kmm(4)), true).order() == 576);
    CHECK(graph_automorphisms(incidence_graph(build_Kmm(4)), false).order() == 1152);
    auto c6 = cycle(3);
    CHECK(girth(c6) == 6u);
    CHECK(diameter(c6) == 3u);
    CHECK(graph_automorphisms(c6, false).order() == 12);
    CHECK(graph_automorphisms(c6, true).order() == 6);
  }

  TEST_CASE("Aut(Q) under both cell rules equals the affine group") {
    auto g = incidence_graph(build_Q());
    auto a = graph_automorphisms(g, true, CellRule::FirstSmallest);
    auto b = graph_automorphisms(g, true, CellRule::FirstLargest);
    CHECK(a.order() == 138240);
    CHECK(b.order() == 138240);
    const auto& sm = special_matrices();
    auto affine = affine_group({sm.A, sm.C}, false);
    CHECK(a.contains(affine));
    CHECK(affine.contains(a));
    for (const auto& x : a.generators()) CHECK(is_graph_automorphism(g, x, true));
  }

  TEST_CASE("isomorphism recovers a random relabelling") {
    std::mt19937 rng(5);
    auto g = incidence_graph(build_Q());
    std::vector<Point> p0(64), p1(96);
    for (Point i = 0; i < 64; ++i) p0[i] = i;
    for (Point i = 0; i < 96; ++i) p1[i] = i;
    std::shuffle(p0.begin(), p0.end(), rng);
    std::shuffle(p1.begin(), p1.end(), rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t u = 0; u < 64; ++u)
      for (auto v : g.adj[u]) e.push_back({p0[u], 64 + p1[v - 64]});
    auto h = BipartiteGraph::from_edges(64, 96, e);
    auto iso = graph_isomorphism(g, h, true);
    REQUIRE(iso);
    for (std::uint32_t u = 0; u < 64; ++u)
      for (auto v : g.adj[u]) CHECK(h.adjacent((*iso)(u), (*iso)(v)));
    CHECK_FALSE(graph_isomorphism(g, incidence_graph(build_Kmm(4)), true));
  }
}
