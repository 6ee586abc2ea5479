#include <doctest.h>

#include "c2lat/actions.hpp"
#include "c2lat/classifier.hpp"
#include "c2lat/graph_aut.hpp"
#include "c2lat/library.hpp"
#include "c2lat/pipeline.hpp"

using namespace c2lat;

TEST_SUITE("library") {
  TEST_CASE("orders match the expected values") {
    for (int i = 1; i <= 35; ++i) {
      CAPTURE(i);
      CHECK(library_group(i).group.order() == library_expected_order(i));
      CHECK(library_table(i).size() == library_expected_order(i));
    }
    CHECK_THROWS(library_group(0));
    CHECK_THROWS(library_group(36));
  }

  TEST_CASE("targets by index") {
    CHECK(library_target(1) == Target::Q);
    CHECK(library_target(11) == Target::Q);
    CHECK(library_target(12) == Target::K44);
    CHECK(library_target(21) == Target::K44);
    CHECK(library_target(22) == Target::K66);
    CHECK(library_target(35) == Target::K66);
  }

  TEST_CASE("each action is edge-regular on its target") {
    for (int i = 1; i <= 35; ++i) {
      CAPTURE(i);
      const auto& a = library_action(i);
      const auto tg = target_graph(a.target);
      CHECK(a.group.order() == tg.num_edges());
      const auto& lg = library_group(i);
      auto cg = coset_graph(lg.group, lg.edges.b, lg.edges.a);
      CHECK(graph_isomorphism(cg.graph, tg, true));
    }
  }

  TEST_CASE("action isomorphism is reflexive and detects differences") {
    CHECK(actions_isomorphic(library_action(13), library_action(13), true));
    CHECK_FALSE(actions_isomorphic(library_action(13), library_action(18), false));
    CHECK_FALSE(actions_isomorphic(library_action(1), library_action(2), false));
  }

  TEST_CASE("edge swap list") {
    auto c = verify_swap_list();
    CHECK_MESSAGE(c.ok, c.detail);
    CHECK(swap_list() == std::vector<int>{12, 13, 16, 17, 22, 25, 26, 29});
  }

  TEST_CASE("K4,4 actions pairwise non-isomorphic") {
    for (const auto& c : verify_library_actions(Target::K44)) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
  }
}
