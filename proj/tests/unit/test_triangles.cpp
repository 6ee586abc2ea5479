#include <doctest.h>

#include "c2lat/library.hpp"
#include "c2lat/triangles.hpp"

using namespace c2lat;

TEST_SUITE("triangles") {
  TEST_CASE("angles from girths") {
    CHECK(angle_from_girth(8).str() == "pi/4");
    CHECK(angle_from_girth(4).str() == "pi/2");
    CHECK(angle_from_girth(6).str() == "pi/3");
    CHECK((angle_from_girth(8) + angle_from_girth(8) + angle_from_girth(4)).str() == "pi");
    CHECK((angle_from_girth(4) + angle_from_girth(4) + angle_from_girth(4)).str() == "3pi/2");
    CHECK(euclidean_angles({8, 8, 4}));
    CHECK(euclidean_angles({6, 6, 6}));
    CHECK_FALSE(euclidean_angles({4, 4, 4}));
    CHECK_FALSE(euclidean_angles({8, 8, 8}));
  }

  TEST_CASE("a type 1 triangle satisfies the criterion") {
    Family f{1, 1, 1, 12};
    auto c = count_family(f);
    REQUIRE(!c.tp_reps.empty());
    for (const auto& g : c.tp_reps) {
      auto t = make_triangle(f, g);
      std::array<std::size_t, 3> girths{};
      for (int i = 1; i <= 3; ++i) girths[i - 1] = local_action(t, i).girth;
      CHECK(girths == std::array<std::size_t, 3>{8, 8, 4});
      auto v = check_building_criterion(t);
      CHECK_MESSAGE(v.building, v.failure);
      CHECK(v.angle_sum.str() == "pi");
      CHECK(v.links[0] == "(3,5)");
      CHECK(v.links[2] == "K4,4");
    }
  }

  TEST_CASE("a type 2 triangle has K6,6 on the third vertex") {
    Family f{2, 1, 1, 24};
    auto c = count_family(f);
    REQUIRE(!c.tp_reps.empty());
    auto v = check_building_criterion(make_triangle(f, c.tp_reps.front()));
    CHECK_MESSAGE(v.building, v.failure);
    CHECK(v.links[0] == "(3,5)");
    CHECK(v.links[1] == "(3,5)");
    CHECK(v.links[2] == "K6,6");
  }

  TEST_CASE("every class representative of a few families builds") {
    for (Family f : {Family{1, 6, 6, 12}, Family{2, 2, 4, 27}, Family{2, 2, 2, 29}}) {
      CAPTURE(f.name());
      for (const auto& g : count_family(f).tp_reps) CHECK(check_building_criterion(make_triangle(f, g)).building);
    }
  }

  TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(make_triangle(Family{1, 1, 2, 12}, Gammas{}), TriangleError);
    CHECK_THROWS_AS(make_triangle(Family{1, 1, 1, 12}, std::vector<std::string>{"id", "id", "x", "id", "id", "id"}),
                    TriangleError);
    CHECK_THROWS_AS(make_triangle(Family{1, 1, 1, 12}, std::vector<std::string>{"id"}), TriangleError);
  }

  TEST_CASE("fundamental presentation") {
    Family f{1, 1, 1, 12};
    auto t = make_triangle(f, count_family(f).tp_reps.front());
    auto p = fundamental_presentation(t);
    std::size_t gens = 0, rels = 0, ident = 0;
    for (int j = 1; j <= 3; ++j) {
      const auto& vp = library_group(t.vertex[j - 1]).presentation;
      gens += vp.rank();
      rels += vp.relators.size();
    }
    for (int i = 1; i <= 3; ++i) ident += edge_model(t.edge[i - 1]).rank();
    CHECK(p.rank() == gens);
    CHECK(p.relators.size() == rels + ident);
    CHECK(p.generator_names().front().rfind("v1_", 0) == 0);
    const auto& v1 = library_group(t.vertex[0]).presentation;
    for (std::size_t k = 0; k < v1.relators.size(); ++k) CHECK(p.relators[k] == v1.relators[k]);
  }
}
