#include <doctest.h>

#include "c2lat/group_iso.hpp"
#include "c2lat/group_table.hpp"
#include "c2lat/presentation.hpp"

using namespace c2lat;

TEST_SUITE("group") {
  TEST_CASE("table basics on S3") {
    GroupTable t(regular_representation(model_presentation("S3")));
    CHECK(t.size() == 6);
    CHECK(t.element(0).is_identity());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t.mul(i, t.inv(i)) == 0);
      // Words evaluate back to their element.
      std::size_t x = 0;
      for (auto g : t.word(i)) x = t.mul(x, t.generator(g));
      CHECK(x == i);
    }
    CHECK(t.center_order() == 1);
    CHECK(t.derived_order() == 3);
    CHECK(t.class_representatives().size() == 3);
  }

  TEST_CASE("homomorphism extension") {
    GroupTable c6(regular_representation(model_presentation("C6")));
    GroupTable s3(regular_representation(model_presentation("S3")));
    // C6 -> S3 sending the generator to an involution is a homomorphism.
    std::size_t inv = 0;
    for (std::size_t i = 1; i < s3.size(); ++i)
      if (s3.order_of(i) == 2) inv = i;
    CHECK(extend_homomorphism(c6, s3, {inv}, false));
    CHECK_FALSE(extend_homomorphism(c6, s3, {inv}, true));
    // An element of order 4 cannot be the image of a generator of order 6.
    GroupTable c4(regular_representation(model_presentation("C4")));
    CHECK_FALSE(extend_homomorphism(c6, c4, {c4.generator(0)}, false));
  }

  TEST_CASE("automorphism counts by homomorphism search") {
    for (auto [name, count] : {std::pair{"C4", 2}, {"C2xC2", 6}, {"C6", 2}, {"S3", 6}}) {
      GroupTable t(regular_representation(model_presentation(name)));
      HomSearch s;
      s.src = &t;
      s.dst = &t;
      std::vector<std::size_t> all(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) all[i] = i;
      s.candidates.assign(t.num_generators(), all);
      int n = 0;
      for_each_homomorphism(s, [&](const auto&, const auto&) {
        ++n;
        return true;
      });
      CHECK(n == count);
    }
  }

  TEST_CASE("isomorphism testing") {
    auto c2c2 = model_presentation("C2xC2");
    CHECK(isomorphic_groups(c2c2, regular_representation(c2c2)));
    CHECK_FALSE(isomorphic_groups(c2c2, regular_representation(model_presentation("C4"))));
    CHECK_FALSE(isomorphic_groups(model_presentation("C6"), regular_representation(model_presentation("S3"))));
    CHECK(invariants(GroupTable(regular_representation(model_presentation("C4")))) !=
          invariants(GroupTable(regular_representation(c2c2))));
  }
}
