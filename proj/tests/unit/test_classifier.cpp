#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "c2lat/classifier.hpp"

using namespace c2lat;

namespace {

std::size_t involutions_and_identity(const EdgeModel& m) {
  std::size_t n = 0;
  for (std::size_t f = 0; f < m.num_auts(); ++f)
    if (m.compose(f, f) == 0) ++n;
  return n;
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("edge models") {
    const std::map<EdgeType, std::pair<std::size_t, std::size_t>> expect{
        {EdgeType::C4, {4, 2}}, {EdgeType::C2xC2, {4, 6}}, {EdgeType::C6, {6, 2}}, {EdgeType::S3, {6, 6}}};
    for (auto [t, oa] : expect) {
      const auto& m = edge_model(t);
      CAPTURE(edge_type_name(t));
      CHECK(m.order() == oa.first);
      CHECK(m.num_auts() == oa.second);
      CHECK(m.aut(0).label == "id");
      CHECK(aut_closure(m, m.generators()).size() == m.num_auts());
      for (std::size_t f = 0; f < m.num_auts(); ++f) {
        CHECK(m.compose(f, m.inverse(f)) == 0);
        CHECK(m.find(m.aut(f).label) == f);
        CHECK(m.find_map(m.aut(f).map) == f);
        // Each map is a bijective homomorphism.
        std::set<std::size_t> img(m.aut(f).map.begin(), m.aut(f).map.end());
        CHECK(img.size() == m.order());
        for (std::size_t x = 0; x < m.order(); ++x)
          for (std::size_t y = 0; y < m.order(); ++y)
            CHECK(m.aut(f).map[m.table().mul(x, y)] == m.table().mul(m.aut(f).map[x], m.aut(f).map[y]));
      }
    }
    CHECK_THROWS(edge_model(EdgeType::C4).find("sigma"));
    CHECK(edge_model(EdgeType::S3).find("Ad(e1)") > 0);
  }

  TEST_CASE("Sigma tables") {
    for (const auto& c : verify_sigma_tables()) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
    CHECK(decomposability_report() == std::vector<int>{24, 28, 31, 33});
  }

  TEST_CASE("Sigma groups are subgroups with consistent projections") {
    for (int i = 1; i <= 35; ++i) {
      CAPTURE(i);
      const auto& s = sigma(i);
      const auto& ma = edge_model(s.a);
      const auto& mb = edge_model(s.b);
      CHECK(std::binary_search(s.elements.begin(), s.elements.end(), SigmaElement{0, 0}));
      for (auto [f1, g1] : s.elements)
        for (auto [f2, g2] : s.elements)
          CHECK(std::binary_search(s.elements.begin(), s.elements.end(),
                                   SigmaElement{ma.compose(f1, f2), mb.compose(g1, g2)}));
      std::set<std::size_t> pa, pb;
      for (auto [f, g] : s.elements) {
        pa.insert(f);
        pb.insert(g);
      }
      CHECK(std::vector<std::size_t>(pa.begin(), pa.end()) == s.proj_a);
      CHECK(std::vector<std::size_t>(pb.begin(), pb.end()) == s.proj_b);
      CHECK(s.decomposable == (s.order() == s.proj_a.size() * s.proj_b.size()));
    }
  }

  TEST_CASE("compatibility") {
    CHECK(compatible({1, 1, 1, 12}));
    CHECK_FALSE(compatible({1, 1, 2, 12}));
    CHECK(compatibility_error({1, 1, 2, 12}).has_value());
    CHECK_FALSE(compatibility_error({1, 1, 1, 12}).has_value());
    CHECK_FALSE(compatible({1, 1, 1, 22}));  // wrong link range
  }

  TEST_CASE("family enumeration") {
    auto t1 = enumerate_families(1);
    auto t2 = enumerate_families(2);
    CHECK(t1.size() == 133);
    CHECK(t2.size() == 230);
    for (const auto& f : t1) {
      CHECK(compatible(f));
      if (mirror_eligible(f) || std::binary_search(swap_list().begin(), swap_list().end(), f.t)) CHECK(f.r <= f.s);
    }
    std::vector<Family> r1;
    for (const auto& f : t1)
      if (f.r == 1 && f.s == 1) r1.push_back(f);
    CHECK(r1 == std::vector<Family>{{1, 1, 1, 12}, {1, 1, 1, 13}, {1, 1, 1, 14}});
  }

  TEST_CASE("lemma items partition the families") {
    std::multiset<Family> covered;
    for (const auto& it : lemma_items())
      if (it.block != "mirror")
        for (const auto& f : it.families) covered.insert(f);
    auto all = enumerate_families(1);
    auto t2 = enumerate_families(2);
    all.insert(all.end(), t2.begin(), t2.end());
    CHECK(covered.size() == all.size());
    for (const auto& f : all) CHECK(covered.count(f) == 1);
  }

  TEST_CASE("counts on sample families") {
    CHECK(count_family({1, 1, 1, 12}).tp == 2);
    CHECK(count_family({2, 1, 1, 24}).tp == 4);
    CHECK(count_family({2, 2, 4, 27}).tp == 12);
    auto c = count_family({1, 6, 6, 12});
    CHECK(c.iso == 5);
    CHECK(c.mirror_ok);
  }

  TEST_CASE("class counts are consistent") {
    for (int type : {1, 2})
      for (const auto& f : enumerate_families(type)) {
        CAPTURE(f.name());
        auto c = count_family(f);
        CHECK(c.orbit_sizes_ok);
        CHECK(c.mirror_ok);
        CHECK(c.tp == c.tp_reps.size());
        CHECK(c.iso == c.iso_reps.size());
        CHECK(c.iso <= c.tp);
        if (!mirror_eligible(f)) CHECK(c.iso == c.tp);
        if (c.factored) CHECK(*c.factored == c.tp);
        CHECK(std::is_sorted(c.tp_reps.begin(), c.tp_reps.end()));
      }
  }

  TEST_CASE("mirror families over L29 against a double-coset count") {
    // Classes are (D1, D2, x): double cosets of Sigma's projection on each S3
    // side and an automorphism x of C2xC2. The mirror sends (D1, D2, x) to
    // (D2, D1, x^-1).
    const auto& s3 = edge_model(EdgeType::S3);
    const auto& v4 = edge_model(EdgeType::C2xC2);
    for (int r : {2, 4, 10, 11}) {
      CAPTURE(r);
      Family f{2, r, r, 29};
      REQUIRE(compatible(f));
      REQUIRE(mirror_eligible(f));
      const auto h = aut_closure(s3, {s3.find("Ad(e1)")});
      const std::size_t d = count_double_cosets(s3, h, h);
      const std::size_t tp = d * d * v4.num_auts();
      const std::size_t fixed = d * involutions_and_identity(v4);
      auto c = count_family(f);
      CHECK(c.tp == tp);
      CHECK(c.iso == fixed + (tp - fixed) / 2);
    }
  }

  TEST_CASE("gamma labels round trip") {
    Family f{1, 1, 1, 12};
    auto c = count_family(f);
    for (const auto& g : c.tp_reps) CHECK(parse_gammas(f, gamma_labels(f, g)) == g);
    CHECK_THROWS_AS(parse_gammas(f, {"id", "id", "sigma", "id", "id", "id"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_gammas(f, {"id"}), std::invalid_argument);
  }
}
