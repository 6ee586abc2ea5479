#include <doctest.h>

#include <random>
#include <set>

#include "c2lat/perm.hpp"

using namespace c2lat;

namespace {

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Closure by breadth-first multiplication; only for tiny groups.
std::set<std::vector<Point>> naive_closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<std::vector<Point>> seen{Permutation::identity(n).images()};
  std::vector<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    auto x = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      auto y = x * g;
      if (seen.insert(y.images()).second) queue.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("product applies the left factor first") {
    auto p = Permutation::from_cycles(3, "(0,1)");
    auto q = Permutation::from_cycles(3, "(1,2)");
    CHECK((p * q)(0) == q(p(0)));
    CHECK((p * q)(0) == 2);
  }

  TEST_CASE("cycle notation round trip") {
    auto p = Permutation::from_cycles(7, "(1,5,2,3,4,6)", 1);
    CHECK(p.to_cycles(1) == "(1,5,2,3,4,6)");
    CHECK(p.order() == 6);
    CHECK_THROWS(Permutation::from_cycles(3, "(0,0)"));
  }

  TEST_CASE("group axioms on random permutations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 12;
      auto a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
      const auto e = Permutation::identity(n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * e == a);
      CHECK(e * a == a);
      CHECK((a * a.inverse()).is_identity());
      CHECK(a.pow(static_cast<long long>(a.order())).is_identity());
      CHECK(a.pow(-1) == a.inverse());
      CHECK(a.conjugate_by(b) == b.inverse() * a * b);
    }
  }

  TEST_CASE("Schreier-Sims order agrees with naive closure") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      std::vector<Permutation> gens;
      for (int k = 0, m = 1 + rng() % 3; k < m; ++k) gens.push_back(random_perm(rng, n));
      PermGroup g(n, gens);
      const auto elems = naive_closure(gens, n);
      CHECK(g.order() == elems.size());
      for (const auto& x : elems) CHECK(g.contains(Permutation(x)));
    }
  }

  TEST_CASE("symmetric group order and membership") {
    auto s5 = PermGroup::symmetric(5);
    CHECK(s5.order() == 120);
    PermGroup a5(5, {Permutation::from_cycles(5, "(0,1,2)"), Permutation::from_cycles(5, "(0,1,2,3,4)")});
    CHECK(a5.order() == 60);
    CHECK_FALSE(a5.contains(Permutation::from_cycles(5, "(0,1)")));
    CHECK(s5.contains(a5));
  }

  TEST_CASE("regularity") {
    PermGroup c4(4, {Permutation::from_cycles(4, "(0,1,2,3)")});
    CHECK(is_regular(c4, {0, 1, 2, 3}));
    PermGroup v(4, {Permutation::from_cycles(4, "(0,1)")});
    CHECK(is_regular(v, {0, 1}));
    CHECK_THROWS_AS(is_regular(v, {0, 2}), std::invalid_argument);
  }

  TEST_CASE("conjugator between regular subgroups") {
    auto s4 = PermGroup::symmetric(4);
    PermGroup h(4, {Permutation::from_cycles(4, "(0,1,2,3)")});
    PermGroup k(4, {Permutation::from_cycles(4, "(0,2,1,3)")});
    auto x = find_conjugator(s4, h, k);
    REQUIRE(x);
    CHECK(k.contains(h.generators()[0].conjugate_by(*x)));
    PermGroup v4(4, {Permutation::from_cycles(4, "(0,1)(2,3)"), Permutation::from_cycles(4, "(0,2)(1,3)")});
    CHECK_FALSE(find_conjugator(s4, h, v4));
  }
}
