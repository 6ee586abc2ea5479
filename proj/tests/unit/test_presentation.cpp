#include <doctest.h>

#include "c2lat/presentation.hpp"

using namespace c2lat;

namespace {

FinPresentation dihedral(int n) {
  return parse_presentation("name D\ngen a\ngen b\nrel a^" + std::to_string(n) + "\nrel b^2\nrel (a b)^2\n");
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("word parsing and formatting") {
    const std::vector<std::string> names = {"a", "b"};
    CHECK(parse_word("a b^-1 a^2", names) == Word{1, -2, 1, 1});
    CHECK(parse_word("(a b)^2", names) == Word{1, 2, 1, 2});
    CHECK(parse_word("(a b)^-1", names) == Word{-2, -1});
    CHECK(format_word({1, 1, -2}, names) == "a^2 b^-1");
    CHECK_THROWS_AS(parse_word("c", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(a b", names), std::invalid_argument);
  }

  TEST_CASE("free reduction and inverses") {
    CHECK(reduce({1, 2, -2, -1, 1}) == Word{1});
    CHECK(reduce(concat({1, 2}, inverse({1, 2}))).empty());
    CHECK(power({1, 2}, -2) == Word{-2, -1, -2, -1});
  }

  TEST_CASE("parse errors carry line numbers") {
    try {
      parse_presentation("name X\ngen a\nrel a^2 z\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_presentation("name X\ngen a a\ngen a b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("name X\nbogus\n"), ParseError);
  }

  TEST_CASE("sided validation") {
    auto p = parse_presentation("name X\ngen a a\nrel a^2\n");
    CHECK_THROWS_AS(p.validate(true), std::invalid_argument);
    auto q = parse_presentation("name X\ngen a a\ngen b b\nrel a^2\nrel b^2\n");
    CHECK_NOTHROW(q.validate(true));
  }

  TEST_CASE("readings select relators") {
    auto b1 = library_presentation(19);
    auto b2 = library_presentation(19, "b2");
    CHECK(b1.reading == "b1");
    CHECK(b2.reading == "b2");
    CHECK(b1.relators != b2.relators);
    CHECK(regular_representation(b1).order() == 16);
  }

  TEST_CASE("coset tables are complete and closed (dihedral family)") {
    for (int n = 2; n <= 12; ++n) {
      auto p = dihedral(n);
      auto whole = todd_coxeter(p, {});
      CHECK(whole.complete);
      CHECK(whole.num_cosets == static_cast<std::size_t>(2 * n));
      CHECK(whole.verify(p));
      auto rot = todd_coxeter(p, {{1}});
      CHECK(rot.num_cosets == 2);
      CHECK(rot.verify(p));
      auto refl = todd_coxeter(p, {{2}});
      CHECK(refl.num_cosets == static_cast<std::size_t>(n));
      // Tracing a relator from any coset returns to it.
      for (std::size_t c = 0; c < refl.num_cosets; ++c)
        for (const auto& r : p.relators) CHECK(refl.trace(c, r) == c);
    }
  }

  TEST_CASE("coset limit on an infinite group") {
    auto p = parse_presentation("name Z2*Z3\ngen a\ngen b\nrel a^2\nrel b^3\n");
    CHECK_THROWS_AS(todd_coxeter(p, {}, 500), CosetLimitExceeded);
  }

  TEST_CASE("regular representation maps generators to generators") {
    auto p = model_presentation("S3");
    auto g = regular_representation(p);
    CHECK(g.order() == 6);
    CHECK(g.degree() == 6);
    for (const auto& r : p.relators) CHECK(evaluate(r, g.generators()).is_identity());
  }

  TEST_CASE("model edge groups") {
    CHECK(regular_representation(model_presentation("C4")).order() == 4);
    CHECK(regular_representation(model_presentation("C2xC2")).order() == 4);
    CHECK(regular_representation(model_presentation("C6")).order() == 6);
    CHECK_THROWS(model_presentation("C5"));
  }
}
