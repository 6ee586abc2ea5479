#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "c2lat/report.hpp"

using namespace c2lat;

TEST_SUITE("report") {
  TEST_CASE("FNV-1a test vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
  }

  TEST_CASE("triangle spec parsing") {
    auto spec = parse_triangle_spec(
        R"({"r": 1, "s": 1, "t": 12, "family_type": 1, "gammas": ["id","id","id","id","id","id"]})");
    CHECK(spec.family == Family{1, 1, 1, 12});
    CHECK(spec.gammas.size() == 6);
    auto round = parse_triangle_spec(triangle_spec_json(spec.family, spec.gammas).dump(2));
    CHECK(round.family == spec.family);
    CHECK(round.gammas == spec.gammas);

    auto message = [](const char* text) {
      try {
        parse_triangle_spec(text);
      } catch (const std::invalid_argument& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message("{\n\"r\": 1,\n\"s\": ]") .rfind("line 3:", 0) == 0);
    CHECK(message("{\"r\": 1}").find("missing field") != std::string::npos);
    CHECK(message("{\n\"r\": \"one\", \"s\": 1, \"t\": 12, \"family_type\": 1, \"gammas\": []}").rfind("line 2:", 0) == 0);
    CHECK(message("{\"r\": 1, \"s\": 1, \"t\": 12, \"family_type\": 1,\n\"gammas\": [\"id\"]}").rfind("line 2:", 0) == 0);
    CHECK(message("[]").rfind("line 1:", 0) == 0);
  }

  TEST_CASE("permutation JSON round trip") {
    std::vector<Permutation> ps{Permutation({1, 2, 0}), Permutation::identity(3)};
    CHECK(permutations_from_json(permutations_json(ps)) == ps);
  }

  TEST_CASE("result cache") {
    const auto dir = std::filesystem::temp_directory_path() / ("c2lat-cache-test-" + fnv1a_hex(__TIME__));
    std::filesystem::remove_all(dir);
    {
      ResultCache cache(dir);
      CHECK(cache.enabled());
      CHECK_FALSE(cache.get("k"));
      cache.put("k", Json{{"x", 1}});
      auto v = cache.get("k");
      REQUIRE(v);
      CHECK((*v)["x"] == 1);
      std::ofstream(dir / "k.json") << "{broken";
      CHECK_FALSE(cache.get("k"));
    }
    ResultCache off;
    CHECK_FALSE(off.enabled());
    off.put("k", Json{});
    CHECK_FALSE(off.get("k"));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("CSV quoting") {
    std::vector<Check> checks{{"a,b", true, "say \"hi\""}};
    CHECK(checks_csv(checks) == "name,ok,detail\n\"a,b\",1,\"say \"\"hi\"\"\"\n");
  }
}
