#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "c2lat/check.hpp"
#include "c2lat/classifier.hpp"
#include "c2lat/perm.hpp"

namespace c2lat {

using Json = nlohmann::ordered_json;

Json checks_json(const std::vector<Check>& checks);
Json classification_json(const Classification& c);
std::string classification_csv(const Classification& c);
// One CSV row per check: name,ok,detail.
std::string checks_csv(const std::vector<Check>& checks);

struct TriangleSpec {
  Family family;
  std::vector<std::string> gammas;
};
Json triangle_spec_json(const Family& f, const std::vector<std::string>& gammas);
// Throws std::invalid_argument with a line number on malformed input.
TriangleSpec parse_triangle_spec(std::string_view text);

Json permutations_json(const std::vector<Permutation>& ps);
std::vector<Permutation> permutations_from_json(const Json& j);

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

// Content-addressed JSON store: one file <dir>/<key>.json per entry.
class ResultCache {
 public:
  ResultCache() = default;  // disabled
  // Creates the directory; throws std::runtime_error when not writable.
  explicit ResultCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, const Json& value) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace c2lat
