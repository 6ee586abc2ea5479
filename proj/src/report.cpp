#include "c2lat/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace c2lat {

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

}  // namespace

Json classification_json(const Classification& c) {
  Json fams = Json::array();
  for (const auto& cc : c.families) {
    Json reps = Json::array();
    for (const auto& g : cc.tp_reps) reps.push_back(gamma_labels(cc.family, g));
    Json iso_reps = Json::array();
    for (const auto& g : cc.iso_reps) iso_reps.push_back(gamma_labels(cc.family, g));
    fams.push_back({{"family_type", cc.family.type},
                    {"r", cc.family.r},
                    {"s", cc.family.s},
                    {"t", cc.family.t},
                    {"tp_count", cc.tp},
                    {"iso_count", cc.iso},
                    {"representatives", reps},
                    {"iso_representatives", iso_reps}});
  }
  Json items = Json::array();
  for (const auto& it : c.items)
    items.push_back({{"block", it.item->block},
                     {"item", it.item->item},
                     {"families", it.item->families.size()},
                     {"computed", it.computed},
                     {"expected", it.item->total()},
                     {"ok", it.ok}});
  Json out;
  out["families"] = fams;
  out["aggregate"] = {{"tp_total", c.tp_total},
                      {"iso_total", c.iso_total},
                      {"family_count_446", c.families_446},
                      {"family_count_664", c.families_664},
                      {"per_lemma_item_subtotals", items}};
  out["checks"] = checks_json(c.checks);
  return out;
}

std::string classification_csv(const Classification& c) {
  std::ostringstream os;
  os << "family_type,r,s,t,tp_count,iso_count,representatives\n";
  for (const auto& cc : c.families) {
    std::vector<std::string> reps;
    for (const auto& g : cc.tp_reps) reps.push_back(join(gamma_labels(cc.family, g), " "));
    os << cc.family.type << "," << cc.family.r << "," << cc.family.s << "," << cc.family.t << "," << cc.tp << ","
       << cc.iso << "," << csv_field(join(reps, ";")) << "\n";
  }
  return os.str();
}

std::string checks_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "name,ok,detail\n";
  for (const auto& c : checks) os << csv_field(c.name) << "," << (c.ok ? 1 : 0) << "," << csv_field(c.detail) << "\n";
  return os.str();
}

Json triangle_spec_json(const Family& f, const std::vector<std::string>& gammas) {
  return {{"r", f.r}, {"s", f.s}, {"t", f.t}, {"family_type", f.type}, {"gammas", gammas}};
}

TriangleSpec parse_triangle_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    throw std::invalid_argument("line " + std::to_string(line) + ": malformed JSON");
  }
  auto line_of = [&](const std::string& key) {
    auto pos = text.find("\"" + key + "\"");
    std::size_t line = 1;
    for (std::size_t k = 0; k < pos && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    return pos == std::string_view::npos ? std::string("") : "line " + std::to_string(line) + ": ";
  };
  if (!j.is_object()) throw std::invalid_argument("line 1: expected a JSON object");
  TriangleSpec spec;
  auto integer = [&](const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    if (!j[key].is_number_integer()) throw std::invalid_argument(line_of(key) + "'" + key + "' must be an integer");
    return j[key].get<int>();
  };
  spec.family.r = integer("r");
  spec.family.s = integer("s");
  spec.family.t = integer("t");
  spec.family.type = integer("family_type");
  if (!j.contains("gammas")) throw std::invalid_argument("missing field 'gammas'");
  const auto& g = j["gammas"];
  if (!g.is_array() || g.size() != 6)
    throw std::invalid_argument(line_of("gammas") + "'gammas' must list six automorphism labels");
  for (const auto& x : g) {
    if (!x.is_string()) throw std::invalid_argument(line_of("gammas") + "gamma labels must be strings");
    spec.gammas.push_back(x.get<std::string>());
  }
  return spec;
}

Json permutations_json(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.images());
  return out;
}

std::vector<Permutation> permutations_from_json(const Json& j) {
  std::vector<Permutation> out;
  for (const auto& x : j) out.emplace_back(x.get<std::vector<Point>>());
  return out;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[k] = digits[h & 15];
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto probe = dir_ / ".probe";
  std::ofstream f(probe);
  if (ec || !f) throw std::runtime_error("cache directory not writable: " + dir_.string());
  f.close();
  std::filesystem::remove(probe, ec);
}

std::optional<Json> ResultCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream f(dir_ / (key + ".json"));
  if (!f) return std::nullopt;
  try {
    return Json::parse(f);
  } catch (const Json::exception&) {
    return std::nullopt;  // a damaged entry is recomputed
  }
}

void ResultCache::put(const std::string& key, const Json& value) const {
  if (!enabled()) return;
  const auto tmp = dir_ / (key + ".json.tmp");
  {
    std::ofstream f(tmp);
    f << value.dump() << "\n";
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

}  // namespace c2lat
