#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c2lat/check.hpp"
#include "c2lat/edge_models.hpp"

namespace c2lat {

// Standard embedding of the model group of side 'a' or 'b' of L_i into
// library_table(i): e_k goes to the k-th generator of that side. The result
// maps model element indices to table indices.
const std::vector<std::size_t>& standard_embedding(int i, char side);
EdgeType side_type(int i, char side);

using SigmaElement = std::pair<std::size_t, std::size_t>;  // (aut of E_A, aut of E_B)

struct SigmaGroup {
  int id = 0;
  EdgeType a = EdgeType::C4, b = EdgeType::C4;
  std::vector<SigmaElement> elements;  // sorted
  std::vector<SigmaElement> generators;
  std::vector<std::size_t> proj_a, proj_b;  // sorted
  bool decomposable = false;
  std::size_t order() const { return elements.size(); }
  std::string describe() const;
};

// Cached; i in 1..35.
const SigmaGroup& sigma(int i);
// Comparison with the published Sigma tables; one check per index.
std::vector<Check> verify_sigma_tables();
std::vector<int> decomposability_report();

// Family T^(type)_(r,s,t). Type 1: links (4,4,6), t in 12..21. Type 2:
// links (6,6,4), t in 22..35.
struct Family {
  int type = 1;
  int r = 0, s = 0, t = 0;
  std::string name() const;
  bool operator==(const Family&) const = default;
  auto operator<=>(const Family&) const = default;
};

// Positions of gamma_ij in the order 12, 13, 21, 23, 31, 32.
struct Position {
  int edge;    // i
  int vertex;  // j
  char side;   // side of V_j receiving E_i
};
const std::array<Position, 6>& positions(int type);
const std::array<const char*, 6>& position_names();

std::optional<std::string> compatibility_error(const Family& f);
bool compatible(const Family& f);
std::array<EdgeType, 3> edge_types(const Family& f);
const std::vector<int>& swap_list();
bool mirror_eligible(const Family& f);

// All compatible families of a type, with (r,s,t) ~ (s,r,t) identified when
// t admits the edge swap (r <= s kept). Ordered by (r, s, t).
std::vector<Family> enumerate_families(int type);

using Gammas = std::array<std::size_t, 6>;

struct ClassCount {
  Family family;
  std::size_t c_size = 0;
  std::size_t tp = 0;
  std::size_t iso = 0;
  std::vector<Gammas> tp_reps;   // lexicographically least per class
  std::vector<Gammas> iso_reps;  // least per mirror orbit
  std::optional<std::size_t> factored;  // decomposable families only
  bool orbit_sizes_ok = false;  // sum of class sizes = |C|
  bool mirror_ok = true;        // mirror is an involution preserving classes
};

ClassCount count_family(const Family& f);
std::vector<std::string> gamma_labels(const Family& f, const Gammas& g);
// Inverse of gamma_labels; throws std::invalid_argument on unknown labels.
Gammas parse_gammas(const Family& f, const std::vector<std::string>& labels);

// One item of the published lemmas, as a regression target.
struct LemmaItem {
  std::string block;  // dec_446, dec_664, non_dec, mirror
  int item = 0;
  std::vector<Family> families;  // in compatible orientation
  std::size_t per_family = 0;    // tp count (iso count for the mirror block)
  std::size_t total() const { return per_family * families.size(); }
};
const std::vector<LemmaItem>& lemma_items();

struct ItemResult {
  const LemmaItem* item = nullptr;
  std::size_t computed = 0;
  bool ok = false;
};

struct Classification {
  std::vector<ClassCount> families;
  std::vector<ItemResult> items;
  std::size_t families_446 = 0, families_664 = 0;
  std::size_t tp_total = 0, iso_total = 0;
  std::vector<Check> checks;
  bool all_ok() const { return c2lat::all_ok(checks); }
};

struct ClassifyAllOptions {
  std::vector<int> types{1, 2};
  std::size_t workers = 1;
  std::function<void(std::size_t done, std::size_t total)> progress;
};
Classification classify_all(const ClassifyAllOptions& opts = {});

}  // namespace c2lat
