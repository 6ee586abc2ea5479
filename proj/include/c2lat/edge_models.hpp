#pragma once

#include <memory>
#include <string>
#include <vector>

#include "c2lat/group_table.hpp"
#include "c2lat/perm.hpp"
#include "c2lat/presentation.hpp"

namespace c2lat {

enum class EdgeType { C4, C2xC2, C6, S3 };
std::string edge_type_name(EdgeType t);
// Isomorphism type of a group of order 4 or 6.
EdgeType classify_edge_group(const PermGroup& e);

struct EdgeAut {
  std::string label;
  std::vector<std::size_t> map;  // element index -> element index
};

// A model edge group from the bundled data files with its full automorphism
// group. Automorphism 0 is the identity; composition is (f o g)(x) = f(g(x)).
class EdgeModel {
 public:
  explicit EdgeModel(EdgeType t);

  EdgeType type() const { return type_; }
  const FinPresentation& presentation() const { return pres_; }
  const GroupTable& table() const { return *table_; }
  std::size_t order() const { return table_->size(); }
  std::size_t rank() const { return pres_.rank(); }
  // Name of an element as a word in e1, e2 ("1" for the identity).
  std::string element_name(std::size_t x) const;

  std::size_t num_auts() const { return auts_.size(); }
  const EdgeAut& aut(std::size_t i) const { return auts_[i]; }
  std::size_t compose(std::size_t f, std::size_t g) const { return compose_[f * auts_.size() + g]; }
  std::size_t inverse(std::size_t f) const { return inverse_[f]; }
  // Index of the automorphism with the given label; throws if unknown.
  std::size_t find(const std::string& label) const;
  // Index of the automorphism with the given element map, or npos.
  std::size_t find_map(const std::vector<std::size_t>& map) const;
  // A small generating set of Aut.
  const std::vector<std::size_t>& generators() const { return gens_; }

 private:
  EdgeType type_;
  FinPresentation pres_;
  std::shared_ptr<const GroupTable> table_;
  std::vector<EdgeAut> auts_;
  std::vector<std::size_t> compose_, inverse_, gens_;
};

const EdgeModel& edge_model(EdgeType t);

// Closure of a set of automorphism indices under composition (sorted).
std::vector<std::size_t> aut_closure(const EdgeModel& m, const std::vector<std::size_t>& gens);

// Number of double cosets H \ Aut(E) / K for subgroups given as sorted
// automorphism index lists.
std::size_t count_double_cosets(const EdgeModel& m, const std::vector<std::size_t>& h,
                                const std::vector<std::size_t>& k);

}  // namespace c2lat
