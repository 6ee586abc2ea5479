#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "c2lat/perm.hpp"

namespace c2lat {

// Explicit element list of a small permutation group, closed from its
// generators. Element 0 is the identity; elements appear in breadth-first
// order of the right Cayley graph, so every element has a shortest word.
class GroupTable {
 public:
  static constexpr std::size_t kDefaultLimit = 20000;

  explicit GroupTable(const PermGroup& g, std::size_t limit = kDefaultLimit);

  std::size_t size() const { return elems_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& element(std::size_t i) const { return elems_[i]; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  std::size_t num_generators() const { return gen_index_.size(); }
  // Element index of generator k.
  std::size_t generator(std::size_t k) const { return gen_index_[k]; }

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inv_[i]; }
  std::size_t right_gen(std::size_t i, std::size_t k) const { return right_[i][k]; }
  std::uint64_t order_of(std::size_t i) const { return ord_[i]; }
  std::size_t pow(std::size_t i, long long k) const;
  std::size_t conj(std::size_t x, std::size_t g) const { return mul(mul(inv(g), x), g); }

  // Parent in the BFS tree: element(i) = element(parent(i)) * gen(parent_gen(i)).
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_gen(std::size_t i) const { return parent_gen_[i]; }
  // Shortest word in the generators as 0-based generator indices.
  std::vector<std::size_t> word(std::size_t i) const;

  // Sorted element indices of the subgroup generated by `gens`.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;
  PermGroup subgroup(const std::vector<std::size_t>& gens) const;

  // Conjugacy class index per element; classes numbered by least member.
  const std::vector<std::size_t>& class_of() const;
  std::vector<std::size_t> class_representatives() const;
  std::size_t center_order() const;
  std::size_t derived_order() const;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> gen_index_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::size_t> parent_, parent_gen_, inv_;
  std::vector<std::uint64_t> ord_;
  std::vector<std::uint32_t> table_;  // full product table when small enough
  mutable std::vector<std::size_t> class_of_;
};

// Extends generator images to a map on all of `src`. Returns the element map
// when it is a homomorphism; with `bijective` also requires a bijection onto
// `dst`.
std::optional<std::vector<std::size_t>> extend_homomorphism(const GroupTable& src,
                                                            const GroupTable& dst,
                                                            const std::vector<std::size_t>& images,
                                                            bool bijective);

// Cheap isomorphism invariants: order profile, center order, derived
// subgroup order, number of classes.
struct GroupInvariants {
  std::size_t order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> profile;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t classes = 0;
  bool operator==(const GroupInvariants&) const = default;
};
GroupInvariants invariants(const GroupTable& t);

}  // namespace c2lat
