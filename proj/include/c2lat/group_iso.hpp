#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "c2lat/group_table.hpp"
#include "c2lat/perm.hpp"
#include "c2lat/presentation.hpp"

namespace c2lat {

// Images of a source group's generators in a target group.
struct GroupIso {
  std::vector<Permutation> images;
};

// Searches generator images in G satisfying all relators of P and
// generating G. Throws std::length_error when |G| exceeds 10^4.
std::optional<GroupIso> isomorphic_groups(const FinPresentation& p, const PermGroup& g);

// Backtracking search for homomorphisms from a tabulated source group given
// by its generators. Candidates are restricted per generator; `accept`
// receives the full element map of every homomorphism found and returns
// false to stop the search.
struct HomSearch {
  const GroupTable* src = nullptr;
  const GroupTable* dst = nullptr;
  std::vector<std::vector<std::size_t>> candidates;  // per source generator
  bool bijective = true;
};
void for_each_homomorphism(const HomSearch& s,
                           const std::function<bool(const std::vector<std::size_t>& images,
                                                    const std::vector<std::size_t>& map)>& accept);

}  // namespace c2lat
