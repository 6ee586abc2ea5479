#pragma once

#include <optional>
#include <vector>

#include "c2lat/check.hpp"
#include "c2lat/library.hpp"
#include "c2lat/perm.hpp"

namespace c2lat {

struct QuadrangleReport {
  std::vector<Check> checks;
  // Generators of Aut(Q) on the 160 incidence-graph vertices.
  std::vector<Permutation> aut_generators;
  bool all_ok() const { return c2lat::all_ok(checks); }
};

// Counts, polygon order, girth and diameter of Q, the special matrix checks
// and, with `with_aut`, |Aut(Q)| by refinement search against the affine
// group. `cached_aut` replaces the first refinement search; its generators
// are re-validated as automorphisms.
QuadrangleReport verify_quadrangle(bool with_aut, const std::vector<Permutation>* cached_aut = nullptr);

// Library actions on one target: each realizes an edge-regular action on
// the target, and they are pairwise non-isomorphic.
std::vector<Check> verify_library_actions(Target t);

// admits_edge_swap holds exactly on the published swap list.
Check verify_swap_list();

}  // namespace c2lat
