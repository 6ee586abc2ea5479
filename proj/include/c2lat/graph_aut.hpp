#pragma once

#include <optional>

#include "c2lat/geometry.hpp"
#include "c2lat/perm.hpp"

namespace c2lat {

// Which non-singleton cell gets individualized next.
enum class CellRule { FirstSmallest, FirstLargest };

bool is_graph_automorphism(const BipartiteGraph& g, const Permutation& p, bool fix_colors);

// Automorphism group by equitable refinement and backtracking. The initial
// coloring uses degree and distance profile (and the color class when
// fix_colors). Every generator is checked against the edge set.
PermGroup graph_automorphisms(const BipartiteGraph& g, bool fix_colors,
                              CellRule rule = CellRule::FirstSmallest);

// A vertex bijection g -> h preserving edges (and color classes when
// respect_colors), or none.
std::optional<Permutation> graph_isomorphism(const BipartiteGraph& g, const BipartiteGraph& h,
                                             bool respect_colors);

}  // namespace c2lat
