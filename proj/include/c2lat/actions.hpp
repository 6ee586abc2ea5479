#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "c2lat/check.hpp"
#include "c2lat/geometry.hpp"
#include "c2lat/group_table.hpp"
#include "c2lat/library.hpp"
#include "c2lat/perm.hpp"
#include "c2lat/regular_search.hpp"

namespace c2lat {

// A group acting edge-regularly on the coset graph of (E_b, E_a): E_b cosets
// are the points (color 0), E_a cosets the lines (color 1). The group is
// generated by the generators of E_a followed by those of E_b.
struct LocalAction {
  int id = 0;  // library id, 0 when not a library member
  Target target = Target::Q;
  PermGroup group;
  PermGroup ea;
  PermGroup eb;

  std::size_t num_a_gens() const { return ea.generators().size(); }
  // Element table of `group`, built on first use.
  const GroupTable& table() const;

 private:
  mutable std::shared_ptr<const GroupTable> table_;
};

BipartiteGraph target_graph(Target t);

// Builds a LocalAction from a group and its two edge subgroups. Throws
// std::invalid_argument unless the action on the coset graph is
// edge-regular and the graph is isomorphic to the target.
LocalAction make_local_action(const PermGroup& ea, const PermGroup& eb, Target t, int id = 0);

// Cached per id.
const LocalAction& library_action(int i);

// Images of X's generators under an isomorphism G_X -> G_Y carrying
// (E_a, E_b) onto (E_a', E_b'), or onto (E_b', E_a') when `swapped`.
struct ActionIso {
  std::vector<Permutation> images;
  bool swapped = false;
};

std::optional<ActionIso> actions_isomorphic(const LocalAction& x, const LocalAction& y, bool type_preserving);

// Automorphism of G exchanging E_a and E_b. The pairing of the i-th a-side
// generator with the i-th b-side generator is tried first.
std::optional<ActionIso> admits_edge_swap(const LocalAction& x);

struct EdgeRegularClass {
  LocalAction action;  // acting on the target's flags
  int library_id = 0;  // 0 when unmatched
  std::size_t ambient_classes = 0;  // ambient conjugacy classes merged here
};

struct EdgeRegularClassification {
  Target target = Target::Q;
  std::size_t ambient_classes = 0;
  std::size_t subgroups_found = 0;
  std::vector<EdgeRegularClass> classes;
  std::vector<Check> checks;
  bool all_ok() const { return c2lat::all_ok(checks); }
};

struct ClassifyOptions {
  std::size_t workers = 1;
  std::function<void(const RegularSearchProgress&)> progress;
};

// Bipartition-preserving automorphism group of the target on its flags
// (flag order of the target geometry).
const PermGroup& target_flag_automorphisms(Target t);
// Same group on the incidence-graph vertices.
const PermGroup& target_vertex_automorphisms(Target t);
const IncidenceGeometry& target_geometry(Target t);

EdgeRegularClassification classify_edge_regular(Target t, const ClassifyOptions& opts = {});

struct PointLineCounts {
  std::size_t points = 0;
  std::size_t lines = 0;
};
// Aut(Q)-classes of subgroups regular on the points and on the lines of Q.
PointLineCounts count_point_line_regular(const ClassifyOptions& opts = {});

}  // namespace c2lat
