#include "c2lat/pipeline.hpp"

#include <sstream>

#include "c2lat/actions.hpp"
#include "c2lat/classifier.hpp"
#include "c2lat/geometry.hpp"
#include "c2lat/graph_aut.hpp"
#include "c2lat/special_matrices.hpp"

namespace c2lat {

namespace {

bool mutual_containment(const PermGroup& x, const PermGroup& y) { return x.contains(y) && y.contains(x); }

}  // namespace

QuadrangleReport verify_quadrangle(bool with_aut, const std::vector<Permutation>* cached_aut) {
  QuadrangleReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const IncidenceGeometry q = build_Q();
  add("Q points", q.num_points == 64, std::to_string(q.num_points));
  add("Q lines", q.num_lines == 96, std::to_string(q.num_lines));
  add("Q flags", q.flags.size() == 384, std::to_string(q.flags.size()));
  const auto pc = is_generalized_polygon(q, 4);
  std::string order = pc ? "(" + std::to_string(pc.order->first) + "," + std::to_string(pc.order->second) + ")"
                         : pc.failure;
  add("Q generalized quadrangle of order (3,5)", pc && *pc.order == std::pair<std::size_t, std::size_t>{3, 5},
      order);
  const BipartiteGraph g = incidence_graph(q);
  const auto gi = girth(g), di = diameter(g);
  add("Q girth 8", gi == 8u, gi ? std::to_string(*gi) : "none");
  add("Q diameter 4", di == 4u, di ? std::to_string(*di) : "none");
  add("Q not a generalized triangle", !is_generalized_polygon(q, 3));

  for (auto& c : verify_special_matrices().checks) rep.checks.push_back(std::move(c));

  if (!with_aut) return rep;
  const auto& sm = special_matrices();
  const PermGroup affine = affine_group({sm.A, sm.C}, false);
  add("|V x| <A,C>| = 138240", affine.order() == 138240, std::to_string(affine.order()));

  PermGroup first;
  if (cached_aut) {
    bool valid = true;
    for (const auto& p : *cached_aut) valid = valid && p.degree() == g.num_vertices() && is_graph_automorphism(g, p, true);
    first = PermGroup(g.num_vertices(), *cached_aut);
    add("cached Aut(Q) generators are automorphisms", valid, std::to_string(cached_aut->size()) + " generators");
  } else {
    first = graph_automorphisms(g, true, CellRule::FirstSmallest);
  }
  const PermGroup second = graph_automorphisms(g, true, CellRule::FirstLargest);
  rep.aut_generators = first.generators();
  add("|Aut(Q)| by refinement search", first.order() == 138240, std::to_string(first.order()));
  add("|Aut(Q)| by refinement search, second cell rule", second.order() == 138240, std::to_string(second.order()));
  add("refinement searches agree", mutual_containment(first, second));
  add("Aut(Q) equals the affine group", mutual_containment(first, affine));
  return rep;
}

std::vector<Check> verify_library_actions(Target t) {
  std::vector<Check> out;
  const int lo = t == Target::Q ? 1 : t == Target::K44 ? 12 : 22;
  const int hi = t == Target::Q ? 11 : t == Target::K44 ? 21 : 35;
  bool built = true;
  std::ostringstream err;
  for (int i = lo; i <= hi; ++i) {
    try {
      library_action(i);
    } catch (const std::exception& e) {
      built = false;
      err << "L" << i << ": " << e.what() << "; ";
    }
  }
  const std::string tn = target_name(t);
  out.push_back({tn + " library actions are edge-regular on " + tn, built, err.str()});
  if (!built) return out;
  std::size_t iso_pairs = 0;
  std::ostringstream pairs;
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j)
      if (actions_isomorphic(library_action(i), library_action(j), false)) {
        ++iso_pairs;
        pairs << "L" << i << "~L" << j << " ";
      }
  out.push_back({tn + " library actions pairwise non-isomorphic", iso_pairs == 0,
                 std::to_string(hi - lo + 1) + " actions" + (iso_pairs ? ", " + pairs.str() : "")});
  return out;
}

Check verify_swap_list() {
  std::vector<int> found;
  for (int i = 1; i <= 35; ++i)
    if (admits_edge_swap(library_action(i))) found.push_back(i);
  std::ostringstream os;
  for (std::size_t k = 0; k < found.size(); ++k) os << (k ? "," : "") << found[k];
  return {"edge swap exactly on {12,13,16,17,22,25,26,29}", found == swap_list(), "{" + os.str() + "}"};
}

}  // namespace c2lat
