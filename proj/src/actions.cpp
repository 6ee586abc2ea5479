#include "c2lat/actions.hpp"

#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "c2lat/graph_aut.hpp"
#include "c2lat/group_iso.hpp"

namespace c2lat {

const GroupTable& LocalAction::table() const {
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (!table_) table_ = std::make_shared<const GroupTable>(group);
  return *table_;
}

namespace {

std::size_t target_index(Target t) { return static_cast<std::size_t>(t); }

PermGroup greedy_group(std::size_t degree, const std::vector<Permutation>& elems) {
  std::vector<Permutation> gens;
  PermGroup g = PermGroup::trivial(degree);
  for (const auto& x : elems) {
    if (g.contains(x)) continue;
    gens.push_back(x);
    g = PermGroup(degree, gens);
  }
  return g;
}

template <class T, class Make>
const T& cached(Target t, Make make) {
  static std::array<std::once_flag, 3> once;
  static std::array<std::unique_ptr<T>, 3> store;
  const std::size_t k = target_index(t);
  std::call_once(once[k], [&] { store[k] = std::make_unique<T>(make()); });
  return *store[k];
}

}  // namespace

const IncidenceGeometry& target_geometry(Target t) {
  return cached<IncidenceGeometry>(t, [t] {
    switch (t) {
      case Target::Q: return build_Q();
      case Target::K44: return build_Kmm(4);
      case Target::K66: return build_Kmm(6);
    }
    throw std::logic_error("target_geometry");
  });
}

BipartiteGraph target_graph(Target t) { return incidence_graph(target_geometry(t)); }

const PermGroup& target_vertex_automorphisms(Target t) {
  return cached<PermGroup>(t, [t] { return graph_automorphisms(target_graph(t), true); });
}

const PermGroup& target_flag_automorphisms(Target t) {
  return cached<PermGroup>(t, [t] {
    const auto& geom = target_geometry(t);
    const auto& aut = target_vertex_automorphisms(t);
    const auto np = static_cast<Point>(geom.num_points);
    std::vector<Permutation> gens;
    for (const auto& x : aut.generators()) {
      std::vector<Point> img(geom.flags.size());
      for (std::size_t f = 0; f < geom.flags.size(); ++f) {
        auto [p, l] = geom.flags[f];
        img[f] = static_cast<Point>(*geom.flag_index(x(p), x(np + l) - np));
      }
      gens.emplace_back(std::move(img));
    }
    return PermGroup(geom.flags.size(), std::move(gens));
  });
}

LocalAction make_local_action(const PermGroup& ea, const PermGroup& eb, Target t, int id) {
  LocalAction la;
  la.id = id;
  la.target = t;
  la.ea = ea;
  la.eb = eb;
  std::vector<Permutation> gens = ea.generators();
  gens.insert(gens.end(), eb.generators().begin(), eb.generators().end());
  la.group = PermGroup(ea.degree(), std::move(gens));
  const auto cg = coset_graph(la.group, eb, ea);
  if (cg.graph.num_edges() != la.group.order())
    throw std::invalid_argument("make_local_action: action is not edge-regular");
  if (!graph_isomorphism(cg.graph, target_graph(t), true))
    throw std::invalid_argument("make_local_action: coset graph differs from " + target_name(t));
  return la;
}

const LocalAction& library_action(int i) {
  if (i < 1 || i > 35) throw std::out_of_range("library id out of range");
  static std::array<std::once_flag, 36> once;
  static std::array<std::unique_ptr<LocalAction>, 36> store;
  std::call_once(once[i], [i] {
    const auto& lg = library_group(i);
    store[i] = std::make_unique<LocalAction>(make_local_action(lg.edges.a, lg.edges.b, library_target(i), i));
  });
  return *store[i];
}

namespace {

std::vector<std::size_t> element_indices(const GroupTable& t, const PermGroup& h) {
  std::vector<std::size_t> out;
  for (const auto& x : h.elements()) out.push_back(*t.index_of(x));
  return out;
}

std::optional<ActionIso> search_iso(const LocalAction& x, const LocalAction& y, bool swapped,
                                    const std::vector<std::size_t>* first_try = nullptr) {
  const PermGroup& ya = swapped ? y.eb : y.ea;
  const PermGroup& yb = swapped ? y.ea : y.eb;
  if (x.group.order() != y.group.order() || x.ea.order() != ya.order() || x.eb.order() != yb.order())
    return std::nullopt;
  const GroupTable& src = x.table();
  const GroupTable& dst = y.table();
  auto to_iso = [&](const std::vector<std::size_t>& img) {
    ActionIso iso;
    iso.swapped = swapped;
    for (auto k : img) iso.images.push_back(dst.element(k));
    return iso;
  };
  if (first_try && extend_homomorphism(src, dst, *first_try, true)) return to_iso(*first_try);

  HomSearch s;
  s.src = &src;
  s.dst = &dst;
  s.bijective = true;
  const auto ca = element_indices(dst, ya), cb = element_indices(dst, yb);
  for (std::size_t k = 0; k < src.num_generators(); ++k) s.candidates.push_back(k < x.num_a_gens() ? ca : cb);
  std::optional<ActionIso> found;
  for_each_homomorphism(s, [&](const std::vector<std::size_t>& img, const std::vector<std::size_t>&) {
    found = to_iso(img);
    return false;
  });
  return found;
}

}  // namespace

std::optional<ActionIso> actions_isomorphic(const LocalAction& x, const LocalAction& y, bool type_preserving) {
  if (x.target != y.target) return std::nullopt;
  if (auto iso = search_iso(x, y, false)) return iso;
  if (!type_preserving) return search_iso(x, y, true);
  return std::nullopt;
}

std::optional<ActionIso> admits_edge_swap(const LocalAction& x) {
  std::optional<std::vector<std::size_t>> natural;
  const auto& ga = x.ea.generators();
  const auto& gb = x.eb.generators();
  if (ga.size() == gb.size()) {
    const GroupTable& t = x.table();
    std::vector<std::size_t> img;
    for (std::size_t k = 0; k < ga.size(); ++k) img.push_back(t.generator(ga.size() + k));
    for (std::size_t k = 0; k < gb.size(); ++k) img.push_back(t.generator(k));
    natural = std::move(img);
  }
  return search_iso(x, x, true, natural ? &*natural : nullptr);
}

// ---------------------------------------------------------------------------

namespace {

std::size_t expected_classes(Target t) {
  switch (t) {
    case Target::Q: return 11;
    case Target::K44: return 10;
    case Target::K66: return 14;
  }
  return 0;
}

std::pair<int, int> library_range(Target t) {
  switch (t) {
    case Target::Q: return {1, 11};
    case Target::K44: return {12, 21};
    case Target::K66: return {22, 35};
  }
  return {0, -1};
}

// E_a and E_b of a flag-regular group: stabilizers of the line and of the
// point of flag 0.
LocalAction action_on_flags(const PermGroup& h, Target t) {
  const auto& geom = target_geometry(t);
  std::vector<Permutation> sa, sb;
  const auto [p0, l0] = geom.flags[0];
  h.for_each_element([&](const Permutation& x) {
    auto [p, l] = geom.flags[x(0)];
    if (l == l0) sa.push_back(x);
    if (p == p0) sb.push_back(x);
    return true;
  });
  const std::size_t n = h.degree();
  LocalAction la = make_local_action(greedy_group(n, sa), greedy_group(n, sb), t);
  if (la.group.order() != h.order()) throw std::logic_error("action_on_flags: edge groups do not generate");
  return la;
}

}  // namespace

EdgeRegularClassification classify_edge_regular(Target t, const ClassifyOptions& opts) {
  EdgeRegularClassification out;
  out.target = t;
  const auto& geom = target_geometry(t);
  std::vector<Point> omega(geom.flags.size());
  std::iota(omega.begin(), omega.end(), 0);
  RegularSearchOptions ro;
  ro.workers = opts.workers;
  ro.progress = opts.progress;
  const auto res = enumerate_regular_subgroups(target_flag_automorphisms(t), omega, ro);
  out.ambient_classes = res.classes.size();
  out.subgroups_found = res.subgroups_found;

  for (const auto& h : res.classes) {
    LocalAction la = action_on_flags(h, t);
    bool merged = false;
    for (auto& c : out.classes)
      if (actions_isomorphic(la, c.action, false)) {
        ++c.ambient_classes;
        merged = true;
        break;
      }
    if (!merged) out.classes.push_back({std::move(la), 0, 1});
  }

  const auto [lo, hi] = library_range(t);
  std::vector<int> hits(hi + 1, 0);
  bool each_class_once = true;
  for (auto& c : out.classes) {
    int matches = 0;
    for (int j = lo; j <= hi; ++j)
      if (actions_isomorphic(c.action, library_action(j), false)) {
        ++matches;
        ++hits[j];
        c.library_id = j;
      }
    if (matches != 1) each_class_once = false;
  }
  bool each_id_once = true;
  for (int j = lo; j <= hi; ++j)
    if (hits[j] != 1) each_id_once = false;

  const std::string tn = target_name(t);
  out.checks.push_back({tn + " class count", out.classes.size() == expected_classes(t),
                        std::to_string(out.classes.size()) + " (ambient conjugacy: " +
                            std::to_string(out.ambient_classes) + ")"});
  out.checks.push_back({tn + " ambient classes >= action classes", out.ambient_classes >= out.classes.size(), ""});
  out.checks.push_back({tn + " each class matches one library id", each_class_once, ""});
  out.checks.push_back({tn + " each library id hit once", each_id_once, ""});
  return out;
}

PointLineCounts count_point_line_regular(const ClassifyOptions& opts) {
  const auto& aut = target_vertex_automorphisms(Target::Q);
  const auto& geom = target_geometry(Target::Q);
  RegularSearchOptions ro;
  ro.workers = opts.workers;
  ro.progress = opts.progress;
  std::vector<Point> pts(geom.num_points), lines(geom.num_lines);
  std::iota(pts.begin(), pts.end(), 0);
  std::iota(lines.begin(), lines.end(), static_cast<Point>(geom.num_points));
  PointLineCounts c;
  c.points = enumerate_regular_subgroups(aut, pts, ro).classes.size();
  c.lines = enumerate_regular_subgroups(aut, lines, ro).classes.size();
  return c;
}

}  // namespace c2lat
