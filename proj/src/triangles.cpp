#include "c2lat/triangles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "c2lat/library.hpp"

namespace c2lat {

const GroupTable& TriangleOfGroups::vertex_table(int j) const { return library_table(vertex[j - 1]); }

std::vector<std::size_t> TriangleOfGroups::image(int i, int j) const {
  return vertex_table(j).closure(eps[i - 1][j - 1]);
}

namespace {

int vertex_id(const Family& f, int j) { return j == 1 ? f.r : j == 2 ? f.s : f.t; }

void check_nondegenerate(const TriangleOfGroups& t) {
  for (int k = 1; k <= 3; ++k) {
    int i = k == 1 ? 2 : 1, j = k == 3 ? 2 : 3;
    const GroupTable& v = t.vertex_table(k);
    const auto a = t.image(i, k), b = t.image(j, k);
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    const std::string where = "V" + std::to_string(k) + " = L" + std::to_string(t.vertex[k - 1]);
    if (common.size() != 1) throw TriangleError(where + ": edge group images intersect nontrivially");
    if (a.size() == 1 || b.size() == 1) throw TriangleError(where + ": an edge group image is trivial");
    std::vector<std::size_t> gens = t.eps[i - 1][k - 1];
    gens.insert(gens.end(), t.eps[j - 1][k - 1].begin(), t.eps[j - 1][k - 1].end());
    if (v.closure(gens).size() != v.size()) throw TriangleError(where + ": edge group images do not generate");
  }
}

}  // namespace

TriangleOfGroups make_triangle(const Family& f, const Gammas& g) {
  if (auto err = compatibility_error(f)) throw TriangleError(f.name() + ": " + *err);
  TriangleOfGroups t;
  t.family = f;
  t.gammas = g;
  t.edge = edge_types(f);
  for (int j = 1; j <= 3; ++j) t.vertex[j - 1] = vertex_id(f, j);
  const auto& pos = positions(f.type);
  for (int p = 0; p < 6; ++p) {
    const EdgeModel& m = edge_model(t.edge[pos[p].edge - 1]);
    if (g[p] >= m.num_auts())
      throw TriangleError("gamma_" + std::string(position_names()[p]) + ": no such automorphism");
    const int v = t.vertex[pos[p].vertex - 1];
    const auto& kappa = standard_embedding(v, pos[p].side);
    const auto& gamma = m.aut(g[p]).map;
    std::vector<std::size_t> images;
    for (std::size_t k = 0; k < m.rank(); ++k) images.push_back(kappa[gamma[m.table().generator(k)]]);
    const GroupTable& vt = library_table(v);
    auto map = extend_homomorphism(m.table(), vt, images, false);
    if (!map) throw TriangleError("eps_" + std::string(position_names()[p]) + ": relators of the edge group fail");
    if (vt.closure(images).size() != m.order())
      throw TriangleError("eps_" + std::string(position_names()[p]) + ": not injective");
    t.eps[pos[p].edge - 1][pos[p].vertex - 1] = std::move(images);
  }
  check_nondegenerate(t);
  return t;
}

TriangleOfGroups make_triangle(const Family& f, const std::vector<std::string>& labels) {
  if (auto err = compatibility_error(f)) throw TriangleError(f.name() + ": " + *err);
  try {
    return make_triangle(f, parse_gammas(f, labels));
  } catch (const TriangleError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw TriangleError(e.what());
  }
}

// ---------------------------------------------------------------------------

PiFraction::PiFraction(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("PiFraction: zero denominator");
  const auto g = std::gcd(n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

PiFraction PiFraction::operator+(const PiFraction& o) const { return {num * o.den + o.num * den, den * o.den}; }

std::string PiFraction::str() const {
  if (num == 0) return "0";
  std::string s = (num == 1 ? "" : std::to_string(num)) + "pi";
  return den == 1 ? s : s + "/" + std::to_string(den);
}

PiFraction angle_from_girth(std::size_t girth) {
  if (girth == 0) throw std::invalid_argument("angle_from_girth: girth 0");
  return {2, girth};
}

LocalActionSummary local_action(const TriangleOfGroups& t, int i) {
  if (i < 1 || i > 3) throw std::out_of_range("local_action: type must be 1..3");
  const auto& pos = positions(t.family.type);
  std::vector<std::size_t> gb, ga;
  for (const auto& p : pos)
    if (p.vertex == i) (p.side == 'b' ? gb : ga) = t.eps[p.edge - 1][i - 1];
  const GroupTable& v = t.vertex_table(i);
  LocalActionSummary s;
  s.type = i;
  s.library_id = t.vertex[i - 1];
  s.graph = coset_graph(library_group(s.library_id).group, v.subgroup(gb), v.subgroup(ga)).graph;
  auto g = girth(s.graph);
  if (!g) throw std::logic_error("local_action: coset graph is a forest");
  s.girth = *g;
  s.angle = angle_from_girth(s.girth);
  return s;
}

bool euclidean_angles(const std::array<std::size_t, 3>& girths) {
  PiFraction sum;
  for (auto g : girths) sum = sum + angle_from_girth(g);
  return sum == PiFraction(1, 1);
}

BuildingVerdict check_building_criterion(const TriangleOfGroups& t) {
  BuildingVerdict v;
  bool links_ok = true;
  std::array<std::size_t, 3> girths{};
  for (int i = 1; i <= 3; ++i) {
    const auto la = local_action(t, i);
    girths[i - 1] = la.girth;
    v.angles[i - 1] = la.angle;
    v.angle_sum = v.angle_sum + la.angle;
    v.m[i - 1] = la.girth / 2;
    const auto pc = is_generalized_polygon(la.graph, v.m[i - 1]);
    if (!pc) {
      links_ok = false;
      if (v.failure.empty()) v.failure = "link of type " + std::to_string(i) + ": " + pc.failure;
      v.links[i - 1] = "?";
      continue;
    }
    v.orders[i - 1] = *pc.order;
    const auto [s, tt] = *pc.order;
    v.links[i - 1] = v.m[i - 1] == 2 ? "K" + std::to_string(s + 1) + "," + std::to_string(tt + 1)
                                     : "(" + std::to_string(s) + "," + std::to_string(tt) + ")";
  }
  const bool angles_ok = euclidean_angles(girths);
  if (links_ok && !angles_ok) v.failure = "angle sum " + v.angle_sum.str() + " differs from pi";
  v.building = links_ok && angles_ok;
  return v;
}

std::string BuildingVerdict::summary() const {
  std::ostringstream os;
  os << (building ? "building: C~2" : "not a building") << ", links " << links[0] << "," << links[1] << ","
     << links[2] << ", angles " << angles[0].str() << "," << angles[1].str() << "," << angles[2].str();
  if (!failure.empty()) os << " (" << failure << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

FinPresentation fundamental_presentation(const TriangleOfGroups& t) {
  FinPresentation out;
  out.name = "pi1(" + t.family.name() + ")";
  std::array<int, 3> offset{};
  for (int j = 1; j <= 3; ++j) {
    const auto& p = library_group(t.vertex[j - 1]).presentation;
    offset[j - 1] = static_cast<int>(out.generators.size());
    for (const auto& g : p.generators) out.generators.push_back({"v" + std::to_string(j) + "_" + g.name, 0});
    for (const auto& r : p.relators) {
      Word w;
      for (Letter x : r) w.push_back(x > 0 ? x + offset[j - 1] : x - offset[j - 1]);
      out.relators.push_back(std::move(w));
    }
  }
  auto word_in = [&](int j, std::size_t elem) {
    Word w;
    for (auto g : t.vertex_table(j).word(elem)) w.push_back(static_cast<Letter>(g) + 1 + offset[j - 1]);
    return w;
  };
  for (int i = 1; i <= 3; ++i) {
    int j = i == 1 ? 2 : 1, k = i == 3 ? 2 : 3;
    const auto& ej = t.eps[i - 1][j - 1];
    const auto& ek = t.eps[i - 1][k - 1];
    for (std::size_t g = 0; g < ej.size(); ++g)
      out.relators.push_back(reduce(concat(word_in(j, ej[g]), inverse(word_in(k, ek[g])))));
  }
  return out;
}

}  // namespace c2lat
