#include "c2lat/library.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "c2lat/geometry.hpp"
#include "c2lat/graph_aut.hpp"
#include "c2lat/group_iso.hpp"

namespace c2lat {

std::string target_name(Target t) {
  switch (t) {
    case Target::Q: return "Q";
    case Target::K44: return "K44";
    case Target::K66: return "K66";
  }
  return "?";
}

Target library_target(int i) {
  if (i < 1 || i > 35) throw std::out_of_range("library id out of range");
  return i <= 11 ? Target::Q : i <= 21 ? Target::K44 : Target::K66;
}

std::uint64_t library_expected_order(int i) {
  switch (library_target(i)) {
    case Target::Q: return 384;
    case Target::K44: return 16;
    case Target::K66: return 36;
  }
  return 0;
}

const LibraryGroup& library_group(int i) {
  if (i < 1 || i > 35) throw std::out_of_range("library id out of range");
  static std::array<std::once_flag, 36> once;
  static std::array<std::unique_ptr<LibraryGroup>, 36> cache;
  std::call_once(once[i], [i] {
    auto lg = std::make_unique<LibraryGroup>();
    lg->id = i;
    lg->presentation = library_presentation(i);
    lg->group = regular_representation(lg->presentation);
    lg->edges = edge_subgroups(lg->presentation, lg->group);
    cache[i] = std::move(lg);
  });
  return *cache[i];
}

const GroupTable& library_table(int i) {
  if (i < 1 || i > 35) throw std::out_of_range("library id out of range");
  static std::array<std::once_flag, 36> once;
  static std::array<std::unique_ptr<GroupTable>, 36> cache;
  std::call_once(once[i], [i] { cache[i] = std::make_unique<GroupTable>(library_group(i).group); });
  return *cache[i];
}

// ---------------------------------------------------------------------------
// Structure models

PermGroup regular_group(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::vector<Permutation> gens;
  PermGroup g = PermGroup::trivial(n);
  for (std::size_t h = 0; h < n && g.order() < n; ++h) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(mul(x, h));
    Permutation p(std::move(img));
    if (g.contains(p)) continue;
    gens.push_back(std::move(p));
    g = PermGroup(n, gens);
  }
  if (g.order() != n) throw std::logic_error("regular_group: not a group of order n");
  return g;
}

namespace {

struct Abstract {
  std::size_t n;
  std::function<std::size_t(std::size_t, std::size_t)> mul;
};

Abstract cyclic(std::size_t n) {
  return {n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }};
}

Abstract direct(const Abstract& a, const Abstract& b) {
  const std::size_t nb = b.n;
  return {a.n * nb, [a, b, nb](std::size_t x, std::size_t y) {
            return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
          }};
}

// N x| C_m where the generator of C_m acts on N by `phi`.
Abstract semidirect(const Abstract& n, std::size_t m, const std::function<std::size_t(std::size_t)>& phi) {
  const std::size_t nn = n.n;
  return {nn * m, [n, m, nn, phi](std::size_t x, std::size_t y) {
            std::size_t n1 = x / m, h1 = x % m, n2 = y / m, h2 = y % m;
            for (std::size_t k = 0; k < h1; ++k) n2 = phi(n2);
            return n.mul(n1, n2) * m + (h1 + h2) % m;
          }};
}

// Inversion on an abelian group Z_a x Z_b x ... given by its factors.
std::function<std::size_t(std::size_t)> negate(std::vector<std::size_t> factors) {
  return [factors](std::size_t x) {
    std::size_t out = 0, scale = 1;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      std::size_t c = x % *it;
      x /= *it;
      out += ((*it - c) % *it) * scale;
      scale *= *it;
    }
    return out;
  };
}

std::map<std::string, Abstract> models() {
  std::map<std::string, Abstract> m;
  const Abstract c2 = cyclic(2), c4 = cyclic(4), c6 = cyclic(6);
  const Abstract s3 = semidirect(cyclic(3), 2, negate({3}));
  const Abstract d8 = semidirect(c4, 2, negate({4}));
  m.emplace("C4xC4", direct(c4, c4));
  // a -> ab, b -> b on C4 x C2 (elements 2x + y).
  m.emplace("(C4xC2):C2", semidirect(direct(c4, c2), 2, [](std::size_t v) {
              std::size_t x = v / 2, y = v % 2;
              return 2 * x + (y + x) % 2;
            }));
  m.emplace("C4:C4", semidirect(c4, 4, negate({4})));
  m.emplace("C2xD8", direct(c2, d8));
  m.emplace("C2xC2xC2xC2", direct(direct(c2, c2), direct(c2, c2)));
  m.emplace("C4xC2xC2", direct(c4, direct(c2, c2)));
  m.emplace("S3xS3", direct(s3, s3));
  m.emplace("C6xS3", direct(c6, s3));
  m.emplace("C6xC6", direct(c6, c6));
  m.emplace("C2x((C3xC3):C2)", direct(c2, semidirect(direct(cyclic(3), cyclic(3)), 2, negate({3, 3}))));
  return m;
}

struct Table9Row {
  std::vector<int> ids;
  const char* structure;
  const char* small_group;
};

const std::vector<Table9Row>& table9() {
  static const std::vector<Table9Row> rows = {
      {{12}, "C4xC4", "(16,2)"},
      {{13, 18, 19}, "(C4xC2):C2", "(16,3)"},
      {{14}, "C4:C4", "(16,4)"},
      {{15, 16, 21}, "C2xD8", "(16,11)"},
      {{17}, "C2xC2xC2xC2", "(16,14)"},
      {{20}, "C4xC2xC2", "(16,10)"},
      {{22, 26, 27, 28, 30, 31}, "S3xS3", "(36,10)"},
      {{23, 24, 32, 33, 34}, "C6xS3", "(36,12)"},
      {{25}, "C6xC6", "(36,14)"},
      {{29, 35}, "C2x((C3xC3):C2)", "(36,13)"},
  };
  return rows;
}

std::string join(const std::vector<int>& ids) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ids.size(); ++k) os << (k ? "," : "") << "L" << ids[k];
  return os.str();
}

}  // namespace

PermGroup structure_model(const std::string& description) {
  static const std::map<std::string, Abstract> m = models();
  auto it = m.find(description);
  if (it == m.end()) throw std::invalid_argument("structure_model: unknown description " + description);
  return regular_group(it->second.n, it->second.mul);
}

// ---------------------------------------------------------------------------

LibraryReport verify_library() {
  LibraryReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  for (int i = 1; i <= 35; ++i) {
    try {
      const auto& lg = library_group(i);
      const std::uint64_t ord = lg.group.order();
      bool ok = ord == library_expected_order(i) && lg.group.degree() == ord;
      add("order L" + std::to_string(i), ok, std::to_string(ord));
    } catch (const std::exception& e) {
      add("order L" + std::to_string(i), false, e.what());
    }
  }
  if (!rep.all_ok()) return rep;

  // Isomorphism classes: compare each group with one member per class.
  for (int i = 1; i <= 35; ++i) {
    const auto& lg = library_group(i);
    bool placed = false;
    for (auto& cls : rep.iso_classes) {
      const auto& other = library_group(cls.front());
      if (other.group.order() != lg.group.order()) continue;
      if (isomorphic_groups(lg.presentation, other.group)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) rep.iso_classes.push_back({i});
  }
  {
    bool distinct = true;
    for (const auto& cls : rep.iso_classes)
      if (cls.front() <= 11 && cls.size() > 1) distinct = false;
    add("L1..L11 pairwise non-isomorphic", distinct);
  }
  for (const auto& row : table9()) {
    bool same_class = false;
    for (const auto& cls : rep.iso_classes)
      if (cls == row.ids) same_class = true;
    add("isomorphism class " + join(row.ids), same_class);
    const PermGroup model = structure_model(row.structure);
    for (int id : row.ids) {
      bool ok = isomorphic_groups(library_group(id).presentation, model).has_value();
      add("L" + std::to_string(id) + " = " + row.structure + " " + row.small_group, ok);
    }
  }

  // L19: the primary reading is the one giving an edge-regular action on K4,4.
  {
    std::ostringstream detail;
    bool primary_ok = false;
    const auto& lg = library_group(19);
    const auto k44 = incidence_graph(build_Kmm(4));
    const auto cg = coset_graph(lg.group, lg.edges.b, lg.edges.a);
    primary_ok = lg.group.order() == 16 && cg.graph.num_edges() == 16 &&
                 graph_isomorphism(cg.graph, k44, true).has_value();
    detail << "primary " << lg.presentation.reading << ": order " << lg.group.order();
    for (const auto& r : lg.presentation.readings) {
      if (r == lg.presentation.reading) continue;
      try {
        auto p = library_presentation(19, r);
        detail << "; " << r << ": order " << regular_representation(p).order();
      } catch (const std::exception& e) {
        detail << "; " << r << ": " << e.what();
      }
    }
    add("L19 reading", primary_ok, detail.str());
  }
  return rep;
}

}  // namespace c2lat
