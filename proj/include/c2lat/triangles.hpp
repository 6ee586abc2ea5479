#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "c2lat/classifier.hpp"
#include "c2lat/geometry.hpp"
#include "c2lat/group_table.hpp"
#include "c2lat/presentation.hpp"

namespace c2lat {

struct TriangleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Triangle of groups with trivial face group. Vertex j (1..3) is the library
// action vertex[j-1]; edge group i is the model edge[i-1]; eps[i-1][j-1]
// holds the images of the model generators of E_i in library_table(V_j)
// (empty for i == j).
struct TriangleOfGroups {
  Family family;
  Gammas gammas{};
  std::array<int, 3> vertex{};
  std::array<EdgeType, 3> edge{};
  std::array<std::array<std::vector<std::size_t>, 3>, 3> eps;

  const GroupTable& vertex_table(int j) const;
  // Sorted element indices of eps_ij(E_i) inside V_j.
  std::vector<std::size_t> image(int i, int j) const;
};

// eps_ij = kappa o gamma_ij. Throws TriangleError on incompatible types,
// unknown labels or a failed non-degeneracy check.
TriangleOfGroups make_triangle(const Family& f, const Gammas& g);
TriangleOfGroups make_triangle(const Family& f, const std::vector<std::string>& labels);

// Exact rational multiple of pi.
struct PiFraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  PiFraction() = default;
  PiFraction(std::uint64_t n, std::uint64_t d);
  PiFraction operator+(const PiFraction& o) const;
  bool operator==(const PiFraction&) const = default;
  std::string str() const;  // "pi/4", "3pi/2", "pi"
};
PiFraction angle_from_girth(std::size_t girth);

struct LocalActionSummary {
  int type = 0;
  int library_id = 0;
  BipartiteGraph graph;  // cosets of the side-b image are color 0
  std::size_t girth = 0;
  PiFraction angle;
};
LocalActionSummary local_action(const TriangleOfGroups& t, int i);

struct BuildingVerdict {
  bool building = false;
  std::array<std::size_t, 3> m{};
  std::array<std::pair<std::size_t, std::size_t>, 3> orders{};
  std::array<std::string, 3> links;
  std::array<PiFraction, 3> angles;
  PiFraction angle_sum;
  std::string failure;
  std::string summary() const;
};
BuildingVerdict check_building_criterion(const TriangleOfGroups& t);
// Angle-sum part of the criterion on its own.
bool euclidean_angles(const std::array<std::size_t, 3>& girths);

// Generators v<j>_<name> for each vertex group in order; relators: vertex
// relators, then eps_ij(e) eps_ik(e)^-1 for each edge group generator e.
FinPresentation fundamental_presentation(const TriangleOfGroups& t);

}  // namespace c2lat
