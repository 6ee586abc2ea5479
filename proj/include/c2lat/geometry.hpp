#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c2lat/perm.hpp"

namespace c2lat {

// GF(4) as two bits: 0, 1, alpha = 2, alpha^2 = alpha + 1 = 3.
namespace gf4 {
using Elem = std::uint8_t;
inline constexpr Elem kAlpha = 2;
Elem add(Elem a, Elem b);
Elem mul(Elem a, Elem b);
Elem inv(Elem a);  // throws for 0
}  // namespace gf4

// Vectors of F_2^6 as 6-bit integers; e_i is bit i-1.
using F2Vec = std::uint8_t;
constexpr F2Vec basis(int i) { return static_cast<F2Vec>(1u << (i - 1)); }

// 6x6 matrix over F_2 acting on column vectors. Row i is a bitmask whose
// bit j-1 holds entry (i, j).
struct F2Matrix {
  std::array<std::uint8_t, 6> rows{};

  static F2Matrix identity();
  // Rows as strings of six '0'/'1' characters, left to right.
  static F2Matrix from_rows(const std::array<const char*, 6>& rows);

  F2Vec apply(F2Vec v) const;
  F2Matrix operator*(const F2Matrix& o) const;  // (this * o) v = this(o(v))
  bool operator==(const F2Matrix& o) const { return rows == o.rows; }
  bool invertible() const;
  std::uint64_t order() const;  // throws if not invertible
};

struct IncidenceGeometry {
  std::string name;
  std::size_t num_points = 0;
  std::size_t num_lines = 0;
  // Incident (point, line) pairs in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> flags;

  std::vector<std::vector<std::uint32_t>> lines_through_points() const;
  std::vector<std::vector<std::uint32_t>> points_on_lines() const;
  std::optional<std::size_t> flag_index(std::uint32_t point, std::uint32_t line) const;
};

// Two-colored simple graph. Vertices 0..n0-1 have color 0, the rest color 1.
struct BipartiteGraph {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbor lists

  std::size_t num_vertices() const { return n0 + n1; }
  std::size_t num_edges() const;
  int color(std::size_t v) const { return v < n0 ? 0 : 1; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  // Builds from an edge list; throws on same-color edges or repeats.
  static BipartiteGraph from_edges(std::size_t n0, std::size_t n1,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
};

// The quadrangle Q built from F_2^6 and the six subspaces U_1..U_6.
struct QuadrangleData {
  IncidenceGeometry geometry;
  // U_i as its four elements (sorted), index i-1.
  std::array<std::array<F2Vec, 4>, 6> subspaces{};
  // Line l is (subspace index 0..5, least element of the coset).
  std::vector<std::pair<int, F2Vec>> lines;
  std::uint32_t line_of(int subspace, F2Vec v) const;
  // Index 0..5 of the subspace equal to the given 4-element set, or -1.
  int subspace_index(std::array<F2Vec, 4> elems) const;
};

// Builds Q, checking the listed subspaces against the matrix model over
// GF(4). Throws std::logic_error on any inconsistency.
const QuadrangleData& quadrangle();
IncidenceGeometry build_Q();
IncidenceGeometry build_Kmm(std::size_t m);

// Points are vertices 0..P-1 (color 0), lines P..P+L-1 (color 1).
BipartiteGraph incidence_graph(const IncidenceGeometry& geom);

// None for a forest / a disconnected graph.
std::optional<std::size_t> girth(const BipartiteGraph& g);
std::optional<std::size_t> diameter(const BipartiteGraph& g);

struct PolygonCheck {
  std::optional<std::pair<std::size_t, std::size_t>> order;  // (s, t)
  std::string failure;
  explicit operator bool() const { return order.has_value(); }
};
// Color 0 plays the role of points: lines have s+1 points, points lie on
// t+1 lines.
PolygonCheck is_generalized_polygon(const BipartiteGraph& g, std::size_t m);
PolygonCheck is_generalized_polygon(const IncidenceGeometry& geom, std::size_t m);

struct CosetGraph {
  BipartiteGraph graph;
  // Action of G by left multiplication on the vertices, one permutation per
  // generator of G.
  PermGroup action;
  // Vertex pair {gE, gF} for every element index g of GroupTable(G).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_of_element;
};
// Vertices: left cosets gE (color 0) and gF (color 1); edges {gE, gF}.
CosetGraph coset_graph(const PermGroup& g, const PermGroup& e, const PermGroup& f);

// One line per vertex: "<color> <neighbor> <neighbor> ...".
std::string export_adjacency(const BipartiteGraph& g);

}  // namespace c2lat
