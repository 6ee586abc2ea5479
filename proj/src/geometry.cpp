#include "c2lat/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "c2lat/group_table.hpp"

namespace c2lat {

// ---------------------------------------------------------------------------
// GF(4)

namespace gf4 {
namespace {
// Polynomial basis {1, alpha}, alpha^2 = alpha + 1.
constexpr Elem kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
constexpr Elem kInv[4] = {0, 1, 3, 2};
}  // namespace

Elem add(Elem a, Elem b) { return static_cast<Elem>((a ^ b) & 3); }
Elem mul(Elem a, Elem b) { return kMul[a & 3][b & 3]; }
Elem inv(Elem a) {
  if ((a & 3) == 0) throw std::domain_error("gf4::inv: zero");
  return kInv[a & 3];
}
}  // namespace gf4

// ---------------------------------------------------------------------------
// F_2 matrices

F2Matrix F2Matrix::identity() {
  F2Matrix m;
  for (int i = 0; i < 6; ++i) m.rows[i] = static_cast<std::uint8_t>(1u << i);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::array<const char*, 6>& rows) {
  F2Matrix m;
  for (int i = 0; i < 6; ++i) {
    std::string_view r(rows[i]);
    if (r.size() != 6) throw std::invalid_argument("F2Matrix: row needs six entries");
    std::uint8_t bits = 0;
    for (int j = 0; j < 6; ++j) {
      if (r[j] == '1')
        bits |= static_cast<std::uint8_t>(1u << j);
      else if (r[j] != '0')
        throw std::invalid_argument("F2Matrix: entries must be 0 or 1");
    }
    m.rows[i] = bits;
  }
  return m;
}

F2Vec F2Matrix::apply(F2Vec v) const {
  F2Vec out = 0;
  for (int i = 0; i < 6; ++i)
    if (__builtin_parity(rows[i] & v)) out |= static_cast<F2Vec>(1u << i);
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
  // Column j of the product is this(o e_j).
  F2Matrix p;
  for (int j = 0; j < 6; ++j) {
    F2Vec col = apply(o.apply(basis(j + 1)));
    for (int i = 0; i < 6; ++i)
      if (col & (1u << i)) p.rows[i] |= static_cast<std::uint8_t>(1u << j);
  }
  return p;
}

bool F2Matrix::invertible() const {
  std::array<std::uint8_t, 6> r = rows;
  for (int col = 0, rank = 0; col < 6; ++col) {
    int piv = -1;
    for (int i = rank; i < 6; ++i)
      if (r[i] & (1u << col)) piv = i;
    if (piv < 0) return false;
    std::swap(r[rank], r[piv]);
    for (int i = 0; i < 6; ++i)
      if (i != rank && (r[i] & (1u << col))) r[i] ^= r[rank];
    ++rank;
  }
  return true;
}

std::uint64_t F2Matrix::order() const {
  if (!invertible()) throw std::domain_error("F2Matrix::order: singular matrix");
  F2Matrix x = *this;
  const F2Matrix id = identity();
  std::uint64_t k = 1;
  while (!(x == id)) {
    x = x * *this;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Incidence geometries

std::vector<std::vector<std::uint32_t>> IncidenceGeometry::lines_through_points() const {
  std::vector<std::vector<std::uint32_t>> out(num_points);
  for (auto [p, l] : flags) out[p].push_back(l);
  return out;
}

std::vector<std::vector<std::uint32_t>> IncidenceGeometry::points_on_lines() const {
  std::vector<std::vector<std::uint32_t>> out(num_lines);
  for (auto [p, l] : flags) out[l].push_back(p);
  return out;
}

std::optional<std::size_t> IncidenceGeometry::flag_index(std::uint32_t point, std::uint32_t line) const {
  auto it = std::lower_bound(flags.begin(), flags.end(), std::make_pair(point, line));
  if (it == flags.end() || *it != std::make_pair(point, line)) return std::nullopt;
  return static_cast<std::size_t>(it - flags.begin());
}

std::size_t BipartiteGraph::num_edges() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < n0; ++v) d += adj[v].size();
  return d;
}

bool BipartiteGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t n0, std::size_t n1,
                                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  BipartiteGraph g;
  g.n0 = n0;
  g.n1 = n1;
  g.adj.assign(n0 + n1, {});
  for (auto [u, v] : edges) {
    if (u >= n0 + n1 || v >= n0 + n1) throw std::out_of_range("BipartiteGraph: vertex out of range");
    if (g.color(u) == g.color(v)) throw std::invalid_argument("BipartiteGraph: edge inside a color class");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("BipartiteGraph: repeated edge");
  }
  return g;
}

// ---------------------------------------------------------------------------
// The quadrangle Q

namespace {

// 4x4 upper unitriangular matrices over GF(4), row-major.
using Mat4 = std::array<gf4::Elem, 16>;

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      gf4::Elem s = 0;
      for (int k = 0; k < 4; ++k) s = gf4::add(s, gf4::mul(a[4 * i + k], b[4 * k + j]));
      c[4 * i + j] = s;
    }
  return c;
}

// M(x,y,z); -x = x in characteristic 2.
Mat4 model(gf4::Elem x, gf4::Elem y, gf4::Elem z) {
  return {1, x, y, z,  //
          0, 1, 0, y,  //
          0, 0, 1, x,  //
          0, 0, 0, 1};
}

// Coordinates (x,y,z) packed as x + 4y + 16z; -1 when not of model form.
int model_key(const Mat4& m) {
  Mat4 shape = model(m[1], m[2], m[3]);
  if (shape != m) return -1;
  return m[1] + 4 * m[2] + 16 * m[3];
}

std::array<F2Vec, 4> span2(F2Vec u, F2Vec v) {
  std::array<F2Vec, 4> s{0, u, v, static_cast<F2Vec>(u ^ v)};
  std::sort(s.begin(), s.end());
  return s;
}

QuadrangleData make_quadrangle() {
  using gf4::kAlpha;
  const auto e = [](int i) { return basis(i); };
  QuadrangleData q;
  q.subspaces = {
      span2(e(5), e(6)),
      span2(e(1), e(2)),
      span2(e(3), e(4)),
      span2(e(1) ^ e(3) ^ e(5), e(2) ^ e(4) ^ e(5) ^ e(6)),
      span2(e(1) ^ e(4) ^ e(6), e(2) ^ e(3) ^ e(4) ^ e(5)),
      span2(e(2) ^ e(3) ^ e(6), e(1) ^ e(2) ^ e(4) ^ e(5)),
  };

  // Phi on the six generators of S, extended along the Cayley graph.
  const std::array<std::pair<Mat4, F2Vec>, 6> gens = {{
      {model(1, 0, 0), e(1)},
      {model(kAlpha, 0, 0), e(2)},
      {model(0, 1, 0), e(3)},
      {model(0, kAlpha, 0), e(4)},
      {model(0, 0, 1), e(5)},
      {model(0, 0, kAlpha), e(6)},
  }};
  std::array<int, 64> phi;
  phi.fill(-1);
  std::array<Mat4, 64> elem{};
  const Mat4 id = model(0, 0, 0);
  phi[model_key(id)] = 0;
  elem[model_key(id)] = id;
  std::queue<int> todo;
  todo.push(model_key(id));
  while (!todo.empty()) {
    int k = todo.front();
    todo.pop();
    for (const auto& [g, img] : gens) {
      Mat4 h = mat_mul(elem[k], g);
      int hk = model_key(h);
      if (hk < 0) throw std::logic_error("quadrangle: matrix model not closed");
      int val = phi[k] ^ img;
      if (phi[hk] < 0) {
        phi[hk] = val;
        elem[hk] = h;
        todo.push(hk);
      } else if (phi[hk] != val) {
        throw std::logic_error("quadrangle: Phi is not well defined");
      }
    }
  }
  std::set<int> image(phi.begin(), phi.end());
  if (image.size() != 64 || *image.begin() < 0) throw std::logic_error("quadrangle: Phi is not bijective");
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b)
      if (phi[model_key(mat_mul(elem[a], elem[b]))] != (phi[a] ^ phi[b]))
        throw std::logic_error("quadrangle: Phi is not a homomorphism");

  auto phi_set = [&](auto member) {
    std::array<F2Vec, 4> s{};
    int n = 0;
    for (gf4::Elem mu = 0; mu < 4; ++mu) {
      Mat4 m = member(mu);
      s[n++] = static_cast<F2Vec>(phi[model_key(m)]);
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  auto x_ab = [&](gf4::Elem a, gf4::Elem b) {
    return phi_set([=](gf4::Elem mu) { return model(gf4::mul(mu, a), gf4::mul(mu, b), 0); });
  };
  const std::array<std::array<F2Vec, 4>, 6> expected = {
      phi_set([](gf4::Elem mu) { return model(0, 0, mu); }),
      x_ab(1, 0),
      x_ab(0, 1),
      x_ab(1, 1),
      x_ab(1, kAlpha),
      x_ab(kAlpha, 1),
  };
  for (int i = 0; i < 6; ++i)
    if (expected[i] != q.subspaces[i])
      throw std::logic_error("quadrangle: U" + std::to_string(i + 1) + " disagrees with the matrix model");

  // Lines: cosets v + U_i, ordered by (i, least element).
  std::array<std::array<std::uint32_t, 64>, 6> line_idx{};
  for (int i = 0; i < 6; ++i) {
    std::map<F2Vec, std::uint32_t> reps;
    for (F2Vec v = 0; v < 64; ++v) {
      F2Vec r = 64;
      for (F2Vec u : q.subspaces[i]) r = std::min<F2Vec>(r, v ^ u);
      reps.emplace(r, 0);
    }
    for (auto& [r, idx] : reps) {
      idx = static_cast<std::uint32_t>(q.lines.size());
      q.lines.emplace_back(i, r);
    }
    for (F2Vec v = 0; v < 64; ++v) {
      F2Vec r = 64;
      for (F2Vec u : q.subspaces[i]) r = std::min<F2Vec>(r, v ^ u);
      line_idx[i][v] = reps.at(r);
    }
  }
  q.geometry.name = "Q";
  q.geometry.num_points = 64;
  q.geometry.num_lines = q.lines.size();
  for (std::uint32_t p = 0; p < 64; ++p) {
    std::vector<std::uint32_t> ls;
    for (int i = 0; i < 6; ++i) ls.push_back(line_idx[i][p]);
    std::sort(ls.begin(), ls.end());
    for (auto l : ls) q.geometry.flags.emplace_back(p, l);
  }
  return q;
}

}  // namespace

std::uint32_t QuadrangleData::line_of(int subspace, F2Vec v) const {
  F2Vec r = 64;
  for (F2Vec u : subspaces.at(subspace)) r = std::min<F2Vec>(r, v ^ u);
  auto it = std::lower_bound(lines.begin(), lines.end(), std::make_pair(subspace, r));
  if (it == lines.end() || *it != std::make_pair(subspace, r)) throw std::logic_error("QuadrangleData::line_of");
  return static_cast<std::uint32_t>(it - lines.begin());
}

int QuadrangleData::subspace_index(std::array<F2Vec, 4> elems) const {
  std::sort(elems.begin(), elems.end());
  for (int i = 0; i < 6; ++i)
    if (subspaces[i] == elems) return i;
  return -1;
}

const QuadrangleData& quadrangle() {
  static const QuadrangleData q = make_quadrangle();
  return q;
}

IncidenceGeometry build_Q() { return quadrangle().geometry; }

IncidenceGeometry build_Kmm(std::size_t m) {
  if (m < 2) throw std::invalid_argument("build_Kmm: m must be at least 2");
  IncidenceGeometry g;
  g.name = "K" + std::to_string(m) + "," + std::to_string(m);
  g.num_points = g.num_lines = m;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) g.flags.emplace_back(i, j);
  return g;
}

BipartiteGraph incidence_graph(const IncidenceGeometry& geom) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(geom.flags.size());
  const auto np = static_cast<std::uint32_t>(geom.num_points);
  for (auto [p, l] : geom.flags) edges.emplace_back(p, np + l);
  return BipartiteGraph::from_edges(geom.num_points, geom.num_lines, edges);
}

// ---------------------------------------------------------------------------
// Distances

namespace {

std::vector<int> bfs(const BipartiteGraph& g, std::uint32_t s, std::vector<std::uint32_t>* parent = nullptr) {
  std::vector<int> dist(g.num_vertices(), -1);
  if (parent) parent->assign(g.num_vertices(), s);
  std::vector<std::uint32_t> q{s};
  dist[s] = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (auto w : g.adj[q[i]])
      if (dist[w] < 0) {
        dist[w] = dist[q[i]] + 1;
        if (parent) (*parent)[w] = q[i];
        q.push_back(w);
      }
  return dist;
}

}  // namespace

std::optional<std::size_t> girth(const BipartiteGraph& g) {
  std::optional<std::size_t> best;
  std::vector<std::uint32_t> parent;
  for (std::uint32_t s = 0; s < g.num_vertices(); ++s) {
    auto dist = bfs(g, s, &parent);
    for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
      if (dist[u] < 0) continue;
      for (auto w : g.adj[u]) {
        if (parent[u] == w || parent[w] == u) continue;
        std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

std::optional<std::size_t> diameter(const BipartiteGraph& g) {
  std::size_t d = 0;
  for (std::uint32_t s = 0; s < g.num_vertices(); ++s) {
    auto dist = bfs(g, s);
    for (int x : dist) {
      if (x < 0) return std::nullopt;
      d = std::max<std::size_t>(d, static_cast<std::size_t>(x));
    }
  }
  return d;
}

PolygonCheck is_generalized_polygon(const BipartiteGraph& g, std::size_t m) {
  PolygonCheck r;
  if (g.n0 == 0 || g.n1 == 0) {
    r.failure = "empty color class";
    return r;
  }
  auto uniform = [&](std::size_t lo, std::size_t hi) -> std::optional<std::size_t> {
    std::size_t d = g.adj[lo].size();
    for (std::size_t v = lo; v < hi; ++v)
      if (g.adj[v].size() != d) return std::nullopt;
    return d;
  };
  auto point_deg = uniform(0, g.n0);
  auto line_deg = uniform(g.n0, g.num_vertices());
  if (!point_deg || !line_deg) {
    r.failure = "non-uniform degrees";
    return r;
  }
  if (*point_deg < 2 || *line_deg < 2) {
    r.failure = "degree below 2";
    return r;
  }
  auto d = diameter(g);
  if (!d) {
    r.failure = "disconnected";
    return r;
  }
  auto gi = girth(g);
  if (*d != m || !gi || *gi != 2 * m) {
    std::ostringstream os;
    os << "diameter " << *d << ", girth " << (gi ? std::to_string(*gi) : std::string("none")) << " (want "
       << m << ", " << 2 * m << ")";
    r.failure = os.str();
    return r;
  }
  r.order = std::make_pair(*line_deg - 1, *point_deg - 1);
  return r;
}

PolygonCheck is_generalized_polygon(const IncidenceGeometry& geom, std::size_t m) {
  return is_generalized_polygon(incidence_graph(geom), m);
}

// ---------------------------------------------------------------------------
// Coset graphs

CosetGraph coset_graph(const PermGroup& g, const PermGroup& e, const PermGroup& f) {
  if (!g.contains(e) || !g.contains(f)) throw std::invalid_argument("coset_graph: not a subgroup");
  if (e.contains(f) && f.contains(e)) throw std::invalid_argument("coset_graph: E = F");
  const GroupTable t(g);
  auto cosets = [&](const PermGroup& h, std::uint32_t offset, std::uint32_t& count) {
    std::vector<std::size_t> hidx;
    for (const auto& x : h.elements()) hidx.push_back(*t.index_of(x));
    std::vector<std::uint32_t> id(t.size(), UINT32_MAX);
    count = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (id[x] != UINT32_MAX) continue;
      for (auto y : hidx) id[t.mul(x, y)] = offset + count;
      ++count;
    }
    return id;
  };
  std::uint32_t ne = 0, nf = 0;
  auto ide = cosets(e, 0, ne);
  auto idf = cosets(f, 0, nf);
  for (auto& v : idf) v += ne;

  CosetGraph cg;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t x = 0; x < t.size(); ++x) {
    cg.edge_of_element.emplace_back(ide[x], idf[x]);
    edges.emplace(ide[x], idf[x]);
  }
  cg.graph = BipartiteGraph::from_edges(ne, nf, {edges.begin(), edges.end()});

  // A coset representative per vertex, then left multiplication.
  std::vector<std::size_t> rep(ne + nf);
  for (std::size_t x = t.size(); x-- > 0;) {
    rep[ide[x]] = x;
    rep[idf[x]] = x;
  }
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < t.num_generators(); ++k) {
    std::vector<Point> img(ne + nf);
    for (std::uint32_t v = 0; v < ne + nf; ++v) {
      std::size_t y = t.mul(t.generator(k), rep[v]);
      img[v] = v < ne ? ide[y] : idf[y];
    }
    gens.emplace_back(std::move(img));
  }
  cg.action = PermGroup(ne + nf, std::move(gens));
  return cg;
}

std::string export_adjacency(const BipartiteGraph& g) {
  std::ostringstream os;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    os << g.color(v);
    for (auto w : g.adj[v]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

}  // namespace c2lat
