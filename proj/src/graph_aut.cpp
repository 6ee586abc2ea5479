#include "c2lat/graph_aut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace c2lat {

namespace {

using Coloring = std::vector<std::uint32_t>;

// Replaces arbitrary keys by their rank among the distinct keys.
template <class Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<std::uint32_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  Coloring c(keys.size());
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++r;
    c[idx[i]] = r;
  }
  return c;
}

std::size_t num_cells(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

class Refiner {
 public:
  Refiner(const BipartiteGraph& g, bool fix_colors) : g_(g) {
    using Key = std::vector<std::uint32_t>;
    const std::size_t n = g.num_vertices();
    std::vector<Key> keys(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      Key& k = keys[v];
      k.push_back(fix_colors ? static_cast<std::uint32_t>(g.color(v)) : 0);
      k.push_back(static_cast<std::uint32_t>(g.adj[v].size()));
      std::vector<int> dist(n, -1);
      std::vector<std::uint32_t> q{v};
      dist[v] = 0;
      std::vector<std::uint32_t> profile{1};
      for (std::size_t i = 0; i < q.size(); ++i)
        for (auto w : g.adj[q[i]])
          if (dist[w] < 0) {
            dist[w] = dist[q[i]] + 1;
            if (profile.size() <= static_cast<std::size_t>(dist[w])) profile.push_back(0);
            ++profile[dist[w]];
            q.push_back(w);
          }
      profile.push_back(static_cast<std::uint32_t>(n - q.size()));
      k.insert(k.end(), profile.begin(), profile.end());
    }
    root_ = refine(rank_keys(keys));
  }

  const Coloring& root() const { return root_; }

  Coloring refine(Coloring c) const {
    using Key = std::vector<std::uint32_t>;
    std::size_t cells = num_cells(c);
    std::vector<Key> keys(c.size());
    for (;;) {
      for (std::size_t v = 0; v < c.size(); ++v) {
        Key& k = keys[v];
        k.clear();
        k.push_back(c[v]);
        for (auto w : g_.adj[v]) k.push_back(c[w]);
        std::sort(k.begin() + 1, k.end());
      }
      Coloring next = rank_keys(keys);
      std::size_t nc = num_cells(next);
      c = std::move(next);
      if (nc == cells) return c;
      cells = nc;
    }
  }

  Coloring individualize(const Coloring& c, std::uint32_t v) const {
    std::vector<std::uint32_t> keys(c.size());
    for (std::size_t u = 0; u < c.size(); ++u) keys[u] = 2 * c[u] + (u == v ? 0 : 1);
    return refine(rank_keys(keys));
  }

 private:
  const BipartiteGraph& g_;
  Coloring root_;
};

// Cell sizes indexed by color; equal for corresponding nodes of isomorphic
// configurations.
std::vector<std::uint32_t> fingerprint(const Coloring& c) {
  std::vector<std::uint32_t> f(num_cells(c), 0);
  for (auto x : c) ++f[x];
  return f;
}

std::optional<std::uint32_t> target_cell(const std::vector<std::uint32_t>& fp, CellRule rule) {
  std::optional<std::uint32_t> best;
  for (std::uint32_t k = 0; k < fp.size(); ++k) {
    if (fp[k] < 2) continue;
    if (!best || (rule == CellRule::FirstSmallest ? fp[k] < fp[*best] : fp[k] > fp[*best])) best = k;
  }
  return best;
}

std::vector<std::uint32_t> cell_members(const Coloring& c, std::uint32_t k) {
  std::vector<std::uint32_t> m;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (c[v] == k) m.push_back(v);
  return m;
}

bool maps_edges(const BipartiteGraph& g, const BipartiteGraph& h, const std::vector<Point>& img) {
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    for (auto w : g.adj[v])
      if (!h.adjacent(img[v], img[w])) return false;
  return true;
}

// The first path of the search tree in the reference graph.
struct Path {
  std::vector<Coloring> nodes;  // nodes[d] at depth d; the last is discrete
  std::vector<std::vector<std::uint32_t>> fps;
  std::vector<std::uint32_t> chosen;  // vertex individualized below node d
  std::vector<std::vector<std::uint32_t>> cells;
};

Path first_path(const Refiner& r, CellRule rule) {
  Path p;
  Coloring c = r.root();
  for (;;) {
    auto fp = fingerprint(c);
    p.nodes.push_back(c);
    p.fps.push_back(fp);
    auto t = target_cell(fp, rule);
    if (!t) break;
    auto cell = cell_members(c, *t);
    p.cells.push_back(cell);
    p.chosen.push_back(cell.front());
    c = r.individualize(c, cell.front());
  }
  return p;
}

// Searches the subtree below `c` (at depth d) of graph h for a leaf matching
// the reference leaf of g.
std::optional<std::vector<Point>> match_leaf(const BipartiteGraph& g, const Path& ref, const Refiner& rh,
                                             const BipartiteGraph& h, const Coloring& c, std::size_t d,
                                             CellRule rule) {
  auto fp = fingerprint(c);
  if (d >= ref.fps.size() || fp != ref.fps[d]) return std::nullopt;
  if (d + 1 == ref.nodes.size()) {
    const Coloring& leaf = ref.nodes.back();
    std::vector<Point> by_color(c.size());
    for (std::uint32_t u = 0; u < c.size(); ++u) by_color[c[u]] = u;
    std::vector<Point> img(c.size());
    for (std::uint32_t v = 0; v < c.size(); ++v) img[v] = by_color[leaf[v]];
    if (maps_edges(g, h, img)) return img;
    return std::nullopt;
  }
  auto t = target_cell(fp, rule);
  for (auto u : cell_members(c, *t)) {
    auto m = match_leaf(g, ref, rh, h, rh.individualize(c, u), d + 1, rule);
    if (m) return m;
  }
  return std::nullopt;
}

struct UnionFind {
  std::vector<std::uint32_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { p[find(a)] = find(b); }
};

}  // namespace

bool is_graph_automorphism(const BipartiteGraph& g, const Permutation& p, bool fix_colors) {
  if (p.degree() != g.num_vertices()) return false;
  if (fix_colors)
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
      if (g.color(v) != g.color(p(v))) return false;
  return maps_edges(g, g, p.images());
}

PermGroup graph_automorphisms(const BipartiteGraph& g, bool fix_colors, CellRule rule) {
  const std::size_t n = g.num_vertices();
  const Refiner r(g, fix_colors);
  const Path path = first_path(r, rule);
  std::vector<Permutation> gens;
  // Bottom-up: at depth d look for automorphisms fixing chosen[0..d-1] and
  // moving chosen[d] to each vertex of its cell not yet in its orbit.
  for (std::size_t d = path.chosen.size(); d-- > 0;) {
    UnionFind orbits(n);
    for (const auto& x : gens)
      for (std::uint32_t v = 0; v < n; ++v) orbits.unite(v, x(v));
    const std::uint32_t base = path.chosen[d];
    for (auto w : path.cells[d]) {
      if (orbits.find(w) == orbits.find(base)) continue;
      auto img = match_leaf(g, path, r, g, r.individualize(path.nodes[d], w), d + 1, rule);
      if (!img) continue;
      Permutation x(std::move(*img));
      if (!is_graph_automorphism(g, x, fix_colors)) throw std::logic_error("graph_automorphisms: bad generator");
      for (std::uint32_t v = 0; v < n; ++v) orbits.unite(v, x(v));
      gens.push_back(std::move(x));
    }
  }
  return PermGroup(n, std::move(gens));
}

std::optional<Permutation> graph_isomorphism(const BipartiteGraph& g, const BipartiteGraph& h,
                                             bool respect_colors) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  if (respect_colors && (g.n0 != h.n0 || g.n1 != h.n1)) return std::nullopt;
  const Refiner rg(g, respect_colors), rh(h, respect_colors);
  const Path path = first_path(rg, CellRule::FirstSmallest);
  // Initial colorings are ranks of keys; compare the keyed cells directly.
  auto img = match_leaf(g, path, rh, h, rh.root(), 0, CellRule::FirstSmallest);
  if (!img) return std::nullopt;
  Permutation p(std::move(*img));
  if (respect_colors)
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
      if (g.color(v) != h.color(p(v))) return std::nullopt;
  return p;
}

}  // namespace c2lat
