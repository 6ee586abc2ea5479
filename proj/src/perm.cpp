#include "c2lat/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace c2lat {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Permutation: not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text, Point base) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw std::invalid_argument("cycle notation: expected a point");
      long long v = std::stoll(std::string(text.substr(i, j - i))) - base;
      if (v < 0 || static_cast<std::size_t>(v) >= degree)
        throw std::invalid_argument("cycle notation: point out of range");
      if (used[v]) throw std::invalid_argument("cycle notation: repeated point");
      used[v] = 1;
      cyc.push_back(static_cast<Point>(v));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument("cycle notation: expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.degree() != degree()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = q.images_[images_[i]];
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

std::optional<Point> Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::string Permutation::to_cycles(Point base) const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      if (!first) os << ',';
      os << x + base;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Stabilizer chain

namespace detail {

struct StabChain {
  std::vector<Point> base;
  std::vector<std::vector<Permutation>> strong;
  std::vector<std::vector<Point>> orbit;
  std::vector<std::vector<std::int32_t>> index;  // point -> slot in trans, or -1
  std::vector<std::vector<Permutation>> trans;
  std::vector<std::vector<Permutation>> trans_inv;
};

struct ChainCell {
  std::once_flag once;
  std::unique_ptr<StabChain> chain;
};

}  // namespace detail

namespace {

using detail::StabChain;

void rebuild_orbit(StabChain& c, std::size_t level, std::size_t degree) {
  auto& orb = c.orbit[level];
  auto& idx = c.index[level];
  auto& tr = c.trans[level];
  auto& tri = c.trans_inv[level];
  orb.clear();
  tr.clear();
  tri.clear();
  idx.assign(degree, -1);
  Point b = c.base[level];
  orb.push_back(b);
  idx[b] = 0;
  tr.push_back(Permutation::identity(degree));
  tri.push_back(Permutation::identity(degree));
  for (std::size_t q = 0; q < orb.size(); ++q) {
    Point pt = orb[q];
    for (const auto& s : c.strong[level]) {
      Point im = s(pt);
      if (idx[im] >= 0) continue;
      idx[im] = static_cast<std::int32_t>(orb.size());
      orb.push_back(im);
      tr.push_back(tr[idx[pt]] * s);
      tri.push_back(tr.back().inverse());
    }
  }
}

void add_level(StabChain& c, Point b, std::size_t degree) {
  c.base.push_back(b);
  c.strong.emplace_back();
  c.orbit.emplace_back();
  c.index.emplace_back();
  c.trans.emplace_back();
  c.trans_inv.emplace_back();
  rebuild_orbit(c, c.base.size() - 1, degree);
}

// Sifts g starting at `level`. Returns the residue and the level where
// sifting stopped (base.size() when it went through).
std::pair<Permutation, std::size_t> strip(const StabChain& c, Permutation g, std::size_t level) {
  for (std::size_t l = level; l < c.base.size(); ++l) {
    Point pt = g(c.base[l]);
    std::int32_t k = c.index[l][pt];
    if (k < 0) return {std::move(g), l};
    g = g * c.trans_inv[l][k];
  }
  return {std::move(g), c.base.size()};
}

std::unique_ptr<StabChain> schreier_sims(std::size_t degree, const std::vector<Permutation>& gens,
                                         const std::vector<Point>& hint) {
  auto c = std::make_unique<StabChain>();
  for (Point b : hint) {
    if (std::find(c->base.begin(), c->base.end(), b) == c->base.end()) add_level(*c, b, degree);
  }
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  for (const auto& g : nontrivial) {
    bool fixes_all = std::all_of(c->base.begin(), c->base.end(), [&](Point b) { return g(b) == b; });
    if (fixes_all) add_level(*c, *g.smallest_moved_point(), degree);
  }
  for (std::size_t l = 0; l < c->base.size(); ++l) {
    for (const auto& g : nontrivial) {
      bool fixes = true;
      for (std::size_t m = 0; m < l && fixes; ++m) fixes = g(c->base[m]) == c->base[m];
      if (fixes) c->strong[l].push_back(g);
    }
    rebuild_orbit(*c, l, degree);
  }

  long long i = static_cast<long long>(c->base.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t q = 0; q < c->orbit[li].size() && !restarted; ++q) {
      Point pt = c->orbit[li][q];
      for (std::size_t si = 0; si < c->strong[li].size(); ++si) {
        const Permutation s = c->strong[li][si];
        Point im = s(pt);
        Permutation h = c->trans[li][q] * s * c->trans_inv[li][c->index[li][im]];
        if (h.is_identity()) continue;
        auto [res, j] = strip(*c, std::move(h), li + 1);
        if (j == c->base.size() && res.is_identity()) continue;
        if (j == c->base.size()) add_level(*c, *res.smallest_moved_point(), degree);
        for (std::size_t l = li + 1; l <= j; ++l) {
          c->strong[l].push_back(res);
          rebuild_orbit(*c, l, degree);
        }
        i = static_cast<long long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  // Drop trailing levels with trivial orbits so the base is irredundant at
  // the end.
  while (!c->base.empty() && c->orbit.back().size() == 1 && c->strong.back().empty()) {
    c->base.pop_back();
    c->strong.pop_back();
    c->orbit.pop_back();
    c->index.pop_back();
    c->trans.pop_back();
    c->trans_inv.pop_back();
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), cell_(std::make_shared<detail::ChainCell>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> t(degree), c(degree);
    std::iota(t.begin(), t.end(), Point{0});
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < degree; ++i) c[i] = static_cast<Point>((i + 1) % degree);
    gens.emplace_back(t);
    if (degree > 2) gens.emplace_back(c);
  }
  return PermGroup(degree, std::move(gens));
}

const detail::StabChain& PermGroup::chain() const {
  if (!cell_) throw std::logic_error("PermGroup: default-constructed group");
  std::call_once(cell_->once, [&] { cell_->chain = schreier_sims(degree_, gens_, base_hint_); });
  return *cell_->chain;
}

std::uint64_t PermGroup::order() const {
  const auto& c = chain();
  std::uint64_t ord = 1;
  for (const auto& o : c.orbit) {
    if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(o.size()), &ord))
      throw std::overflow_error("group order exceeds 64 bits");
  }
  return ord;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  const auto& c = chain();
  auto [res, j] = strip(c, g, 0);
  return j == c.base.size() && res.is_identity();
}

bool PermGroup::contains(const PermGroup& h) const {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) throw std::out_of_range("orbit: point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> orb{p};
  seen[p] = 1;
  for (std::size_t q = 0; q < orb.size(); ++q)
    for (const auto& g : gens_) {
      Point im = g(orb[q]);
      if (!seen[im]) {
        seen[im] = 1;
        orb.push_back(im);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

const std::vector<Point>& PermGroup::base() const { return chain().base; }

const std::vector<Permutation>& PermGroup::stabilizer_generators(std::size_t level) const {
  return chain().strong.at(level);
}

const std::vector<Point>& PermGroup::basic_orbit(std::size_t level) const {
  return chain().orbit.at(level);
}

const Permutation& PermGroup::transversal(std::size_t level, Point pt) const {
  const auto& c = chain();
  std::int32_t k = c.index.at(level).at(pt);
  if (k < 0) throw std::out_of_range("transversal: point not in basic orbit");
  return c.trans[level][k];
}

PermGroup PermGroup::stabilizer_subgroup(std::size_t level) const {
  const auto& c = chain();
  if (level >= c.base.size()) return trivial(degree_);
  PermGroup s(degree_, c.strong[level]);
  s.base_hint_.assign(c.base.begin() + level, c.base.end());
  return s;
}

PermGroup PermGroup::point_stabilizer(Point p) const {
  return with_base_prefix(*this, {p}).stabilizer_subgroup(1);
}

void PermGroup::for_each_element_from(std::size_t level,
                                      const std::function<bool(const Permutation&)>& f) const {
  const auto& c = chain();
  const std::size_t k = c.base.size();
  if (level >= k) {
    f(Permutation::identity(degree_));
    return;
  }
  bool stop = false;
  // g = u_{k-1} * ... * u_{level}
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t l, const Permutation& acc) {
    for (std::size_t q = 0; q < c.orbit[l].size() && !stop; ++q) {
      Permutation next = acc * c.trans[l][q];
      if (l == level) {
        if (!f(next)) stop = true;
      } else {
        rec(l - 1, next);
      }
    }
  };
  rec(k - 1, Permutation::identity(degree_));
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& f) const {
  for_each_element_from(0, f);
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

PermGroup with_base_prefix(const PermGroup& g, std::vector<Point> prefix) {
  PermGroup r(g.degree(), g.generators());
  r.base_hint_ = std::move(prefix);
  return r;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<Point> orbit(const PermGroup& g, Point p) { return g.orbit(p); }

std::uint64_t group_order(const PermGroup& g) { return g.order(); }

PermGroup restrict_to(const PermGroup& g, const std::vector<Point>& omega) {
  std::vector<std::int64_t> pos(g.degree(), -1);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i] >= g.degree()) throw std::out_of_range("restrict_to: point out of range");
    pos[omega[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) {
      std::int64_t j = pos[s(omega[i])];
      if (j < 0) throw std::invalid_argument("restrict_to: point set is not invariant");
      img[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(omega.size(), std::move(gens));
}

bool is_regular(const PermGroup& g, const std::vector<Point>& omega) {
  if (omega.empty()) return false;
  PermGroup r = restrict_to(g, omega);
  if (r.orbit(0).size() != omega.size()) return false;
  return g.order() == omega.size() && r.order() == omega.size();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> m;
  g.for_each_element([&](const Permutation& x) {
    ++m[x.order()];
    return true;
  });
  return {m.begin(), m.end()};
}

namespace {

// Elements of a regular group indexed by the image of point 0.
std::vector<Permutation> regular_elements(const PermGroup& g) {
  std::vector<Permutation> at(g.degree());
  g.for_each_element([&](const Permutation& x) {
    at[x(0)] = x;
    return true;
  });
  return at;
}

bool is_regular_on_all(const PermGroup& g) {
  return g.degree() > 0 && g.order() == g.degree() && g.orbit(0).size() == g.degree();
}

}  // namespace

std::vector<std::uint32_t> orbitals(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<std::uint32_t> orb(n * n, UINT32_MAX);
  std::uint32_t next = 0;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (orb[start] != UINT32_MAX) continue;
    orb[start] = next;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t p = queue[qi] / n, q = queue[qi] % n;
      for (const auto& s : g.generators()) {
        const std::size_t t = s(static_cast<Point>(p)) * n + s(static_cast<Point>(q));
        if (orb[t] == UINT32_MAX) {
          orb[t] = next;
          queue.push_back(t);
        }
      }
    }
    ++next;
  }
  return orb;
}

// For regular H and K a conjugator may be taken to fix 0, and it is then the
// point map 0^h -> 0^phi(h) of an isomorphism phi: H -> K. Isomorphisms are
// built generator by generator; partial maps must be consistent on the
// subgroup generated so far and preserve the orbitals of g.
std::optional<Permutation> find_regular_conjugator(const PermGroup& g, const PermGroup& h,
                                                   const PermGroup& k,
                                                   const std::vector<std::uint32_t>& orb) {
  const std::size_t n = g.degree();
  const auto hel = regular_elements(h);
  const auto kel = regular_elements(k);
  std::vector<Point> hgen;  // generators as points 0^g
  for (const auto& x : h.generators())
    if (!x.is_identity()) hgen.push_back(x(0));
  std::vector<std::uint64_t> kord(n);
  for (std::size_t q = 0; q < n; ++q) kord[q] = kel[q].order();

  std::vector<std::int64_t> map(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Point> mapped;  // domain of map in assignment order
  std::vector<Point> img(hgen.size());
  std::optional<Permutation> found;

  auto assign = [&](Point p, Point q) -> bool {
    for (Point r : mapped)
      if (orb[r * n + p] != orb[map[r] * n + q] || orb[p * n + r] != orb[q * n + map[r]]) return false;
    map[p] = q;
    used[q] = 1;
    mapped.push_back(p);
    return true;
  };
  // Extends the map over <hgen[0..d]>; false on inconsistency.
  auto extend = [&](std::size_t d) -> bool {
    for (std::size_t qi = 0; qi < mapped.size(); ++qi) {
      const Point p = mapped[qi];
      for (std::size_t j = 0; j <= d; ++j) {
        const Point p2 = hel[hgen[j]](p);
        const Point q2 = kel[img[j]](static_cast<Point>(map[p]));
        if (map[p2] >= 0) {
          if (map[p2] != q2) return false;
          continue;
        }
        if (used[q2] || !assign(p2, q2)) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
    if (d == hgen.size()) {
      std::vector<Point> imgs(n);
      for (std::size_t p = 0; p < n; ++p) imgs[p] = static_cast<Point>(map[p]);
      Permutation x(std::move(imgs));
      if (!g.contains(x)) return false;
      found = std::move(x);
      return true;
    }
    const std::uint64_t o = hel[hgen[d]].order();
    const std::size_t mark = mapped.size();
    for (std::size_t q = 1; q < n; ++q) {
      if (kord[q] != o) continue;
      img[d] = static_cast<Point>(q);
      if (extend(d) && rec(d + 1)) return true;
      while (mapped.size() > mark) {
        used[map[mapped.back()]] = 0;
        map[mapped.back()] = -1;
        mapped.pop_back();
      }
    }
    return false;
  };
  assign(0, 0);
  rec(0);
  return found;
}

std::optional<Permutation> find_conjugator(const PermGroup& g, const PermGroup& h,
                                           const PermGroup& k) {
  if (!g.contains(h) || !g.contains(k))
    throw std::invalid_argument("find_conjugator: subgroup not contained in ambient group");
  if (h.order() != k.order()) return std::nullopt;
  if (h.order() <= 100000 && order_profile(h) != order_profile(k)) return std::nullopt;
  if (g.base().empty()) return Permutation::identity(g.degree());
  if (is_regular_on_all(h) && is_regular_on_all(k)) return find_regular_conjugator(g, h, k, orbitals(g));

  // x can be replaced by x*y for y in K, so the image of the first base point
  // may be taken minimal in its K-orbit.
  std::vector<Point> reps;
  for (Point r : g.basic_orbit(0)) {
    auto ko = k.orbit(r);
    if (ko.front() == r) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end());

  std::optional<Permutation> found;
  for (Point r : reps) {
    const Permutation& u = g.transversal(0, r);
    g.for_each_element_from(1, [&](const Permutation& s) {
      Permutation x = s * u;
      Permutation xi = x.inverse();
      for (const auto& hg : h.generators())
        if (!k.contains(xi * hg * x)) return true;
      found = x;
      return false;
    });
    if (found) break;
  }
  return found;
}

}  // namespace c2lat
