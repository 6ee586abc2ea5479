#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace c2lat {

namespace detail {
struct StabChain;
struct ChainCell;
}  // namespace detail

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}. Products compose left to right:
// (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Parses cycle notation such as "(0,1,2)(3,4)". Points are shifted down by
  // `base` so that 1-based input can be read with base = 1.
  static Permutation from_cycles(std::size_t degree, std::string_view text, Point base = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& q) const;
  Permutation pow(long long k) const;
  std::uint64_t order() const;
  // g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const;
  std::optional<Point> smallest_moved_point() const;

  std::string to_cycles(Point base = 0) const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// A permutation group given by generators, with a lazily computed
// stabilizer chain.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool contains(const PermGroup& h) const;
  std::vector<Point> orbit(Point p) const;

  const std::vector<Point>& base() const;
  // Strong generators fixing the first `level` base points.
  const std::vector<Permutation>& stabilizer_generators(std::size_t level) const;
  // Orbit of the base point at `level` under the level stabilizer.
  const std::vector<Point>& basic_orbit(std::size_t level) const;
  // u with base[level]^u = pt; pt must lie in the basic orbit.
  const Permutation& transversal(std::size_t level, Point pt) const;
  // Stabilizer of the first `level` base points as a group.
  PermGroup stabilizer_subgroup(std::size_t level) const;
  // Pointwise stabilizer of p (rebuilt on a base starting at p).
  PermGroup point_stabilizer(Point p) const;

  // Visits every element; stops early when f returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& f) const;
  // Same, restricted to the stabilizer of the first `level` base points.
  void for_each_element_from(std::size_t level,
                             const std::function<bool(const Permutation&)>& f) const;
  std::vector<Permutation> elements() const;

 private:
  const detail::StabChain& chain() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Point> base_hint_;
  std::shared_ptr<detail::ChainCell> cell_;

  friend PermGroup with_base_prefix(const PermGroup& g, std::vector<Point> prefix);
};

// Same group, stabilizer chain built on a base starting with `prefix`.
PermGroup with_base_prefix(const PermGroup& g, std::vector<Point> prefix);

std::vector<Point> orbit(const PermGroup& g, Point p);
std::uint64_t group_order(const PermGroup& g);

// True iff g maps `omega` into itself, acts transitively and |g| = |omega|.
// Throws std::invalid_argument if omega is not invariant.
bool is_regular(const PermGroup& g, const std::vector<Point>& omega);

// Restriction of g to an invariant point set, relabelled 0..|omega|-1 in the
// given order.
PermGroup restrict_to(const PermGroup& g, const std::vector<Point>& omega);

// Element x of g with x^-1 H x = K, or none. Throws if H or K is not a
// subgroup of g.
std::optional<Permutation> find_conjugator(const PermGroup& g, const PermGroup& h,
                                           const PermGroup& k);

// Orbits of g on ordered pairs of points: entry p*degree+q is the index of
// the orbit of (p, q).
std::vector<std::uint32_t> orbitals(const PermGroup& g);

// find_conjugator for subgroups H, K acting regularly on all points, given
// the orbital table of g.
std::optional<Permutation> find_regular_conjugator(const PermGroup& g, const PermGroup& h,
                                                   const PermGroup& k,
                                                   const std::vector<std::uint32_t>& orbital_table);

// Multiset of element orders, sorted by order: (order, count).
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile(const PermGroup& g);

}  // namespace c2lat
