#include "c2lat/group_iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace c2lat {

namespace {

constexpr std::size_t kSearchBound = 10000;

std::size_t eval_word(const GroupTable& t, const std::vector<std::size_t>& img, const Word& w) {
  std::size_t x = 0;
  for (Letter l : w) {
    std::size_t g = img[std::abs(l) - 1];
    x = t.mul(x, l > 0 ? g : t.inv(g));
  }
  return x;
}

}  // namespace

std::optional<GroupIso> isomorphic_groups(const FinPresentation& p, const PermGroup& g) {
  if (g.order() > kSearchBound) throw std::length_error("isomorphic_groups: group exceeds search bound");
  const GroupTable dst(g, kSearchBound + 1);
  const PermGroup src_perm = regular_representation(p);
  if (src_perm.degree() != dst.size()) return std::nullopt;
  const GroupTable src(src_perm, kSearchBound + 1);
  if (!(invariants(src) == invariants(dst))) return std::nullopt;

  const std::size_t k = p.rank();
  std::vector<std::uint64_t> gen_order(k);
  for (std::size_t i = 0; i < k; ++i) gen_order[i] = src.order_of(src.generator(i));
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gen_order[a] > gen_order[b]; });

  // Relators become checkable once their last generator (in search order)
  // is assigned.
  std::vector<std::size_t> pos(k);
  for (std::size_t d = 0; d < k; ++d) pos[order[d]] = d;
  std::vector<std::vector<const Word*>> checks(k);
  for (const auto& r : p.relators) {
    std::size_t last = 0;
    for (Letter l : r) last = std::max(last, pos[std::abs(l) - 1]);
    if (!r.empty()) checks[last].push_back(&r);
  }

  std::vector<std::vector<std::size_t>> cand(k);
  const auto reps = dst.class_representatives();
  for (std::size_t d = 0; d < k; ++d) {
    const std::size_t gi = order[d];
    if (d == 0) {
      for (std::size_t x : reps)
        if (dst.order_of(x) == gen_order[gi]) cand[d].push_back(x);
    } else {
      for (std::size_t x = 0; x < dst.size(); ++x)
        if (dst.order_of(x) == gen_order[gi]) cand[d].push_back(x);
    }
  }

  std::vector<std::size_t> img(k, 0);
  std::optional<GroupIso> result;
  std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
    if (d == k) {
      if (dst.closure(img).size() != dst.size()) return false;
      GroupIso iso;
      for (std::size_t i = 0; i < k; ++i) iso.images.push_back(dst.element(img[i]));
      result = std::move(iso);
      return true;
    }
    for (std::size_t x : cand[d]) {
      img[order[d]] = x;
      bool ok = true;
      for (const Word* r : checks[d])
        if (eval_word(dst, img, *r) != 0) {
          ok = false;
          break;
        }
      if (ok && rec(d + 1)) return true;
    }
    return false;
  };
  rec(0);
  return result;
}

void for_each_homomorphism(const HomSearch& s,
                           const std::function<bool(const std::vector<std::size_t>&,
                                                    const std::vector<std::size_t>&)>& accept) {
  const std::size_t k = s.src->num_generators();
  if (s.candidates.size() != k) throw std::invalid_argument("for_each_homomorphism: candidate list size");
  std::vector<std::vector<std::size_t>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t o = s.src->order_of(s.src->generator(i));
    for (std::size_t x : s.candidates[i]) {
      const std::uint64_t ox = s.dst->order_of(x);
      if (s.bijective ? ox == o : o % ox == 0) cand[i].push_back(x);
    }
  }
  std::vector<std::size_t> img(k);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (stop) return;
    if (d == k) {
      auto m = extend_homomorphism(*s.src, *s.dst, img, s.bijective);
      if (m && !accept(img, *m)) stop = true;
      return;
    }
    for (std::size_t x : cand[d]) {
      img[d] = x;
      rec(d + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace c2lat
