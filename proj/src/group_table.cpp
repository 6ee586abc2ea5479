#include "c2lat/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace c2lat {

namespace {
constexpr std::size_t kTableLimit = 4096;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}  // namespace

GroupTable::GroupTable(const PermGroup& g, std::size_t limit) : degree_(g.degree()) {
  const auto& gens = g.generators();
  elems_.push_back(Permutation::identity(degree_));
  index_.emplace(elems_[0], 0);
  parent_.push_back(0);
  parent_gen_.push_back(0);
  for (std::size_t q = 0; q < elems_.size(); ++q) {
    right_.emplace_back(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = elems_[q] * gens[k];
      auto it = index_.find(y);
      std::size_t j;
      if (it == index_.end()) {
        if (elems_.size() >= limit) throw std::length_error("GroupTable: group exceeds size limit");
        j = elems_.size();
        index_.emplace(y, j);
        elems_.push_back(std::move(y));
        parent_.push_back(q);
        parent_gen_.push_back(k);
      } else {
        j = it->second;
      }
      right_[q][k] = j;
    }
  }
  for (const auto& s : gens) gen_index_.push_back(index_.at(s));

  const std::size_t n = elems_.size();
  if (n <= kTableLimit) {
    table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t* row = &table_[i * n];
      row[0] = static_cast<std::uint32_t>(i);
      for (std::size_t j = 1; j < n; ++j)
        row[j] = static_cast<std::uint32_t>(right_[row[parent_[j]]][parent_gen_[j]]);
    }
  }
  inv_.assign(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    if (inv_[i] != kNone) continue;
    std::size_t j = index_.at(elems_[i].inverse());
    inv_[i] = j;
    inv_[j] = i;
  }
  ord_.resize(n);
  for (std::size_t i = 0; i < n; ++i) ord_[i] = elems_[i].order();
}

std::optional<std::size_t> GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::mul(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * elems_.size() + j];
  return index_.at(elems_[i] * elems_[j]);
}

std::size_t GroupTable::pow(std::size_t i, long long k) const {
  std::size_t base = k < 0 ? inv(i) : i;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  e %= ord_[i];
  std::size_t acc = 0;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<std::size_t> GroupTable::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<std::size_t> GroupTable::closure(const std::vector<std::size_t>& gens) const {
  std::vector<char> in(size(), 0);
  std::vector<std::size_t> out{0};
  in[0] = 1;
  for (std::size_t q = 0; q < out.size(); ++q)
    for (std::size_t s : gens) {
      std::size_t y = mul(out[q], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup GroupTable::subgroup(const std::vector<std::size_t>& gens) const {
  std::vector<Permutation> ps;
  for (std::size_t s : gens) ps.push_back(elems_[s]);
  return PermGroup(degree_, std::move(ps));
}

const std::vector<std::size_t>& GroupTable::class_of() const {
  if (!class_of_.empty()) return class_of_;
  const std::size_t n = size();
  std::vector<std::size_t> cls(n, kNone);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != kNone) continue;
    // Conjugation orbit closed under the generators.
    std::vector<std::size_t> orb{x};
    cls[x] = next;
    for (std::size_t q = 0; q < orb.size(); ++q)
      for (std::size_t k = 0; k < num_generators(); ++k) {
        std::size_t y = conj(orb[q], gen_index_[k]);
        if (cls[y] == kNone) {
          cls[y] = next;
          orb.push_back(y);
        }
      }
    ++next;
  }
  class_of_ = std::move(cls);
  return class_of_;
}

std::vector<std::size_t> GroupTable::class_representatives() const {
  const auto& cls = class_of();
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < size(); ++x)
    if (cls[x] == reps.size()) reps.push_back(x);
  return reps;
}

std::size_t GroupTable::center_order() const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    bool central = true;
    for (std::size_t k = 0; k < num_generators() && central; ++k)
      central = mul(x, gen_index_[k]) == mul(gen_index_[k], x);
    c += central;
  }
  return c;
}

std::size_t GroupTable::derived_order() const {
  // The normal closure of generator commutators is the derived subgroup.
  std::vector<std::size_t> comm;
  for (std::size_t a = 0; a < num_generators(); ++a)
    for (std::size_t b = a + 1; b < num_generators(); ++b) {
      std::size_t x = gen_index_[a], y = gen_index_[b];
      comm.push_back(mul(mul(inv(x), inv(y)), mul(x, y)));
    }
  std::vector<std::size_t> sub = closure(comm);
  for (;;) {
    std::vector<std::size_t> gens = sub;
    bool grew = false;
    for (std::size_t s : sub)
      for (std::size_t k = 0; k < num_generators(); ++k) {
        std::size_t c = conj(s, gen_index_[k]);
        if (!std::binary_search(sub.begin(), sub.end(), c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    if (!grew) return sub.size();
    sub = closure(gens);
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> GroupTable::order_profile() const {
  std::map<std::uint64_t, std::uint64_t> m;
  for (auto o : ord_) ++m[o];
  return {m.begin(), m.end()};
}

std::optional<std::vector<std::size_t>> extend_homomorphism(const GroupTable& src,
                                                            const GroupTable& dst,
                                                            const std::vector<std::size_t>& images,
                                                            bool bijective) {
  if (images.size() != src.num_generators())
    throw std::invalid_argument("extend_homomorphism: wrong number of images");
  if (bijective && src.size() != dst.size()) return std::nullopt;
  const std::size_t n = src.size();
  std::vector<std::size_t> phi(n);
  phi[0] = 0;
  for (std::size_t j = 1; j < n; ++j) phi[j] = dst.mul(phi[src.parent(j)], images[src.parent_gen(j)]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < images.size(); ++k)
      if (phi[src.right_gen(i, k)] != dst.mul(phi[i], images[k])) return std::nullopt;
  if (bijective) {
    std::vector<char> hit(dst.size(), 0);
    for (std::size_t y : phi) {
      if (hit[y]) return std::nullopt;
      hit[y] = 1;
    }
  }
  return phi;
}

GroupInvariants invariants(const GroupTable& t) {
  GroupInvariants inv;
  inv.order = t.size();
  inv.profile = t.order_profile();
  inv.center = t.center_order();
  inv.derived = t.derived_order();
  inv.classes = t.class_representatives().size();
  return inv;
}

}  // namespace c2lat
