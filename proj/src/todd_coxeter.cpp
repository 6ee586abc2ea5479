#include <algorithm>
#include <numeric>

#include "c2lat/presentation.hpp"

namespace c2lat {

namespace {

constexpr std::int32_t kUndef = -1;

// HLT coset enumeration following the standard scan-and-fill formulation,
// with a union-find coincidence queue. Rows are never reused until a
// compaction pass.
class Enumerator {
 public:
  Enumerator(const FinPresentation& p, std::size_t max_cosets)
      : ncols_(2 * p.rank()), max_(max_cosets) {
    for (const auto& r : p.relators) rels_.push_back(columns(r));
    // Room needed to process one coset without running out mid-scan.
    budget_ = ncols_;
    for (const auto& r : rels_) budget_ += r.size();
    new_row();
  }

  void run(const std::vector<Word>& subgroup) {
    for (const auto& w : subgroup) {
      ensure_room(columns(w).size());
      scan_and_fill(0, columns(w));
    }
    for (std::size_t c = 0; c < rows(); ++c) {
      if (rows() + budget_ > max_) {
        c = lookahead_and_compact(c);
        if (c >= rows()) break;
        // A complete table needs no further definitions, only scans.
        if (rows() + budget_ > max_ && !table_complete()) throw CosetLimitExceeded(max_);
      }
      if (!alive(c)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(c, r);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x)
        if (at(c, x) == kUndef) define(c, x);
    }
    compact();
  }

  CosetTable result(std::size_t ngens) const {
    CosetTable t;
    t.num_gens = ngens;
    t.num_cosets = rows();
    t.table = table_;
    t.complete = std::none_of(table_.begin(), table_.end(), [](std::int32_t v) { return v == kUndef; });
    t.defined = defined_;
    return t;
  }

 private:
  std::vector<std::size_t> columns(const Word& w) const {
    std::vector<std::size_t> cols;
    for (Letter x : w) cols.push_back(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
    return cols;
  }
  static std::size_t inv(std::size_t col) { return col ^ 1u; }

  std::size_t rows() const { return parent_.size(); }
  std::int32_t& at(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  std::int32_t at(std::size_t c, std::size_t x) const { return table_[c * ncols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::size_t new_row() {
    if (rows() >= max_) throw CosetLimitExceeded(max_);
    std::size_t d = rows();
    parent_.push_back(static_cast<std::int32_t>(d));
    table_.resize(table_.size() + ncols_, kUndef);
    ++defined_;
    return d;
  }

  void define(std::size_t c, std::size_t x) {
    std::size_t d = new_row();
    at(c, x) = static_cast<std::int32_t>(d);
    at(d, inv(x)) = static_cast<std::int32_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != static_cast<std::int32_t>(r)) r = parent_[r];
    while (parent_[c] != static_cast<std::int32_t>(r)) {
      std::size_t next = parent_[c];
      parent_[c] = static_cast<std::int32_t>(r);
      c = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    std::size_t lo = std::min(k, l), hi = std::max(k, l);
    parent_[hi] = static_cast<std::int32_t>(lo);
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t e = queue[qi];
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::int32_t fv = at(e, x);
        if (fv == kUndef) continue;
        std::size_t f = static_cast<std::size_t>(fv);
        at(f, inv(x)) = kUndef;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kUndef) {
          merge(f1, static_cast<std::size_t>(at(e1, x)), queue);
        } else if (at(f1, inv(x)) != kUndef) {
          merge(e1, static_cast<std::size_t>(at(f1, inv(x))), queue);
        } else {
          at(e1, x) = static_cast<std::int32_t>(f1);
          at(f1, inv(x)) = static_cast<std::int32_t>(e1);
        }
      }
    }
  }

  // Scans w at coset c. With `fill`, undefined gaps are closed by new
  // definitions; otherwise only deductions and coincidences are applied.
  void scan(std::size_t c, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    long long i = 0, j = static_cast<long long>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(w[j])) != kUndef) b = at(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = static_cast<std::int32_t>(b);
        at(b, inv(w[i])) = static_cast<std::int32_t>(f);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }
  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) { scan(c, w, true); }

  void ensure_room(std::size_t need) {
    if (rows() + need > max_) {
      lookahead_and_compact(0);
      if (rows() + need > max_) throw CosetLimitExceeded(max_);
    }
  }

  // Lookahead: scan every relator at every live coset without defining,
  // then compact. Returns the new position of coset `c` (or the next live
  // coset after it).
  std::size_t lookahead_and_compact(std::size_t c) {
    for (std::size_t e = 0; e < rows(); ++e) {
      if (!alive(e)) continue;
      for (const auto& r : rels_) {
        scan(e, r, false);
        if (!alive(e)) break;
      }
    }
    return compact(c);
  }

  bool table_complete() const {
    return std::none_of(table_.begin(), table_.end(), [](std::int32_t v) { return v == kUndef; });
  }

  std::size_t compact(std::size_t c = 0) {
    std::vector<std::int32_t> newidx(rows(), kUndef);
    std::size_t n = 0;
    std::size_t newc = static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e < rows(); ++e) {
      if (e >= c && newc == static_cast<std::size_t>(-1) && alive(e)) newc = n;
      if (alive(e)) newidx[e] = static_cast<std::int32_t>(n++);
    }
    std::vector<std::int32_t> t(n * ncols_, kUndef);
    for (std::size_t e = 0; e < rows(); ++e) {
      if (!alive(e)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::int32_t v = at(e, x);
        t[newidx[e] * ncols_ + x] = v == kUndef ? kUndef : newidx[rep(static_cast<std::size_t>(v))];
      }
    }
    table_ = std::move(t);
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    return newc == static_cast<std::size_t>(-1) ? n : newc;
  }

  std::size_t ncols_;
  std::size_t max_;
  std::size_t budget_ = 0;
  std::size_t defined_ = 0;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
};

}  // namespace

std::size_t CosetTable::trace(std::size_t coset, const Word& w) const {
  for (Letter x : w) {
    std::int32_t n = act(coset, x);
    if (n < 0) throw std::logic_error("trace through undefined entry");
    coset = static_cast<std::size_t>(n);
  }
  return coset;
}

bool CosetTable::verify(const FinPresentation& p) const {
  if (num_cosets == 0) return false;
  const std::size_t ncols = 2 * num_gens;
  for (std::int32_t v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= num_cosets) return false;
  for (std::size_t c = 0; c < num_cosets; ++c)
    for (std::size_t x = 0; x < ncols; ++x)
      if (table[table[c * ncols + x] * ncols + (x ^ 1u)] != static_cast<std::int32_t>(c)) return false;
  for (std::size_t c = 0; c < num_cosets; ++c)
    for (const auto& r : p.relators)
      if (trace(c, r) != c) return false;
  return true;
}

CosetTable todd_coxeter(const FinPresentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be positive");
  p.validate(false);
  for (const auto& w : subgroup)
    for (Letter x : w)
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > p.rank())
        throw std::invalid_argument("todd_coxeter: subgroup word uses undeclared generator");
  Enumerator en(p, max_cosets);
  en.run(subgroup);
  CosetTable t = en.result(p.rank());
  if (!t.complete) throw std::logic_error("todd_coxeter: incomplete table after enumeration");
  return t;
}

PermGroup regular_representation(const FinPresentation& p, std::size_t max_cosets) {
  CosetTable t = todd_coxeter(p, {}, max_cosets);
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    std::vector<Point> img(t.num_cosets);
    for (std::size_t c = 0; c < t.num_cosets; ++c) img[c] = static_cast<Point>(t.act(c, static_cast<Letter>(k + 1)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(t.num_cosets, std::move(gens));
}

}  // namespace c2lat
