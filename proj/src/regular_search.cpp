#include "c2lat/regular_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>


namespace c2lat {

namespace {

using Digest = std::pair<std::uint64_t, std::uint64_t>;

// A closed semiregular subgroup; elements are indexed by the image of 0.
struct Sub {
  std::vector<Permutation> elems;
  std::vector<std::int32_t> at0;
  std::vector<Permutation> gens;

  bool add(Permutation z) {
    Point p = z(0);
    if (at0[p] >= 0) return false;
    at0[p] = static_cast<std::int32_t>(elems.size());
    elems.push_back(std::move(z));
    return true;
  }
  const Permutation* find(const Permutation& y) const {
    std::int32_t k = at0[y(0)];
    return k < 0 ? nullptr : &elems[k];
  }
};

bool fixed_point_free(const Permutation& z) {
  for (std::size_t i = 0; i < z.degree(); ++i)
    if (z(static_cast<Point>(i)) == i) return false;
  return true;
}

// All cycles of equal length dividing n: the cyclic group is semiregular.
bool semiregular_element(const Permutation& z, std::size_t n) {
  std::vector<char> seen(z.degree(), 0);
  std::size_t len0 = 0;
  for (std::size_t i = 0; i < z.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = z(x)) {
      seen[x] = 1;
      ++len;
    }
    if (len0 == 0) len0 = len;
    if (len != len0) return false;
  }
  return len0 > 1 && n % len0 == 0;
}

Digest digest(const Sub& s) {
  std::uint64_t h1 = 1469598103934665603ull, h2 = 0x9e3779b97f4a7c15ull;
  for (std::int32_t k : s.at0) {
    if (k < 0) {
      h1 = (h1 ^ 0xffffffffull) * 1099511628211ull;
      h2 = (h2 + 0xff51afd7ed558ccdull) * 0xc4ceb9fe1a85ec53ull;
      continue;
    }
    for (Point x : s.elems[k].images()) {
      h1 = (h1 ^ x) * 1099511628211ull;
      h2 = (h2 ^ (x + 0x9e3779b9u + (h2 << 6) + (h2 >> 2))) * 0xff51afd7ed558ccdull;
    }
  }
  return {h1, h2};
}

// <S, c> by Dimino's coset method. None when the result is not semiregular
// or exceeds n elements.
std::optional<Sub> closure_with(const Sub& s, const Permutation& c, std::size_t n) {
  Sub t = s;
  t.gens.push_back(c);
  std::vector<Permutation> reps;
  auto add_coset = [&](const Permutation& y) -> bool {
    if (t.elems.size() + s.elems.size() > n) return false;
    for (const auto& h : s.elems) {
      Permutation z = h * y;
      if (!fixed_point_free(z) || !t.add(std::move(z))) return false;
    }
    reps.push_back(y);
    return true;
  };
  if (!add_coset(c)) return std::nullopt;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t gi = 0; gi < t.gens.size(); ++gi) {
      Permutation y = reps[i] * t.gens[gi];
      if (const Permutation* e = t.find(y)) {
        if (*e != y) return std::nullopt;
        continue;
      }
      if (!add_coset(y)) return std::nullopt;
    }
  }
  return t;
}

class Searcher {
 public:
  Searcher(const PermGroup& r, std::size_t n) : n_(n), r_(with_base_prefix(r, {0})) {
    r_.for_each_element_from(1, [&](const Permutation& x) {
      a0_.push_back(x);
      return true;
    });
    for (std::size_t i = 0; i < a0_.size(); ++i) a0_index_.emplace(a0_[i], i);
    if (r_.basic_orbit(0).size() != n_) throw std::invalid_argument("enumerate_regular_subgroups: not transitive");
    tf_.resize(n_);
    cands_.resize(n_);
    for (Point f = 0; f < n_; ++f) {
      tf_[f] = r_.transversal(0, f);
      if (f == 0) continue;
      for (std::size_t s = 0; s < a0_.size(); ++s)
        if (semiregular_element(a0_[s] * tf_[f], n_)) cands_[f].push_back(static_cast<std::uint32_t>(s));
    }
  }

  Permutation candidate(Point f, std::uint32_t s) const { return a0_[s] * tf_[f]; }
  const std::vector<std::uint32_t>& candidates(Point f) const { return cands_[f]; }
  const std::vector<Permutation>& stabilizer_elements() const { return a0_; }
  std::optional<std::uint32_t> candidate_index(Point f, const Permutation& c) const {
    auto it = a0_index_.find(c * tf_[f].inverse());
    if (it == a0_index_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it->second);
  }
  const PermGroup& ambient() const { return r_; }

  static Point least_uncovered(const Sub& s) {
    for (std::size_t p = 0; p < s.at0.size(); ++p)
      if (s.at0[p] < 0) return static_cast<Point>(p);
    return static_cast<Point>(s.at0.size());
  }

  void dfs(const Sub& s, std::set<Digest>& visited, std::vector<Sub>& found, std::size_t& nodes) const {
    ++nodes;
    if (s.elems.size() == n_) {
      found.push_back(s);
      return;
    }
    Point f = least_uncovered(s);
    for (std::uint32_t ci : cands_[f]) {
      auto t = closure_with(s, candidate(f, ci), n_);
      if (!t) continue;
      if (!visited.insert(digest(*t)).second) continue;
      dfs(*t, visited, found, nodes);
    }
  }

 private:
  std::size_t n_;
  PermGroup r_;
  std::vector<Permutation> a0_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> a0_index_;
  std::vector<Permutation> tf_;
  std::vector<std::vector<std::uint32_t>> cands_;
};

Sub initial_subgroup(const std::optional<PermGroup>& containing, const std::vector<Point>& omega,
                     std::size_t n) {
  Sub s;
  s.at0.assign(n, -1);
  s.add(Permutation::identity(n));
  if (!containing) return s;
  PermGroup c = restrict_to(*containing, omega);
  for (const auto& g : c.generators()) {
    if (s.find(g) && *s.find(g) == g) continue;
    auto t = closure_with(s, g, n);
    if (!t) throw std::invalid_argument("enumerate_regular_subgroups: initial subgroup is not semiregular");
    s = std::move(*t);
  }
  return s;
}

PermGroup to_group(const Sub& s, std::size_t n) { return PermGroup(n, s.gens); }

}  // namespace

RegularSearchResult enumerate_regular_subgroups(const PermGroup& a, const std::vector<Point>& omega,
                                                const RegularSearchOptions& opts) {
  const std::size_t n = omega.size();
  if (n == 0) throw std::invalid_argument("enumerate_regular_subgroups: empty point set");
  RegularSearchResult result;
  const PermGroup r = restrict_to(a, omega);
  const Searcher search(r, n);
  result.ambient = search.ambient();

  const Sub s0 = initial_subgroup(opts.containing, omega, n);
  std::vector<std::vector<Sub>> per_branch;
  std::vector<Permutation> branch_elems;
  std::size_t nodes = 0;

  if (s0.elems.size() == n) {
    per_branch.push_back({s0});
  } else {
    // First-level candidates modulo conjugation by the elements fixing 0 and
    // f1 that normalize the initial subgroup.
    const Point f1 = Searcher::least_uncovered(s0);
    std::vector<Permutation> conj_gens;
    if (s0.elems.size() == 1) {
      conj_gens = with_base_prefix(search.ambient(), {0, f1}).stabilizer_subgroup(2).generators();
    } else {
      for (const auto& x : search.stabilizer_elements()) {
        if (x(f1) != f1) continue;
        Permutation xi = x.inverse();
        bool normalizes = std::all_of(s0.gens.begin(), s0.gens.end(), [&](const Permutation& g) {
          Permutation y = xi * g * x;
          const Permutation* e = s0.find(y);
          return e && *e == y;
        });
        if (normalizes) conj_gens.push_back(x);
      }
    }
    const auto& c1 = search.candidates(f1);
    std::unordered_map<std::uint32_t, char> done;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t ci : c1) {
      if (done.count(ci)) continue;
      reps.push_back(ci);
      std::vector<std::uint32_t> queue{ci};
      done[ci] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Permutation c = search.candidate(f1, queue[q]);
        for (const auto& x : conj_gens) {
          auto idx = search.candidate_index(f1, c.conjugate_by(x));
          if (!idx) throw std::logic_error("regular search: conjugate candidate missing");
          if (!done.count(*idx)) {
            done[*idx] = 1;
            queue.push_back(*idx);
          }
        }
      }
    }

    per_branch.resize(reps.size());
    std::vector<std::size_t> branch_nodes(reps.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    RegularSearchProgress prog;
    prog.branches_total = reps.size();
    auto worker = [&] {
      for (;;) {
        std::size_t b = next.fetch_add(1);
        if (b >= reps.size()) return;
        std::set<Digest> visited;
        auto t = closure_with(s0, search.candidate(f1, reps[b]), n);
        if (t) {
          visited.insert(digest(*t));
          search.dfs(*t, visited, per_branch[b], branch_nodes[b]);
        }
        std::lock_guard lock(mu);
        ++prog.branches_done;
        prog.nodes += branch_nodes[b];
        prog.found += per_branch[b].size();
        if (opts.progress) opts.progress(prog);
      }
    };
    const std::size_t nw = std::max<std::size_t>(1, std::min(opts.workers, reps.size()));
    if (nw == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < nw; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    nodes = std::accumulate(branch_nodes.begin(), branch_nodes.end(), std::size_t{0});
  }

  // Merge in branch order, dropping repeats, then reduce up to conjugacy.
  std::set<Digest> seen;
  std::vector<const Sub*> distinct;
  for (const auto& br : per_branch)
    for (const auto& s : br)
      if (seen.insert(digest(s)).second) distinct.push_back(&s);
  result.subgroups_found = distinct.size();
  result.nodes = nodes;

  // Conjugation by an element fixing 0 preserves the orbital of (0, 0^h)
  // and the order of h, so their multiset separates most classes cheaply.
  const auto orb = orbitals(result.ambient);
  using Signature = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
  auto signature = [&](const Sub& s) {
    Signature sig;
    for (const auto& e : s.elems) sig.emplace_back(e.order(), orb[e(0)]);
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  std::vector<Signature> class_sig;
  for (const Sub* s : distinct) {
    PermGroup h = to_group(*s, n);
    Signature sig = signature(*s);
    bool known = false;
    for (std::size_t k = 0; k < result.classes.size() && !known; ++k)
      known = class_sig[k] == sig && find_regular_conjugator(result.ambient, h, result.classes[k], orb).has_value();
    if (!known) {
      result.classes.push_back(std::move(h));
      class_sig.push_back(std::move(sig));
    }
  }
  return result;
}

}  // namespace c2lat
