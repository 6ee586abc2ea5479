// One PASS/FAIL/SKIP line per acceptance criterion. Exit status is 0 only
// when no criterion fails. Set C2LAT_LONG=1 to include the long run.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "c2lat/actions.hpp"
#include "c2lat/classifier.hpp"
#include "c2lat/geometry.hpp"
#include "c2lat/library.hpp"
#include "c2lat/pipeline.hpp"
#include "c2lat/special_matrices.hpp"
#include "c2lat/triangles.hpp"

using namespace c2lat;

namespace {

struct Result {
  enum { Pass, Fail, Skip } status = Fail;
  std::string detail;
};

Result from_checks(const std::vector<Check>& checks, std::string summary = {}) {
  Result r{Result::Pass, std::move(summary)};
  for (const auto& c : checks)
    if (!c.ok) {
      r.status = Result::Fail;
      r.detail += (r.detail.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
    }
  return r;
}

Result crit_quadrangle() {
  const auto q = build_Q();
  const auto pc = is_generalized_polygon(q, 4);
  const bool ok = q.num_points == 64 && q.num_lines == 96 && q.flags.size() == 384 && pc &&
                  *pc.order == std::pair<std::size_t, std::size_t>{3, 5};
  std::ostringstream os;
  os << q.num_points << " points, " << q.num_lines << " lines, " << q.flags.size() << " flags, order ";
  if (pc)
    os << "(" << pc.order->first << "," << pc.order->second << ")";
  else
    os << "none: " << pc.failure;
  return {ok ? Result::Pass : Result::Fail, os.str()};
}

Result crit_matrices() { return from_checks(verify_special_matrices().checks); }

Result crit_automorphisms() {
  auto rep = verify_quadrangle(true);
  return from_checks(rep.checks, "|Aut(Q)| = 138240 by both methods");
}

Result crit_library() {
  auto checks = verify_library().checks;
  for (auto& c : verify_library_actions(Target::Q)) checks.push_back(std::move(c));
  return from_checks(checks, std::to_string(checks.size()) + " checks");
}

Result crit_enumeration() {
  std::vector<Check> checks;
  std::ostringstream os;
  for (auto [t, lo, hi] : {std::tuple{Target::K44, 12, 21}, std::tuple{Target::K66, 22, 35}, std::tuple{Target::Q, 1, 11}}) {
    const auto c = classify_edge_regular(t);
    for (const auto& x : c.checks) checks.push_back(x);
    std::set<int> ids;
    for (const auto& cl : c.classes) ids.insert(cl.library_id);
    const std::size_t want = static_cast<std::size_t>(hi - lo + 1);
    const bool bij = c.classes.size() == want && ids.size() == want && *ids.begin() == lo && *ids.rbegin() == hi;
    checks.push_back({target_name(t) + " classes match L" + std::to_string(lo) + "..L" + std::to_string(hi), bij,
                      std::to_string(c.classes.size()) + " classes"});
    os << target_name(t) << ": " << c.classes.size() << " ";
  }
  return from_checks(checks, os.str());
}

Result crit_sigma_tables() {
  auto checks = verify_sigma_tables();
  const auto dec = decomposability_report();
  checks.push_back({"indecomposable set {24,28,31,33}", dec == std::vector<int>{24, 28, 31, 33}});
  return from_checks(checks, "35 tables");
}

Result crit_edge_swap() {
  auto c = verify_swap_list();
  return {c.ok ? Result::Pass : Result::Fail, c.detail};
}

const Classification& classification() {
  static const Classification c = classify_all();
  return c;
}

Result crit_counts() {
  const auto& c = classification();
  std::ostringstream os;
  os << "tp " << c.tp_total << ", iso " << c.iso_total << ", families " << c.families_446 << "/" << c.families_664;
  return from_checks(c.checks, os.str());
}

Result crit_building() {
  std::size_t n = 0, bad = 0;
  std::string first;
  for (const auto& cc : classification().families)
    for (const auto& g : cc.tp_reps) {
      ++n;
      try {
        auto v = check_building_criterion(make_triangle(cc.family, g));
        const bool ok = v.building && v.angle_sum == PiFraction(1, 1);
        if (!ok && first.empty()) first = cc.family.name() + ": " + v.failure;
        bad += !ok;
      } catch (const std::exception& e) {
        if (first.empty()) first = cc.family.name() + ": " + e.what();
        ++bad;
      }
    }
  std::string d = std::to_string(n) + " triangles checked";
  if (bad) d += ", " + std::to_string(bad) + " failed, first " + first;
  return {bad == 0 && n == 3144 ? Result::Pass : Result::Fail, d};
}

// Small self-contained property sweeps; the full suites live in the unit tests.
Result crit_properties() {
  std::vector<Check> checks;
  std::mt19937 rng(11);
  bool perm_ok = true;
  for (int k = 0; k < 50; ++k) {
    std::vector<Point> a(9), b(9), c(9);
    for (Point i = 0; i < 9; ++i) a[i] = b[i] = c[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    Permutation p(a), q(b), r(c);
    perm_ok = perm_ok && (p * q) * r == p * (q * r) && (p * p.inverse()).is_identity() &&
              (p * q)(0) == q(p(0));
  }
  checks.push_back({"permutation axioms", perm_ok});
  bool tables_ok = true;
  for (int i = 1; i <= 35; ++i) {
    const auto p = library_presentation(i);
    const auto t = todd_coxeter(p, {});
    tables_ok = tables_ok && t.complete && t.verify(p) && t.num_cosets == library_expected_order(i);
  }
  checks.push_back({"coset tables complete", tables_ok});
  bool orbits_ok = true;
  for (const auto& cc : classification().families) orbits_ok = orbits_ok && cc.orbit_sizes_ok;
  checks.push_back({"class sizes sum to |C|", orbits_ok});
  bool graphs_ok = true;
  for (int k = 0; k < 20; ++k) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    std::bernoulli_distribution coin(0.08);
    for (std::uint32_t i = 0; i < 60; ++i)
      for (std::uint32_t j = 0; j < 60; ++j)
        if (coin(rng)) e.push_back({i, 60 + j});
    const auto g = BipartiteGraph::from_edges(60, 60, e);
    // Naive oracle: all-pairs BFS.
    std::optional<std::size_t> diam = 0, gir;
    for (std::uint32_t s = 0; s < g.num_vertices(); ++s) {
      std::vector<int> d(g.num_vertices(), -1), par(g.num_vertices(), -1);
      std::queue<std::uint32_t> q;
      d[s] = 0;
      q.push(s);
      while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto y : g.adj[x]) {
          if (d[y] < 0) {
            d[y] = d[x] + 1;
            par[y] = static_cast<int>(x);
            q.push(y);
          } else if (par[x] != static_cast<int>(y)) {
            const std::size_t len = static_cast<std::size_t>(d[x] + d[y] + 1);
            if (!gir || len < *gir) gir = len;
          }
        }
      }
      for (int x : d) {
        if (x < 0) diam.reset();
        else if (diam) diam = std::max(*diam, static_cast<std::size_t>(x));
      }
    }
    graphs_ok = graphs_ok && girth(g) == gir && diameter(g) == diam;
  }
  checks.push_back({"girth and diameter vs BFS oracle", graphs_ok});
  return from_checks(checks, "4 sweeps");
}

Result crit_long_run() {
  const char* env = std::getenv("C2LAT_LONG");
  if (!env || std::string(env) != "1") return {Result::Skip, "set C2LAT_LONG=1 to run"};
  const auto c = count_point_line_regular();
  return {c.points == 58 && c.lines == 6 ? Result::Pass : Result::Fail,
          std::to_string(c.points) + " point-regular, " + std::to_string(c.lines) + " line-regular"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"quadrangle reconstruction", crit_quadrangle},
      {"matrix observations", crit_matrices},
      {"automorphism group of Q", crit_automorphisms},
      {"library verification", crit_library},
      {"edge-regular action enumeration", crit_enumeration},
      {"sigma tables", crit_sigma_tables},
      {"edge-swap list", crit_edge_swap},
      {"classification counts", crit_counts},
      {"building criterion on all representatives", crit_building},
      {"property sweeps", crit_properties},
      {"point- and line-regular counts", crit_long_run},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {Result::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = r.status == Result::Pass ? "PASS" : r.status == Result::Fail ? "FAIL" : "SKIP";
    failed += r.status == Result::Fail;
    std::printf("%s  %-44s %7.1fs  %s\n", tag, name, secs, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
