#include "c2lat/special_matrices.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "c2lat/group_iso.hpp"
#include "c2lat/presentation.hpp"

namespace c2lat {

const SpecialMatrices& special_matrices() {
  static const SpecialMatrices m{
      F2Matrix::from_rows({"001111", "000110", "111110", "010101", "001010", "000111"}),
      F2Matrix::from_rows({"101101", "110111", "111110", "010101", "111001", "100110"}),
      F2Matrix::from_rows({"110100", "101100", "111110", "101011", "011100", "100100"}),
      F2Matrix::from_rows({"010000", "110000", "000100", "001100", "000011", "000010"}),
  };
  return m;
}

namespace {

int image_subspace(const F2Matrix& m, int i) {
  const auto& q = quadrangle();
  std::array<F2Vec, 4> img{};
  for (int k = 0; k < 4; ++k) img[k] = m.apply(q.subspaces[i][k]);
  int j = q.subspace_index(img);
  if (j < 0) throw std::invalid_argument("psi: matrix does not permute the subspaces");
  return j;
}

std::uint32_t line_image(const F2Matrix& m, F2Vec t, std::uint32_t l) {
  const auto& q = quadrangle();
  auto [i, r] = q.lines[l];
  return q.line_of(image_subspace(m, i), static_cast<F2Vec>(m.apply(r) ^ t));
}

}  // namespace

Permutation psi(const F2Matrix& m) {
  std::vector<Point> img(6);
  for (int i = 0; i < 6; ++i) img[i] = static_cast<Point>(image_subspace(m, i));
  return Permutation(std::move(img));
}

Permutation affine_on_vertices(const F2Matrix& m, F2Vec t) {
  const auto& q = quadrangle();
  std::vector<Point> img(64 + q.lines.size());
  for (F2Vec v = 0; v < 64; ++v) img[v] = m.apply(v) ^ t;
  for (std::uint32_t l = 0; l < q.lines.size(); ++l) img[64 + l] = 64 + line_image(m, t, l);
  return Permutation(std::move(img));
}

Permutation affine_on_flags(const F2Matrix& m, F2Vec t) {
  const auto& geom = quadrangle().geometry;
  std::vector<Point> img(geom.flags.size());
  for (std::size_t f = 0; f < geom.flags.size(); ++f) {
    auto [p, l] = geom.flags[f];
    auto idx = geom.flag_index(m.apply(static_cast<F2Vec>(p)) ^ t, line_image(m, t, l));
    if (!idx) throw std::logic_error("affine_on_flags: flag not preserved");
    img[f] = static_cast<Point>(*idx);
  }
  return Permutation(std::move(img));
}

PermGroup affine_group(const std::vector<F2Matrix>& linear, bool on_flags) {
  auto act = [&](const F2Matrix& m, F2Vec t) { return on_flags ? affine_on_flags(m, t) : affine_on_vertices(m, t); };
  std::vector<Permutation> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(act(F2Matrix::identity(), basis(i)));
  for (const auto& m : linear) gens.push_back(act(m, 0));
  const std::size_t deg = gens.front().degree();
  return PermGroup(deg, std::move(gens));
}

PermGroup linear_group(const std::vector<F2Matrix>& linear) {
  std::vector<Permutation> gens;
  for (const auto& m : linear) {
    std::vector<Point> img(64);
    for (F2Vec v = 0; v < 64; ++v) img[v] = m.apply(v);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(64, std::move(gens));
}

bool SpecialMatricesReport::all_ok() const { return c2lat::all_ok(checks); }

SpecialMatricesReport verify_special_matrices() {
  const auto& sm = special_matrices();
  SpecialMatricesReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto regular_on_subspaces = [](const std::vector<F2Matrix>& ms) {
    std::vector<Permutation> gens;
    for (const auto& m : ms) gens.push_back(psi(m));
    PermGroup g(6, std::move(gens));
    return is_regular(g, {0, 1, 2, 3, 4, 5});
  };

  const bool inv = sm.A.invertible() && sm.B.invertible() && sm.C.invertible() && sm.D.invertible();
  add("matrices invertible", inv);
  if (!inv) return rep;

  add("order(A) = 6", sm.A.order() == 6, std::to_string(sm.A.order()));
  add("<A> regular on subspaces", regular_on_subspaces({sm.A}));
  add("order(B) = 2", sm.B.order() == 2, std::to_string(sm.B.order()));
  add("order(C) = 3", sm.C.order() == 3, std::to_string(sm.C.order()));
  {
    PermGroup bc = linear_group({sm.B, sm.C});
    bool nonabelian = !((sm.B * sm.C) == (sm.C * sm.B));
    add("<B,C> = Sym(3)", bc.order() == 6 && nonabelian, std::to_string(bc.order()));
  }
  add("<B,C> regular on subspaces", regular_on_subspaces({sm.B, sm.C}));

  const Permutation pa = psi(sm.A), pc = psi(sm.C), pd = psi(sm.D);
  add("Psi(A) = (1,5,2,3,4,6)", pa == Permutation::from_cycles(6, "(1,5,2,3,4,6)", 1), pa.to_cycles(1));
  add("Psi(C) = (1,3,5)(2,4,6)", pc == Permutation::from_cycles(6, "(1,3,5)(2,4,6)", 1), pc.to_cycles(1));

  const PermGroup ac = linear_group({sm.A, sm.C});
  const PermGroup image(6, {pa, pc});
  add("Psi surjective onto Sym(6)", image.order() == 720, std::to_string(image.order()));
  {
    const PermGroup dg = linear_group({sm.D});
    bool ok = sm.D.order() == 3 && pd.is_identity() && ac.contains(dg) && ac.order() == 3 * image.order();
    std::ostringstream os;
    os << "order(D) " << sm.D.order() << ", |<A,C>| " << ac.order();
    add("ker Psi = <D> of order 3", ok, os.str());
  }

  const PermGroup va = affine_group({sm.A}, true);
  const PermGroup vbc = affine_group({sm.B, sm.C}, true);
  std::vector<Point> all_flags(384);
  for (Point f = 0; f < 384; ++f) all_flags[f] = f;
  add("V x| <A> chamber-regular", is_regular(va, all_flags), std::to_string(va.order()));
  add("V x| <B,C> chamber-regular", is_regular(vbc, all_flags), std::to_string(vbc.order()));
  auto iso_to_library = [&](const char* name, int id, const PermGroup& g) {
    try {
      add(name, isomorphic_groups(library_presentation(id), g).has_value());
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  };
  iso_to_library("V x| <A> = L7", 7, va);
  iso_to_library("V x| <B,C> = L11", 11, vbc);
  return rep;
}

}  // namespace c2lat
