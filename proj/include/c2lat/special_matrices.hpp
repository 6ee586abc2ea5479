#pragma once

#include <string>
#include <vector>

#include "c2lat/check.hpp"
#include "c2lat/geometry.hpp"
#include "c2lat/perm.hpp"

namespace c2lat {

struct SpecialMatrices {
  F2Matrix A, B, C, D;
};
const SpecialMatrices& special_matrices();

// Permutation of the subspaces induced by M: i -> j when M U_i = U_j
// (0-based). Throws if M does not permute {U_1, ..., U_6}.
Permutation psi(const F2Matrix& m);

// The affine map x -> M x + t on Q, as a permutation of the 160 incidence
// graph vertices or of the 384 flags.
Permutation affine_on_vertices(const F2Matrix& m, F2Vec t);
Permutation affine_on_flags(const F2Matrix& m, F2Vec t);

// V x| <linear> generated by the six unit translations and the matrices.
PermGroup affine_group(const std::vector<F2Matrix>& linear, bool on_flags);
// <linear> acting on the 64 vectors.
PermGroup linear_group(const std::vector<F2Matrix>& linear);

struct SpecialMatricesReport {
  std::vector<Check> checks;
  bool all_ok() const;
};

SpecialMatricesReport verify_special_matrices();

}  // namespace c2lat
