#pragma once

#include <functional>
#include <string>
#include <vector>

#include "c2lat/check.hpp"
#include "c2lat/group_table.hpp"
#include "c2lat/perm.hpp"
#include "c2lat/presentation.hpp"

namespace c2lat {

enum class Target { Q, K44, K66 };
std::string target_name(Target t);

// L_i realized by its right-regular representation.
struct LibraryGroup {
  int id = 0;
  FinPresentation presentation;
  PermGroup group;
  EdgeSubgroups edges;
};

// Cached, thread-safe; i in 1..35.
const LibraryGroup& library_group(int i);
// Element table of library_group(i).group; generators in presentation order.
const GroupTable& library_table(int i);
Target library_target(int i);
std::uint64_t library_expected_order(int i);

// A finite group given by a multiplication rule on {0, ..., n-1}; used for
// building comparison models.
PermGroup regular_group(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul);

// The model for a structure description, e.g. "C4xC4", "C2xD8", "S3xS3".
PermGroup structure_model(const std::string& description);

struct LibraryReport {
  std::vector<Check> checks;
  // Isomorphism classes among L_1..L_35, each sorted, ordered by least id.
  std::vector<std::vector<int>> iso_classes;
  bool all_ok() const { return c2lat::all_ok(checks); }
};

LibraryReport verify_library();

}  // namespace c2lat
