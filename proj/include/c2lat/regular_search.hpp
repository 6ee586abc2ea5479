#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "c2lat/perm.hpp"

namespace c2lat {

struct RegularSearchProgress {
  std::size_t branches_done = 0;
  std::size_t branches_total = 0;
  std::size_t nodes = 0;
  std::size_t found = 0;
};

struct RegularSearchOptions {
  std::size_t workers = 1;
  // Only subgroups containing this one are searched for. Must act
  // semiregularly on omega (given on the original points).
  std::optional<PermGroup> containing;
  // Called from worker threads after each first-level branch.
  std::function<void(const RegularSearchProgress&)> progress;
};

struct RegularSearchResult {
  // Conjugacy class representatives, acting on positions 0..|omega|-1 of
  // omega, in discovery order.
  std::vector<PermGroup> classes;
  // Number of distinct regular subgroups met during the search.
  std::size_t subgroups_found = 0;
  std::size_t nodes = 0;
  // The ambient group restricted to omega (same relabelling).
  PermGroup ambient;
};

// Subgroups of A acting regularly on omega, up to A-conjugacy. Backtracks
// over closed semiregular subgroups, always covering the least uncovered
// point of omega next.
RegularSearchResult enumerate_regular_subgroups(const PermGroup& a, const std::vector<Point>& omega,
                                                const RegularSearchOptions& opts = {});

}  // namespace c2lat
