#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace c2lat {

// One named pass/fail item of a verification report.
struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

}  // namespace c2lat
