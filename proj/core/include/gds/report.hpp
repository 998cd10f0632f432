#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gds {

/// Outcome of one family of exact checks. An empty failure list means pass.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool condition, const std::string& what) {
    ++checked;
    if (!condition) failures.push_back(what);
  }
};

}  // namespace gds
