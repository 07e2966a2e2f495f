#pragma once

#include <string>
#include <vector>

namespace statmon {

struct SelftestCheck {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Invariant suite over every module; takes a few seconds.
std::vector<SelftestCheck> run_selftest();

}  // namespace statmon
