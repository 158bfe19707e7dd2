#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqsim/braid_word.hpp"

namespace tqsim {

// Built-in knots with their braid presentations for both closures.
struct KnotEntry {
  std::string name;
  int trace_strands;
  std::vector<int> trace_word;
  int plat_strands;
  std::vector<int> plat_word;
};

const std::vector<KnotEntry>& builtin_knots();
std::optional<ClosedKnot> builtin_knot(const std::string& name, Closure closure);

}  // namespace tqsim
