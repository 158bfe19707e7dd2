#include "tqsim/knot_table.hpp"

namespace tqsim {

const std::vector<KnotEntry>& builtin_knots() {
  static const std::vector<KnotEntry> table = {
      {"unknot", 1, {}, 2, {}},
      {"hopf+", 2, {-1, -1}, 4, {2, 2}},
      {"hopf-", 2, {1, 1}, 4, {-2, -2}},
      {"trefoilL", 2, {1, 1, 1}, 4, {-2, 1, -2}},
      {"trefoilR", 2, {-1, -1, -1}, 4, {2, -1, 2}},
      {"fig8", 3, {-2, 1, -2, 1}, 4, {-2, -2, 1, -2}},
  };
  return table;
}

std::optional<ClosedKnot> builtin_knot(const std::string& name, Closure closure) {
  for (const KnotEntry& e : builtin_knots()) {
    if (e.name != name) continue;
    if (closure == Closure::trace)
      return ClosedKnot(BraidWord(e.trace_strands, e.trace_word), Closure::trace);
    return ClosedKnot(BraidWord(e.plat_strands, e.plat_word), Closure::plat);
  }
  return std::nullopt;
}

}  // namespace tqsim
