#include "tqsim/braid_word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace tqsim {

namespace {

void check_letters(int strands, const std::vector<int>& letters) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : letters) {
    if (g == 0 || std::abs(g) >= strands)
      throw std::invalid_argument("braid letter out of range for strand count");
  }
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
  check_letters(strands, letters);
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("cannot concatenate braids with different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  for (int g : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -g)
      out.letters.pop_back();
    else
      out.letters.push_back(g);
  }
  return out;
}

ClosedKnot::ClosedKnot(BraidWord b, Closure c) : braid(std::move(b)), closure(c) {
  if (closure == Closure::plat && braid.strands % 2 != 0)
    throw std::invalid_argument("plat closure requires an even number of strands");
}

namespace {

// Strand-following writhe for plat closures. The diagram has levels 0..L with
// crossing h (1-based) between levels h-1 and h acting on positions (p, p+1).
// Caps pair positions (1,2),(3,4),... on both the bottom and the top.
int plat_writhe(const BraidWord& w) {
  const int n = w.strands;
  const int L = static_cast<int>(w.letters.size());

  // Track, for each bottom position, the position at every level going up.
  // seg_at(level, pos) = index of the segment occupying `pos` at `level`.
  std::vector<std::vector<int>> pos_at_level(n, std::vector<int>(L + 1));
  for (int s = 0; s < n; ++s) pos_at_level[s][0] = s + 1;
  for (int h = 1; h <= L; ++h) {
    const int p = std::abs(w.letters[h - 1]);
    for (int s = 0; s < n; ++s) {
      int cur = pos_at_level[s][h - 1];
      if (cur == p)
        cur = p + 1;
      else if (cur == p + 1)
        cur = p;
      pos_at_level[s][h] = cur;
    }
  }

  // Walk the closed loops. A loop alternates upward segments, top caps,
  // downward segments and bottom caps; caps pair adjacent pegs (1,2),(3,4),..
  auto cap_partner = [](int pos) { return (pos % 2 == 1) ? pos + 1 : pos - 1; };
  auto segment_at_top = [&](int top_pos) {
    for (int s = 0; s < n; ++s)
      if (pos_at_level[s][L] == top_pos) return s;
    return -1;
  };
  auto next_segment = [&](int seg, int dir) {
    // Returns {segment, direction} after crossing the cap at the current end.
    if (dir == +1) return std::pair<int, int>{segment_at_top(cap_partner(pos_at_level[seg][L])), -1};
    return std::pair<int, int>{cap_partner(pos_at_level[seg][0]) - 1, +1};
  };

  std::vector<int> seg_direction(n, 0);
  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> members;
    {
      int seg = start, dir = +1;
      do {
        members.push_back(seg);
        std::tie(seg, dir) = next_segment(seg, dir);
      } while (seg != start || dir != +1);
    }
    // Orientation convention: the left peg of the loop's leftmost bottom cap
    // is traversed upward. The leftmost bottom position in a loop is always
    // the left peg of its cap.
    int leftmost = members[0];
    for (int s : members)
      if (pos_at_level[s][0] < pos_at_level[leftmost][0]) leftmost = s;
    int seg = leftmost, dir = +1;
    do {
      visited[seg] = true;
      seg_direction[seg] = dir;
      std::tie(seg, dir) = next_segment(seg, dir);
    } while (seg != leftmost || dir != +1);
  }

  int total = 0;
  for (int h = 1; h <= L; ++h) {
    const int p = std::abs(w.letters[h - 1]);
    const int sign = w.letters[h - 1] > 0 ? +1 : -1;
    int d1 = 0, d2 = 0;
    for (int s = 0; s < n; ++s) {
      if (pos_at_level[s][h - 1] == p) d1 = seg_direction[s];
      if (pos_at_level[s][h - 1] == p + 1) d2 = seg_direction[s];
    }
    // Same-direction strands contribute -sign (the trace-closure rule);
    // opposite directions flip it.
    total += (d1 == d2) ? -sign : sign;
  }
  return total;
}

}  // namespace

int writhe(const ClosedKnot& k) {
  if (k.closure == Closure::trace) {
    int sum = 0;
    for (int g : k.braid.letters) sum += (g > 0) ? 1 : -1;
    return -sum;
  }
  if (k.braid.strands % 2 != 0)
    throw std::invalid_argument("plat closure requires an even number of strands");
  return plat_writhe(k.braid);
}

bool verify_braid_relations(const std::vector<CMatrix>& gens, double tol) {
  if (gens.empty()) return true;
  const std::size_t dim = gens[0].rows();
  for (const CMatrix& g : gens) {
    if (g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("generator dimension mismatch");
  }
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    const CMatrix lhs = gens[i] * gens[i + 1] * gens[i];
    const CMatrix rhs = gens[i + 1] * gens[i] * gens[i + 1];
    if (!lhs.approx_equal(rhs, tol)) return false;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 2; j < gens.size(); ++j) {
      if (!(gens[i] * gens[j]).approx_equal(gens[j] * gens[i], tol)) return false;
    }
  return true;
}

std::string knot_to_text(const ClosedKnot& k) {
  std::ostringstream os;
  os << "n=" << k.braid.strands
     << " closure=" << (k.closure == Closure::trace ? "trace" : "plat") << "\n";
  for (std::size_t i = 0; i < k.braid.letters.size(); ++i) {
    if (i) os << ' ';
    os << k.braid.letters[i];
  }
  os << "\n";
  return os.str();
}

ClosedKnot knot_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("empty braidword text");
  int strands = 0;
  std::string closure_name;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("n=", 0) == 0)
        strands = std::atoi(tok.c_str() + 2);
      else if (tok.rfind("closure=", 0) == 0)
        closure_name = tok.substr(8);
    }
  }
  if (strands < 1) throw std::invalid_argument("braidword header missing n=<strands>");
  Closure closure;
  if (closure_name == "trace")
    closure = Closure::trace;
  else if (closure_name == "plat")
    closure = Closure::plat;
  else
    throw std::invalid_argument("braidword header missing closure=<trace|plat>");
  std::vector<int> letters;
  int g;
  while (is >> g) letters.push_back(g);
  return ClosedKnot(BraidWord(strands, std::move(letters)), closure);
}

}  // namespace tqsim
