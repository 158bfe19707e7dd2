#pragma once

#include <string>
#include <vector>

#include "tqsim/complex_matrix.hpp"

namespace tqsim {

// A braid in B_n as a sequence of signed generator letters: letter g > 0 is
// b_g, g < 0 is b_|g| inverse, with 1 <= |g| < strands. Letters are read in
// chronological order; the matrix of a word is the right-multiplied fold of
// the generator matrices in that same order.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> w);
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

enum class Closure { trace, plat };

struct ClosedKnot {
  BraidWord braid;
  Closure closure = Closure::trace;

  ClosedKnot() = default;
  ClosedKnot(BraidWord b, Closure c);
};

// Writhe of the oriented closed diagram. Trace closures orient every strand
// the same way, giving minus the sum of the letter signs. Plat closures are
// strand-followed: each loop is oriented so the left peg of its leftmost
// bottom cap is traversed upward.
int writhe(const ClosedKnot& k);

// Checks b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1} and far-commutativity on a
// family of candidate generator matrices, elementwise within tol.
bool verify_braid_relations(const std::vector<CMatrix>& gens, double tol = 1e-12);

// Text format: header line "n=<strands> closure=<trace|plat>" followed by
// whitespace-separated signed letters.
std::string knot_to_text(const ClosedKnot& k);
ClosedKnot knot_from_text(const std::string& text);

}  // namespace tqsim
