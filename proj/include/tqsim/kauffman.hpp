#pragma once

#include <complex>

#include "tqsim/braid_word.hpp"
#include "tqsim/laurent.hpp"

namespace tqsim {

// Loop fugacity d = -A^2 - A^-2.
LaurentPoly bracket_loop_value();

// Exact Kauffman bracket of the closure of k, by resolving crossings into
// Temperley-Lieb states with memoisation on the planar pairing. Exponential
// in strands, linear in crossings for fixed strand count.
LaurentPoly bracket(const ClosedKnot& k, int max_crossings = 24);

// Normalised bracket f_K(A) = (-A^3)^{-w(K)} <K>. Substituting A = t^{-1/4}
// gives the Jones polynomial V_K(t).
struct JonesPoly {
  LaurentPoly in_A;
  int writhe = 0;
};

JonesPoly jones(const ClosedKnot& k, int max_crossings = 24);

// The branch used throughout: A = i e^{-i pi / 2k}, so t^{1/2} = A^-2 is
// minus the principal square root of t = e^{2 pi i / k}.
std::complex<double> bracket_variable_at_root(int k_param);

// f_K evaluated at A = i e^{-i pi / 2k}.
std::complex<double> eval_at_root(const JonesPoly& j, int k_param);

}  // namespace tqsim
