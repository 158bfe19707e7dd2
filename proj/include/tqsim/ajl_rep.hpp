#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tqsim/braid_word.hpp"
#include "tqsim/complex_matrix.hpp"

namespace tqsim {

// Parameters of the path-model representation: strands n and root index k,
// with t = e^{2 pi i / k}, A = i e^{-i pi / 2k}, d = 2 cos(pi / k).
struct AJLParams {
  int n = 2;
  int k = 3;

  AJLParams(int n_, int k_);

  cd t() const;
  cd a() const;
  double d() const;
};

// Paths of length n on the vertex line 1..k-1 starting at vertex 1, written
// as bitstrings ('1' step right, '0' step left), sorted by endpoint then
// lexicographically. lambda_l = sin(pi l / k).
struct PathBasis {
  int n = 0;
  int k = 0;
  std::vector<std::string> paths;
  std::vector<int> endpoints;
  std::vector<double> lambdas;

  std::size_t dim() const { return paths.size(); }
  int index_of(const std::string& path) const;
  double lambda_sum() const;
};

PathBasis enumerate_paths(const AJLParams& params);

// Temperley-Lieb generator Phi_j over the path basis (1 <= j < n).
CMatrix phi_generator(const AJLParams& params, int j);

// Theta_j(n,k) = A Phi_j + A^-1 I, or its inverse (conjugate constants).
CMatrix theta_generator(const AJLParams& params, int j, bool inverse = false);

// Weighted normalised trace: (1/N) sum_p lambda_l <p|X|p>, N = sum lambda_l.
cd markov_trace(const PathBasis& basis, const CMatrix& x);

// Product of Theta matrices for a braidword, right-multiplied in
// chronological letter order.
CMatrix ajl_word_matrix(const AJLParams& params, const BraidWord& word);

// Exact classical Jones value at t = e^{2 pi i / k} for the closure of the
// knot's braid: trace closures use d^{n-1} * markov trace, plat closures
// d^{n/2-1} <alpha|X|alpha> with alpha = '1010...10', then the writhe factor
// (-A^3)^{-w}.
cd classical_ajl(const ClosedKnot& knot, int k);

// Endpoint-block extraction: rows/columns restricted to paths whose endpoint
// equals l (contiguous in the sorted basis).
CMatrix endpoint_block(const PathBasis& basis, const CMatrix& x, int l);

}  // namespace tqsim
