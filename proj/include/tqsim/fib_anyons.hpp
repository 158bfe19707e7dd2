#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tqsim/complex_matrix.hpp"

namespace tqsim {

inline constexpr double kGoldenRatio = 1.6180339887498948482;

// Fibonacci F and R coefficient tables. Labels are charges in {0, 1}; the
// only non-trivial F block is F(1111), fixed to the real symmetric choice.
struct FibFRData {
  // F(abcd)^i_j. Zero when either fusion tree violates the fusion rules,
  // the F(1111) entry for (1111), and 1 otherwise.
  static double f_coeff(int a, int b, int c, int d, int i, int j);
  static cd r_coeff(int c, bool inverse);
  static bool fuse_allowed(int a, int b, int c);
  // Largest |lhs - rhs| of the pentagon identity over all index assignments.
  static double pentagon_residual();
};

// Basis of sequential-fusion outcome bitstrings for n_anyons tau anyons.
// state[i] is the charge after fusing the first i+2 anyons; a '0' can only
// follow a '1'. Optionally restricted to a fixed total charge.
struct FusionBasis {
  int n_anyons = 0;
  std::vector<std::string> states;

  static FusionBasis enumerate(int n_anyons, std::optional<int> total_charge,
                               const std::vector<std::string>& order = {});
  int index_of(const std::string& state) const;
  std::size_t dim() const { return states.size(); }
};

// A superposition over fusion bitstrings.
using FusionVector = std::vector<cd>;

// One F move applied at fusion site `site`: the neighbouring labels are
// a = state[site-1] (or the first anyon's charge when site == 0... see the
// exchange recipes), d = state[site+1]. Self-inverse up to transposition.
FusionVector apply_f_move(const FusionBasis& basis, const FusionVector& v,
                          int site, int a_label_site, int d_label_site);

// Matrix of the exchange of adjacent anyons (m, m+1), 1-based, built by
// applying the recipe F -> R -> F (or a bare R for m = 1) to every basis
// state.
CMatrix exchange_matrix(const FusionBasis& basis, int m, bool inverse);

// sigma_1, sigma_2 restricted to the computational states |0>, |1> of a
// three-anyon qubit with total charge 1.
std::pair<CMatrix, CMatrix> fib_single_qubit_generators();

// Same two generators over the full basis |0>, |1>, |N>.
std::pair<CMatrix, CMatrix> fib_single_qubit_generators_full();

// The five 13x13 two-qubit generators over the zero-total-charge basis of
// eight anyons, in the frozen basis order (four computational states first).
std::array<CMatrix, 5> fib_two_qubit_generators();

// sigma_1..sigma_3 for four anyons over the full five-state basis, ordered to
// match the AJL path basis at k = 5.
std::array<CMatrix, 3> fib_four_anyon_generators();

// The frozen 13-state basis order for two qubits.
const std::vector<std::string>& two_qubit_basis_order();

// Ising model: sigma_1 = R, sigma_2 = F R F over the two-dimensional fusion
// space of three (or four, net charge 0) sigma anyons.
struct IsingFRData {
  static CMatrix f_matrix();
  static CMatrix r_matrix();
};

std::pair<CMatrix, CMatrix> ising_generators_n3();

}  // namespace tqsim
