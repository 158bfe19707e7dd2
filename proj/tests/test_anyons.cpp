#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tqsim/braid_word.hpp"
#include "tqsim/fib_anyons.hpp"

using namespace tqsim;

namespace {

const double kPi = std::acos(-1.0);
const double kPhi = kGoldenRatio;

cd polar1(double a) { return std::exp(cd(0.0, a)); }

}  // namespace

TEST_CASE("pentagon identity holds") {
  CHECK(FibFRData::pentagon_residual() < 1e-12);
}

TEST_CASE("trivial and non-trivial F coefficients") {
  // d = 0 with a tau pair forces i = j = 1.
  CHECK(FibFRData::f_coeff(1, 1, 1, 0, 0, 0) == 0.0);
  CHECK(FibFRData::f_coeff(1, 1, 1, 0, 1, 1) == 1.0);
  CHECK(FibFRData::f_coeff(0, 1, 1, 0, 1, 0) == 1.0);
  CHECK(FibFRData::f_coeff(1, 1, 1, 1, 0, 0) == doctest::Approx(1.0 / kPhi));
  CHECK(FibFRData::f_coeff(1, 1, 1, 1, 0, 1) ==
        doctest::Approx(1.0 / std::sqrt(kPhi)));
  CHECK(FibFRData::f_coeff(1, 1, 1, 1, 1, 1) == doctest::Approx(-1.0 / kPhi));
}

TEST_CASE("single qubit generators match the derived matrices") {
  auto [s1, s2] = fib_single_qubit_generators();
  CHECK(std::abs(s1.at(0, 0) - polar1(-4.0 * kPi / 5.0)) < 1e-14);
  CHECK(std::abs(s1.at(1, 1) - polar1(3.0 * kPi / 5.0)) < 1e-14);
  CHECK(std::abs(s1.at(0, 1)) < 1e-14);

  CHECK(std::abs(s2.at(0, 0) - polar1(4.0 * kPi / 5.0) / kPhi) < 1e-13);
  CHECK(std::abs(s2.at(0, 1) - polar1(-3.0 * kPi / 5.0) / std::sqrt(kPhi)) < 1e-13);
  CHECK(std::abs(s2.at(1, 0) - polar1(-3.0 * kPi / 5.0) / std::sqrt(kPhi)) < 1e-13);
  CHECK(std::abs(s2.at(1, 1) - cd(-1.0 / kPhi, 0.0)) < 1e-13);

  CHECK(s1.unitarity_defect() < 1e-13);
  CHECK(s2.unitarity_defect() < 1e-13);
  CHECK((s1 * s1.adjoint()).approx_equal(CMatrix::identity(2), 1e-13));

  CHECK((s1 * s2 * s1).approx_equal(s2 * s1 * s2, 1e-12));

  // sigma^10 = I, the pruning identity.
  for (const CMatrix& s : {s1, s2}) {
    CMatrix p = CMatrix::identity(2);
    for (int i = 0; i < 10; ++i) p = p * s;
    CHECK(p.approx_equal(CMatrix::identity(2), 1e-12));
  }
}

TEST_CASE("full three-anyon generators include the |N> sector") {
  auto [s1, s2] = fib_single_qubit_generators_full();
  CHECK(s1.rows() == 3);
  CHECK(std::abs(s1.at(2, 2) - polar1(3.0 * kPi / 5.0)) < 1e-14);
  CHECK(std::abs(s2.at(2, 2) - polar1(3.0 * kPi / 5.0)) < 1e-13);
  CHECK(std::abs(s2.at(0, 2)) < 1e-14);
  CHECK(std::abs(s2.at(2, 0)) < 1e-14);
  CHECK(verify_braid_relations({s1, s2}));

  // The generators are conjugate: spectrum of sigma_2 is {R0, R1, R1}.
  const cd l0 = polar1(-4.0 * kPi / 5.0);
  const cd l1 = polar1(3.0 * kPi / 5.0);
  const CMatrix zero =
      (s2 - CMatrix::identity(3) * l0) * (s2 - CMatrix::identity(3) * l1);
  CHECK(zero.max_abs() < 1e-12);
  CHECK(std::abs(s2.trace() - (l0 + l1 + l1)) < 1e-12);
}

TEST_CASE("apply_f_move on the qubit channel") {
  const FusionBasis basis = FusionBasis::enumerate(3, std::nullopt, {"01", "11", "10"});
  FusionVector v(3, cd(0.0, 0.0));
  v[0] = 1.0;  // |0> = '01'
  const FusionVector out = apply_f_move(basis, v, 0, -1, 1);
  CHECK(std::abs(out[0] - cd(1.0 / kPhi, 0.0)) < 1e-14);
  CHECK(std::abs(out[1] - cd(1.0 / std::sqrt(kPhi), 0.0)) < 1e-14);
  CHECK(std::abs(out[2]) < 1e-14);

  // F(1110): single consistent channel, coefficient exactly 1.
  FusionVector n(3, cd(0.0, 0.0));
  n[2] = 1.0;  // |N> = '10'
  const FusionVector out_n = apply_f_move(basis, n, 0, -1, 1);
  CHECK(std::abs(out_n[2] - cd(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(out_n[0]) + std::abs(out_n[1]) < 1e-14);
}

TEST_CASE("two qubit generators") {
  const auto gens = fib_two_qubit_generators();
  for (const CMatrix& g : gens) {
    CHECK(g.rows() == 13);
    CHECK(g.unitarity_defect() < 1e-12);
  }
  CHECK(verify_braid_relations({gens[0], gens[1], gens[2], gens[3], gens[4]}));

  // Only sigma_3 mixes the computational and non-computational blocks.
  for (int idx : {0, 1, 3, 4}) {
    double off = 0.0;
    for (int i = 0; i < 13; ++i)
      for (int j = 0; j < 13; ++j)
        if ((i < 4) != (j < 4)) off = std::max(off, std::abs(gens[idx].at(i, j)));
    CHECK(off < 1e-13);
  }
  double off3 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 4; j < 13; ++j) off3 = std::max(off3, std::abs(gens[2].at(i, j)));
  CHECK(off3 > 0.01);

  // sigma_1, sigma_2 act on the second qubit; sigma_4, sigma_5 on the first.
  auto [s1, s2] = fib_single_qubit_generators();
  const CMatrix i2 = CMatrix::identity(2);
  CHECK(gens[0].block(0, 0, 4, 4).approx_equal(i2.kron(s1), 1e-13));
  CHECK(gens[1].block(0, 0, 4, 4).approx_equal(i2.kron(s2), 1e-13));
  CHECK(gens[3].block(0, 0, 4, 4).approx_equal(s1.kron(i2), 1e-13));
  CHECK(gens[4].block(0, 0, 4, 4).approx_equal(s2.kron(i2), 1e-13));
}

TEST_CASE("four anyon generators") {
  const auto gens = fib_four_anyon_generators();
  for (const CMatrix& g : gens) {
    CHECK(g.rows() == 5);
    CHECK(g.unitarity_defect() < 1e-12);
  }
  CHECK(verify_braid_relations({gens[0], gens[1], gens[2]}));
  // Braiding the third and fourth anyons acts like the first pair on the
  // zero-charge block.
  CHECK(gens[2].block(0, 0, 2, 2).approx_equal(gens[0].block(0, 0, 2, 2), 1e-12));
}

TEST_CASE("ising generators") {
  auto [s1, s2] = ising_generators_n3();
  CHECK(std::abs(s1.at(0, 0) - polar1(-kPi / 8.0)) < 1e-14);
  CHECK(std::abs(s1.at(1, 1) - polar1(-kPi / 8.0) * cd(0, 1)) < 1e-14);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s2.at(0, 0) - inv_sqrt2 * polar1(kPi / 8.0)) < 1e-14);
  CHECK(std::abs(s2.at(0, 1) - inv_sqrt2 * polar1(-3.0 * kPi / 8.0)) < 1e-14);
  CHECK(std::abs(s2.at(1, 0) - inv_sqrt2 * polar1(-3.0 * kPi / 8.0)) < 1e-14);
  CHECK(std::abs(s2.at(1, 1) - inv_sqrt2 * polar1(kPi / 8.0)) < 1e-14);

  CHECK(s1.unitarity_defect() < 1e-13);
  CHECK(s2.unitarity_defect() < 1e-13);
  CHECK((s1 * s2 * s1).approx_equal(s2 * s1 * s2, 1e-12));
  const CMatrix f = IsingFRData::f_matrix();
  CHECK((f * f).approx_equal(CMatrix::identity(2), 1e-14));
}

TEST_CASE("basis order validation") {
  CHECK_THROWS(FusionBasis::enumerate(3, 1, {"01", "10"}));
  const FusionBasis b = FusionBasis::enumerate(8, 0);
  CHECK(b.dim() == 13);
}
