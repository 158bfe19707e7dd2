#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tqsim/ajl_rep.hpp"
#include "tqsim/fib_anyons.hpp"
#include "tqsim/kauffman.hpp"
#include "tqsim/knot_table.hpp"

using namespace tqsim;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("constants") {
  const AJLParams p(2, 4);
  CHECK(p.d() == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::abs(p.a() - cd(0, 1) * std::exp(cd(0, -kPi / 8.0))) < 1e-15);
  for (int k = 3; k <= 13; ++k) {
    const AJLParams q(2, k);
    const cd aa = q.a();
    CHECK(std::abs(cd(q.d(), 0) - (-aa * aa - cd(1, 0) / (aa * aa))) < 1e-12);
  }
}

TEST_CASE("path enumeration") {
  const PathBasis b24 = enumerate_paths(AJLParams(2, 4));
  REQUIRE(b24.dim() == 2);
  CHECK(b24.paths[0] == "10");
  CHECK(b24.paths[1] == "11");
  CHECK(b24.endpoints[0] == 1);
  CHECK(b24.endpoints[1] == 3);

  // '11' would exit G_3.
  const PathBasis b23 = enumerate_paths(AJLParams(2, 3));
  REQUIRE(b23.dim() == 1);
  CHECK(b23.paths[0] == "10");

  // n = 4: blocks of size 2, 3, 1 for k >= 6; at k = 5 the last path exits.
  for (int k : {6, 7, 10, 13}) {
    const PathBasis b = enumerate_paths(AJLParams(4, k));
    REQUIRE(b.dim() == 6);
    CHECK(b.endpoints == std::vector<int>{1, 1, 3, 3, 3, 5});
  }
  CHECK(enumerate_paths(AJLParams(4, 5)).dim() == 5);

  // Dimension is independent of k once k > n + 1.
  CHECK(enumerate_paths(AJLParams(6, 8)).dim() ==
        enumerate_paths(AJLParams(6, 13)).dim());

  // All prefixes stay inside the graph and stored weights are positive.
  const PathBasis b = enumerate_paths(AJLParams(5, 6));
  for (std::size_t i = 0; i < b.dim(); ++i) {
    int v = 1;
    for (char c : b.paths[i]) {
      v += (c == '1') ? 1 : -1;
      CHECK(v >= 1);
      CHECK(v <= 5);
    }
    CHECK(b.lambdas[i] > 0.0);
  }
}

TEST_CASE("phi generator worked example and TL relations") {
  const AJLParams p24(2, 4);
  const CMatrix phi = phi_generator(p24, 1);
  CHECK(std::abs(phi.at(0, 0) - cd(std::sqrt(2.0), 0)) < 1e-14);
  CHECK(std::abs(phi.at(0, 1)) < 1e-14);
  CHECK(std::abs(phi.at(1, 0)) < 1e-14);
  CHECK(std::abs(phi.at(1, 1)) < 1e-14);

  for (int n : {3, 4, 5}) {
    for (int k : {4, 5, 7}) {
      const AJLParams p(n, k);
      const double d = p.d();
      for (int j = 1; j < n; ++j) {
        const CMatrix phj = phi_generator(p, j);
        CHECK((phj * phj).approx_equal(phj * d, 1e-11));
        if (j + 1 < n) {
          const CMatrix phn = phi_generator(p, j + 1);
          CHECK((phj * phn * phj).approx_equal(phj, 1e-11));
          CHECK((phn * phj * phn).approx_equal(phn, 1e-11));
        }
      }
      // Endpoints never mix.
      const PathBasis basis = enumerate_paths(p);
      for (int j = 1; j < n; ++j) {
        const CMatrix phj = phi_generator(p, j);
        for (std::size_t r = 0; r < basis.dim(); ++r)
          for (std::size_t c = 0; c < basis.dim(); ++c)
            if (basis.endpoints[r] != basis.endpoints[c])
              CHECK(std::abs(phj.at(r, c)) < 1e-14);
      }
    }
  }
}

TEST_CASE("theta worked example") {
  const CMatrix th = theta_generator(AJLParams(2, 4), 1);
  const cd expected = std::exp(cd(0, kPi / 8.0));
  CHECK(std::abs(th.at(0, 0) - expected) < 1e-13);
  CHECK(std::abs(th.at(1, 1) - expected * cd(0, -1)) < 1e-13);
  CHECK(std::abs(th.at(0, 1)) < 1e-14);
}

TEST_CASE("theta unitarity and braid relations for n <= 4, k in 3..13") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 3; k <= 13; ++k) {
      const AJLParams p(n, k);
      std::vector<CMatrix> gens;
      for (int j = 1; j < n; ++j) {
        const CMatrix th = theta_generator(p, j);
        CHECK(th.unitarity_defect() < 1e-12);
        const CMatrix thi = theta_generator(p, j, true);
        CHECK((th * thi).approx_equal(CMatrix::identity(th.rows()), 1e-12));
        gens.push_back(th);
      }
      CHECK(verify_braid_relations(gens, 1e-12));
    }
  }
}

TEST_CASE("redundancy between theta blocks") {
  for (int k = 3; k <= 13; ++k) {
    const CMatrix t12 = theta_generator(AJLParams(2, k), 1);
    const std::size_t m = t12.rows();  // 1 at k=3, else 2
    CHECK(theta_generator(AJLParams(3, k), 1).block(0, 0, m, m).approx_equal(t12, 1e-12));
    CHECK(theta_generator(AJLParams(4, k), 1).block(0, 0, m, m).approx_equal(t12, 1e-12));
    const CMatrix t23 = theta_generator(AJLParams(3, k), 2);
    CHECK(theta_generator(AJLParams(4, k), 2)
              .block(0, 0, m, m)
              .approx_equal(t23.block(0, 0, m, m), 1e-12));
    CHECK(theta_generator(AJLParams(4, k), 3)
              .block(0, 0, m, m)
              .approx_equal(theta_generator(AJLParams(4, k), 1).block(0, 0, m, m),
                            1e-12));
  }
}

TEST_CASE("theta at k=5 matches the Fibonacci generators up to sign") {
  const auto fib4 = fib_four_anyon_generators();
  for (int j = 1; j <= 3; ++j) {
    const CMatrix th = theta_generator(AJLParams(4, 5), j);
    CHECK(th.approx_equal(fib4[j - 1] * cd(-1.0, 0.0), 1e-12));
  }
  // And for two anyons: Theta_1(2,5) = -diag(R0, R1).
  const CMatrix th2 = theta_generator(AJLParams(2, 5), 1);
  const cd r0 = std::exp(cd(0, -4.0 * kPi / 5.0));
  const cd r1 = std::exp(cd(0, 3.0 * kPi / 5.0));
  CHECK(std::abs(th2.at(0, 0) + r0) < 1e-13);
  CHECK(std::abs(th2.at(1, 1) + r1) < 1e-13);
}

TEST_CASE("theta at k=4 matches the inverse Ising generators") {
  auto [s1, s2] = ising_generators_n3();
  CHECK(theta_generator(AJLParams(3, 4), 1).approx_equal(s1.adjoint(), 1e-12));
  CHECK(theta_generator(AJLParams(3, 4), 2).approx_equal(s2.adjoint(), 1e-12));
}

TEST_CASE("markov trace") {
  const AJLParams p(2, 4);
  const PathBasis basis = enumerate_paths(p);
  CHECK(std::abs(markov_trace(basis, CMatrix::identity(2)) - cd(1, 0)) < 1e-14);

  // Hopf word [1,1]: the trace vanishes at k=4.
  const CMatrix x = ajl_word_matrix(p, BraidWord(2, {1, 1}));
  CHECK(std::abs(markov_trace(basis, x)) < 1e-13);

  // TL property at n=2: Tr(Phi_1) = d^-1.
  const CMatrix phi = phi_generator(p, 1);
  CHECK(std::abs(markov_trace(basis, phi) - cd(1.0 / p.d(), 0)) < 1e-13);
}

TEST_CASE("classical AJL agrees with the Kauffman oracle") {
  for (const auto& entry : builtin_knots()) {
    for (Closure c : {Closure::trace, Closure::plat}) {
      const auto knot = builtin_knot(entry.name, c);
      for (int k = 3; k <= 13; ++k) {
        const cd quantum_side = classical_ajl(*knot, k);
        const cd oracle_side = eval_at_root(jones(*knot), k);
        CHECK(std::abs(quantum_side - oracle_side) < 1e-10);
      }
    }
  }
}

TEST_CASE("k=3 is trivial for every knot") {
  for (const auto& entry : builtin_knots()) {
    const auto knot = builtin_knot(entry.name, Closure::trace);
    CHECK(std::abs(classical_ajl(*knot, 3) - cd(1, 0)) < 1e-12);
  }
}

TEST_CASE("endpoint block extraction") {
  const AJLParams p(3, 7);
  const PathBasis basis = enumerate_paths(p);
  const CMatrix th = theta_generator(p, 2);
  const CMatrix blk = endpoint_block(basis, th, 2);
  CHECK(blk.rows() == 2);
  CHECK(std::abs(blk.at(0, 0) - th.at(0, 0)) < 1e-15);
  CHECK_THROWS(endpoint_block(basis, th, 9));
}
