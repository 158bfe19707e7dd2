#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "tqsim/ajl_quantum.hpp"
#include "tqsim/fib_anyons.hpp"
#include "tqsim/kauffman.hpp"
#include "tqsim/knot_table.hpp"

using namespace tqsim;

namespace {

// Relaxed search budget keeps the unit suite quick; the acceptance suite
// builds the production-quality cache.
CompileBudget test_budget() {
  CompileBudget b;
  b.hadamard_threshold = 0.0035;
  b.phase_threshold = 0.005;
  b.theta_threshold = 0.004;
  b.caps = {11, 13, 15, 17};
  return b;
}

GateInventory& shared_gates() {
  static BraidCache cache("tqsim_cache_unit.txt");
  static GateInventory gates(cache, test_budget());
  return gates;
}

double erfinv_bisect(double y) {
  long double lo = -6.0L, hi = 6.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (std::erf(static_cast<double>(mid)) < y)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace

TEST_CASE("probit") {
  CHECK(probit(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(probit(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(probit(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
  CHECK_THROWS(probit(0.0));
  CHECK_THROWS(probit(1.0));
}

TEST_CASE("wilson interval") {
  // Lower bound clamps to zero when nothing was observed.
  const WilsonInterval zero = wilson_interval(0.0, 100, 0.05);
  CHECK(std::abs(zero.lo) < 1e-15);
  CHECK(zero.hi > 0.0);
  CHECK(zero.lo <= zero.p_prime);
  CHECK(zero.p_prime <= zero.hi);

  // Interval shrinks like 1/sqrt(N).
  const WilsonInterval w1 = wilson_interval(0.5, 1000, 0.05);
  const WilsonInterval w2 = wilson_interval(0.5, 100000, 0.05);
  CHECK((w2.hi - w2.lo) < 0.12 * (w1.hi - w1.lo));

  // Against an independent evaluation of the four formulas.
  const WilsonInterval w = wilson_interval(0.5, 100, 0.05);
  const double z = std::sqrt(2.0) * erfinv_bisect(0.95);
  const double p_prime = (0.5 + z * z / 200.0) / (1.0 + z * z / 100.0);
  const double s_prime =
      std::sqrt(0.25 / 100.0 + z * z / (4.0 * 100.0 * 100.0)) / (1.0 + z * z / 100.0);
  CHECK(w.z == doctest::Approx(z).epsilon(1e-10));
  CHECK(w.p_prime == doctest::Approx(p_prime).epsilon(1e-12));
  CHECK(w.s_prime == doctest::Approx(s_prime).epsilon(1e-12));
  CHECK(w.lo == doctest::Approx(p_prime - z * s_prime).epsilon(1e-12));
  CHECK(w.hi == doctest::Approx(p_prime + z * s_prime).epsilon(1e-12));

  CHECK_THROWS(wilson_interval(1.5, 10, 0.05));
  CHECK_THROWS(wilson_interval(0.5, 0, 0.05));
}

TEST_CASE("compiled gate inventory meets its thresholds") {
  GateInventory& gates = shared_gates();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h.at(0, 0) = inv_sqrt2;
  h.at(0, 1) = inv_sqrt2;
  h.at(1, 0) = inv_sqrt2;
  h.at(1, 1) = -inv_sqrt2;
  CMatrix weave_m = CMatrix::identity(2);
  {
    const auto& word = gates.hadamard();
    auto [s1, s2] = fib_single_qubit_generators();
    for (int letter : word) {
      const CMatrix& g = std::abs(letter) == 1 ? s1 : s2;
      weave_m = weave_m * (letter > 0 ? g : g.adjoint());
    }
  }
  CHECK(phase_distance(weave_m, h) <= 0.0035);
}

TEST_CASE("hadamard test with the identity returns one") {
  HadamardTestPlan plan;
  plan.iterations = 1500;
  plan.controlled_word = {};
  plan.target_basis = 0;
  plan.imaginary = false;
  const HadamardTestResult r = hadamard_test(plan, 99, shared_gates());
  CHECK(r.mean > 0.97);
  CHECK(r.valid_shots + r.error_shots == plan.iterations);

  HadamardTestPlan imag = plan;
  imag.imaginary = true;
  const HadamardTestResult ri = hadamard_test(imag, 99, shared_gates());
  CHECK(std::abs(ri.mean) < 0.1);
}

TEST_CASE("exact algorithm: Fibonacci magnitudes and the peek identity") {
  struct Case {
    const char* name;
    double magnitude;
  };
  const Case cases[] = {
      {"hopf+", 0.618}, {"hopf-", 0.618}, {"trefoilL", 1.543},
      {"trefoilR", 1.543}, {"fig8", 1.236}};
  for (const Case& c : cases) {
    const auto knot = builtin_knot(c.name, Closure::plat);
    REQUIRE(knot.has_value());
    const ExactResult r = run_exact(*knot, AnyonModel::fibonacci, 100000, 7);
    INFO(c.name);
    // The braid is exact, so the peek limit equals the classical value.
    CHECK(std::abs(r.limit - r.exact) < 1e-10);
    CHECK(std::abs(r.exact - c.magnitude) < 5e-4);
    CHECK(std::abs(r.magnitude - r.exact) < 0.02);
    CHECK(r.ops == static_cast<long long>(knot->braid.letters.size()) * 100000);
  }
}

TEST_CASE("exact algorithm identity for random four-strand plat words") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len_dist(0, 8);
  std::uniform_int_distribution<int> letter_dist(0, 5);
  const double phi = kGoldenRatio;
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<int> letters;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      const int pick = letter_dist(rng);
      const int mag = pick / 2 + 1;
      letters.push_back(pick % 2 == 0 ? mag : -mag);
    }
    const ClosedKnot knot(BraidWord(4, letters), Closure::plat);
    const ExactResult r = run_exact(knot, AnyonModel::fibonacci, 1, 5);
    CHECK(std::abs(r.limit - std::abs(classical_ajl(knot, 5))) < 1e-10);
    (void)phi;
  }
}

TEST_CASE("exact algorithm: Ising Hopf magnitude vanishes") {
  const auto knot = builtin_knot("hopf+", Closure::plat);
  const ExactResult r = run_exact(*knot, AnyonModel::ising, 1000, 3);
  CHECK(r.limit < 1e-12);
  CHECK(r.magnitude < 1e-12);
  // No braiding: the pairs fuse back to vacuum with certainty.
  const ClosedKnot unknot(BraidWord(4, {}), Closure::plat);
  const ExactResult r0 = run_exact(unknot, AnyonModel::ising, 1000, 3);
  CHECK(r0.limit == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("wilson coverage of the exact value") {
  const auto knot = builtin_knot("hopf+", Closure::plat);
  int covered = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const ExactResult r = run_exact(*knot, AnyonModel::fibonacci, 20000,
                                    mix_seed(1000, {static_cast<std::uint64_t>(rep)}));
    if (r.lo <= r.exact && r.exact <= r.hi) ++covered;
  }
  CHECK(covered >= 34);  // 95% nominal coverage, generous floor
}

TEST_CASE("run_ajl on the positive Hopf plat at k=5") {
  const auto knot = builtin_knot("hopf+", Closure::plat);
  const AJLPoint p = run_ajl(*knot, 5, 4000, 11, shared_gates());
  CHECK(std::abs(p.limit - p.exact) < 0.02);
  CHECK(std::abs(p.estimate - p.exact) < 3.0 * p.ci_halfwidth);
  CHECK(p.ops > 0);
  CHECK(p.error_shot_rate < 1e-3);
  CHECK(std::abs(p.exact - eval_at_root(jones(*knot), 5)) < 1e-10);
}

TEST_CASE("run_ajl on the figure-eight trace at k=6 uses the scalar variant") {
  const auto knot = builtin_knot("fig8", Closure::trace);
  const AJLPoint p = run_ajl(*knot, 6, 4000, 13, shared_gates());
  CHECK(std::abs(p.limit - p.exact) < 0.05);
  CHECK(std::abs(p.estimate - p.exact) < 3.5 * p.ci_halfwidth);
}

TEST_CASE("markov trace estimate is exactly trivial at k=3") {
  const auto knot = builtin_knot("hopf-", Closure::trace);
  const cd est = estimate_markov_trace(*knot, 3, 2000, 5, shared_gates());
  // Scalar phase gates at k=3 are exact identities; only the Hadamard weave
  // error remains.
  CHECK(std::abs(est - cd(1.0, 0.0)) < 0.05);
}

TEST_CASE("unbiasedness: peek matches direct matrix algebra on the weaves") {
  GateInventory& gates = shared_gates();
  const auto knot = builtin_knot("hopf+", Closure::plat);

  std::vector<int> q_weave, corrections;
  for (int letter : knot->braid.letters) {
    auto g = gates.letter_gate(4, Closure::plat, 5, letter);
    q_weave.insert(q_weave.end(), g.weave.begin(), g.weave.end());
    corrections.insert(corrections.end(), g.correction.begin(), g.correction.end());
  }
  const std::vector<int> ctrl = build_controlled(q_weave, corrections);

  // Simulator route.
  QuantumRegister reg(2, 1);
  reg.braid_one(gates.hadamard(), 1);
  reg.braid_two(ctrl, 1);
  reg.braid_one(gates.hadamard(), 1);
  const auto probs = reg.peek_distribution();
  const double pr0_sim = probs[0] + probs[1];

  // Direct algebra on the same compiled words.
  auto word2x2 = [](const std::vector<int>& word) {
    auto [s1, s2] = fib_single_qubit_generators();
    CMatrix m = CMatrix::identity(2);
    for (int letter : word) {
      const CMatrix& g = std::abs(letter) == 1 ? s1 : s2;
      m = m * (letter > 0 ? g : g.adjoint());
    }
    return m;
  };
  const auto gens13 = fib_two_qubit_generators();
  CMatrix big = CMatrix::identity(13);
  for (int letter : ctrl) {
    const CMatrix& g = gens13[std::abs(letter) - 1];
    big = big * (letter > 0 ? g : g.adjoint());
  }
  const CMatrix hw = word2x2(gates.hadamard());
  const CMatrix circuit =
      hw.kron(CMatrix::identity(2)) * big.block(0, 0, 4, 4) * hw.kron(CMatrix::identity(2));
  std::vector<cd> ket = {1, 0, 0, 0};
  const auto out = circuit.apply(ket);
  const double pr0_direct = std::norm(out[0]) + std::norm(out[1]);
  CHECK(std::abs(pr0_sim - pr0_direct) < 1e-10);
}

TEST_CASE("run_ajl rejects unsupported parameters") {
  const auto knot = builtin_knot("hopf+", Closure::plat);
  CHECK_THROWS(run_ajl(*knot, 2, 100, 1, shared_gates()));
  CHECK_THROWS(run_ajl(*knot, 14, 100, 1, shared_gates()));
  CHECK_THROWS(run_ajl(*knot, 5, 0, 1, shared_gates()));
  const ClosedKnot big(BraidWord(5, {4}), Closure::trace);
  CHECK_THROWS(run_ajl(big, 5, 100, 1, shared_gates()));
}
