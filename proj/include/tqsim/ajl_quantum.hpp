#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tqsim/ajl_rep.hpp"
#include "tqsim/braid_word.hpp"
#include "tqsim/compiler.hpp"
#include "tqsim/simulator.hpp"

namespace tqsim {

// Wilson score interval for a binomial proportion.
struct WilsonInterval {
  double p_hat = 0.0;
  long long n = 0;
  double alpha = 0.05;
  double z = 0.0;
  double p_prime = 0.0;
  double s_prime = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

double probit(double p);  // inverse normal CDF; z = probit(1 - alpha/2)
WilsonInterval wilson_interval(double p_hat, long long n, double alpha = 0.05);

// Search depth/accuracy budget for compiling the gate set. The defaults
// stop deepening once a weave is at least as close as the equivalent
// published gates.
struct CompileBudget {
  double hadamard_threshold = 0.0015;
  double phase_threshold = 0.002;
  double theta_threshold = 0.002;
  std::vector<int> caps = {13, 15, 17, 18, 20};
};

// Compiles and caches the weave gate set used by the quantum AJL runs: the
// Hadamard and -pi/2 phase weaves, the published NOT and injection weaves,
// and per-k AJL weaves with their phase corrections.
class GateInventory {
 public:
  explicit GateInventory(BraidCache& cache, CompileBudget budget = {});

  // Elementary single-qubit words.
  const std::vector<int>& hadamard() const { return hadamard_; }
  const std::vector<int>& phase_neg() const { return phase_neg_; }
  const std::vector<int>& not_gate() const { return not_; }

  struct LetterGate {
    std::vector<int> weave;       // elementary letters, target-qubit weave
    std::vector<int> correction;  // elementary letters, control-qubit phase fix
  };

  // Weave implementing the 2x2 block of Theta_j for the strand count of the
  // word being run (trace n<=3, plat n=4), plus its phase correction.
  LetterGate letter_gate(int n, Closure closure, int k, int letter);

  // Phase-gate word approximating diag(1, value) for a 1x1 Theta block.
  std::vector<int> scalar_gate_word(int k, cd value);

  CompiledWeave phase_gate(const std::string& name, cd value);

  CompiledWeave compile_to_threshold(const std::string& name, const CMatrix& target,
                                     double threshold);

 private:
  BraidCache& cache_;
  CompileBudget budget_;
  std::vector<int> hadamard_, phase_neg_, not_;
  std::map<std::string, CompiledWeave> memo_;
};

struct AJLPoint {
  int k = 0;
  int n = 0;
  Closure closure = Closure::trace;
  cd estimate;
  cd limit;
  cd exact;
  double ci_halfwidth = 0.0;
  long long ops = 0;
  double error_shot_rate = 0.0;
};

// Full quantum AJL evaluation of one knot at one k: Hadamard tests with the
// compiled weaves, N iterations per component, plus the peek-based infinite-N
// limit and the classical value.
AJLPoint run_ajl(const ClosedKnot& knot, int k, long long iterations,
                 std::uint64_t seed, GateInventory& gates);

// Stochastic Markov-trace estimate for a trace-closure word (n = 2 or 3).
cd estimate_markov_trace(const ClosedKnot& knot, int k, long long iterations,
                         std::uint64_t seed, GateInventory& gates);

enum class AnyonModel { fibonacci, ising };

struct ExactResult {
  double magnitude = 0.0;   // d^{n/2-1} sqrt(p_hat)
  double exact = 0.0;       // from the classical AJL value
  double limit = 0.0;       // peek-based magnitude
  WilsonInterval interval;  // on p_hat
  double lo = 0.0, hi = 0.0;  // interval mapped through the magnitude formula
  long long ops = 0;
};

// Exact anyonic algorithm: run the plat braidword of a 4-strand knot on a
// single qubit (Fibonacci, k=5) or with Ising generators (k=4) and convert
// the |0> frequency into |V(e^{2 pi i / k})|.
ExactResult run_exact(const ClosedKnot& knot, AnyonModel model, long long iterations,
                      std::uint64_t seed);

// One Hadamard-test shot plan, driven sample-by-sample through the
// simulator. Used for the unbiasedness and sampling checks; run_ajl uses the
// same circuits but samples from the prepared distribution.
struct HadamardTestPlan {
  bool imaginary = false;
  std::vector<int> controlled_word;  // two-qubit letters; empty = identity
  int target_basis = 0;              // 0 or 1
  long long iterations = 1;
};

struct HadamardTestResult {
  double mean = 0.0;       // over non-error shots
  long long error_shots = 0;
  long long valid_shots = 0;
};

HadamardTestResult hadamard_test(const HadamardTestPlan& plan, std::uint64_t seed,
                                 GateInventory& gates);

}  // namespace tqsim
