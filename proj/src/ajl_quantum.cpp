#include "tqsim/ajl_quantum.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <utility>

#include "tqsim/fib_anyons.hpp"
#include "tqsim/kauffman.hpp"

namespace tqsim {

namespace {
const double kPi = std::acos(-1.0);
}

double probit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("probit domain is (0,1)");
  // Acklam's rational approximation, polished with two Newton steps on erfc.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    const double err = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
    x -= err / pdf;
  }
  return x;
}

WilsonInterval wilson_interval(double p_hat, long long n, double alpha) {
  if (p_hat < 0.0 || p_hat > 1.0) throw std::invalid_argument("p_hat outside [0,1]");
  if (n < 1) throw std::invalid_argument("need at least one trial");
  WilsonInterval w;
  w.p_hat = p_hat;
  w.n = n;
  w.alpha = alpha;
  w.z = probit(1.0 - alpha / 2.0);  // sqrt(2) erfinv(1 - alpha)
  const double nn = static_cast<double>(n);
  const double z2 = w.z * w.z;
  w.p_prime = (p_hat + z2 / (2.0 * nn)) / (1.0 + z2 / nn);
  w.s_prime = std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn)) /
              (1.0 + z2 / nn);
  w.lo = w.p_prime - w.z * w.s_prime;
  w.hi = w.p_prime + w.z * w.s_prime;
  return w;
}

namespace {

CMatrix target_theta1_2(int k) { return theta_generator(AJLParams(2, k), 1, false); }

CMatrix target_theta2_3_block(int k) {
  const AJLParams params(3, k);
  const PathBasis basis = enumerate_paths(params);
  return endpoint_block(basis, theta_generator(params, 2, false), 2);
}

}  // namespace

GateInventory::GateInventory(BraidCache& cache, CompileBudget budget)
    : cache_(cache), budget_(std::move(budget)) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix hadamard(2, 2);
  hadamard.at(0, 0) = inv_sqrt2;
  hadamard.at(0, 1) = inv_sqrt2;
  hadamard.at(1, 0) = inv_sqrt2;
  hadamard.at(1, 1) = -inv_sqrt2;
  CMatrix phase(2, 2);
  phase.at(0, 0) = 1.0;
  phase.at(1, 1) = cd(0.0, -1.0);

  hadamard_ = expand_weave(
      compile_to_threshold("hadamard", hadamard, budget_.hadamard_threshold).word);
  phase_neg_ = expand_weave(
      compile_to_threshold("phase-neg-i", phase, budget_.phase_threshold).word);
  not_ = not_weave_word();  // published, error 0.00086 vs i NOT
}

CompiledWeave GateInventory::compile_to_threshold(const std::string& name,
                                                  const CMatrix& target,
                                                  double threshold) {
  auto memo = memo_.find(name);
  if (memo != memo_.end()) return memo->second;
  if (auto hit = cache_.lookup(name, threshold)) {
    memo_[name] = *hit;
    return *hit;
  }
  CompiledWeave best;
  best.distance = 2.0;
  for (int cap : budget_.caps) {
    SearchConfig cfg;
    cfg.mode = CompileMode::weave;
    cfg.max_length = cap;
    CompiledWeave found = search(target, cfg, name);
    if (found.distance < best.distance) best = found;
    if (best.distance <= threshold) break;
  }
  cache_.append(best);
  memo_[name] = best;
  return best;
}

GateInventory::LetterGate GateInventory::letter_gate(int n, Closure closure, int k,
                                                     int letter) {
  const int j = std::abs(letter);
  // Block redundancy: the leading 2x2 block of Theta_1(3,k), Theta_1(4,k)
  // and Theta_3(4,k) all equal Theta_1(2,k); Theta_2(4,k) matches
  // Theta_2(3,k).
  int target_id;
  if (closure == Closure::trace) {
    if (n > 3) throw std::invalid_argument("trace closure gates exist for n <= 3 only");
    target_id = (j == 1) ? 1 : 2;
  } else {
    if (n != 4) throw std::invalid_argument("plat closure gates exist for n = 4 only");
    target_id = (j == 2) ? 2 : 1;
  }

  const std::string base =
      (target_id == 1 ? "theta1-k" : "theta2blk-k") + std::to_string(k);
  const CMatrix target = target_id == 1 ? target_theta1_2(k) : target_theta2_3_block(k);
  const CompiledWeave w = compile_to_threshold(base, target, budget_.theta_threshold);

  // The controlled block carries the weave's phase relative to the target;
  // a diag(1, e^{-i theta}) gate on the control qubit undoes it. The cache
  // key carries the quantised angle: a correction is only ever reused for a
  // weave with the same phase.
  char corr_name[96];
  std::snprintf(corr_name, sizeof(corr_name), "corr-%s-p%+08ld", base.c_str(),
                std::lround(std::arg(std::conj(w.phase)) * 1e6));
  const CompiledWeave corr = phase_gate(corr_name, std::conj(w.phase));

  LetterGate out;
  if (letter > 0) {
    out.weave = expand_weave(w.word);
    out.correction = expand_weave(corr.word);
  } else {
    out.weave = reverse_negate(expand_weave(w.word));
    out.correction = reverse_negate(expand_weave(corr.word));
  }
  return out;
}

CompiledWeave GateInventory::phase_gate(const std::string& name, cd value) {
  CMatrix target(2, 2);
  target.at(0, 0) = 1.0;
  target.at(1, 1) = value / std::abs(value);
  return compile_to_threshold(name, target, budget_.theta_threshold);
}

std::vector<int> GateInventory::scalar_gate_word(int k, cd value) {
  // Canonicalise to the upper half plane; the conjugate value is the
  // reversed, negated word.
  const double angle = std::arg(value);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "phasegate-k%d-a%+08ld", k,
                std::lround(std::abs(angle) * 1e6));
  const CompiledWeave w = phase_gate(buf, std::exp(cd(0.0, std::abs(angle))));
  if (angle >= 0.0) return expand_weave(w.word);
  return reverse_negate(expand_weave(w.word));
}

namespace {

struct Variant {
  double weight = 1.0;
  long long ops_per_shot = 0;
  double p_plus = 0.0, p_minus = 0.0, p_err = 0.0;

  double limit_mean() const {
    const double valid = p_plus + p_minus;
    return valid > 0.0 ? (p_plus - p_minus) / valid : 0.0;
  }
};

// Builds the two-qubit Hadamard-test circuit and reads the first-qubit
// outcome probabilities from the final state.
Variant build_matrix_variant(GateInventory& gates, const std::vector<int>& ctrl_word,
                             int basis_j, bool imaginary) {
  Variant v;
  QuantumRegister reg(2, 1);
  reg.braid_one(gates.hadamard(), 1);
  if (imaginary) reg.braid_one(gates.phase_neg(), 1);
  reg.braid_two(ctrl_word, 1);
  reg.braid_one(gates.hadamard(), 1);
  if (basis_j == 1) reg.braid_one(gates.not_gate(), 2);

  v.ops_per_shot = static_cast<long long>(2 * gates.hadamard().size() +
                                          ctrl_word.size() +
                                          (imaginary ? gates.phase_neg().size() : 0) +
                                          (basis_j == 1 ? gates.not_gate().size() : 0));
  const std::vector<double> probs = reg.peek_distribution();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if ((i >> 1) == 0)
      v.p_plus += probs[i];
    else
      v.p_minus += probs[i];
  }
  v.p_err = std::max(0.0, 1.0 - v.p_plus - v.p_minus);
  return v;
}

// Scalar Hadamard test: the controlled operation degenerates to single-qubit
// phase gates.
Variant build_scalar_variant(GateInventory& gates,
                             const std::vector<std::vector<int>>& phase_words,
                             bool imaginary) {
  Variant v;
  QuantumRegister reg(1, 1);
  reg.braid_one(gates.hadamard(), 1);
  if (imaginary) reg.braid_one(gates.phase_neg(), 1);
  long long ops = 2 * static_cast<long long>(gates.hadamard().size()) +
                  (imaginary ? static_cast<long long>(gates.phase_neg().size()) : 0);
  for (const auto& w : phase_words) {
    reg.braid_one(w, 1);
    ops += static_cast<long long>(w.size());
  }
  reg.braid_one(gates.hadamard(), 1);
  v.ops_per_shot = ops;
  const std::vector<double> probs = reg.peek_distribution();
  v.p_plus = probs[0];
  v.p_minus = probs[1];
  v.p_err = std::max(0.0, 1.0 - v.p_plus - v.p_minus);
  return v;
}

struct ComponentEstimate {
  double mean = 0.0;
  long long errors = 0;
  long long ops = 0;
};

// One component (Re or Im): per iteration draw a basis variant by weight,
// then a +-1 outcome from its prepared distribution. Error shots are
// excluded from the mean and reported separately.
ComponentEstimate sample_component(const std::vector<Variant>& variants,
                                   long long iterations, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double total_weight = 0.0;
  for (const Variant& v : variants) total_weight += v.weight;

  ComponentEstimate out;
  long long sum = 0, valid = 0;
  for (long long i = 0; i < iterations; ++i) {
    double pick = unit(rng) * total_weight;
    std::size_t idx = 0;
    for (; idx + 1 < variants.size(); ++idx) {
      if (pick < variants[idx].weight) break;
      pick -= variants[idx].weight;
    }
    const Variant& v = variants[idx];
    out.ops += v.ops_per_shot;
    const double r = unit(rng);
    if (r < v.p_plus) {
      ++sum;
      ++valid;
    } else if (r < v.p_plus + v.p_minus) {
      --sum;
      ++valid;
    } else {
      ++out.errors;
    }
  }
  out.mean = valid > 0 ? static_cast<double>(sum) / static_cast<double>(valid) : 0.0;
  return out;
}

double limit_of(const std::vector<Variant>& variants) {
  double total_weight = 0.0, acc = 0.0;
  for (const Variant& v : variants) total_weight += v.weight;
  for (const Variant& v : variants) acc += v.weight / total_weight * v.limit_mean();
  return acc;
}

cd writhe_factor(const ClosedKnot& knot, int k) {
  const cd a = AJLParams(2, k).a();
  const cd base = -(a * a * a);
  const int w = writhe(knot);
  cd factor(1.0, 0.0);
  for (int i = 0; i < std::abs(w); ++i) factor *= (w > 0) ? cd(1.0, 0.0) / base : base;
  return factor;
}

// Per-letter phase-gate words for a path whose endpoint block is 1x1: the
// scalar is the Theta diagonal entry at that path.
std::vector<std::vector<int>> scalar_phase_words(GateInventory& gates,
                                                 const ClosedKnot& knot, int k,
                                                 int path_index) {
  const AJLParams params(std::max(knot.braid.strands, 2), k);
  std::vector<std::vector<int>> words;
  for (int letter : knot.braid.letters) {
    const CMatrix theta = theta_generator(params, std::abs(letter), letter < 0);
    const cd s = theta.at(path_index, path_index);
    words.push_back(gates.scalar_gate_word(k, s));
  }
  return words;
}

}  // namespace

AJLPoint run_ajl(const ClosedKnot& knot, int k, long long iterations,
                 std::uint64_t seed, GateInventory& gates) {
  const int n = knot.braid.strands;
  if (k < 3 || k > 13) throw std::invalid_argument("run_ajl supports 3 <= k <= 13");
  if (knot.closure == Closure::trace && (n < 1 || n > 3))
    throw std::invalid_argument("trace closure runs need n <= 3");
  if (knot.closure == Closure::plat && n != 4 && n != 2)
    throw std::invalid_argument("plat closure runs need n = 4");
  if (iterations < 1) throw std::invalid_argument("need at least one iteration");

  AJLPoint point;
  point.k = k;
  point.n = n;
  point.closure = knot.closure;

  const AJLParams params(std::max(n, 2), k);
  const PathBasis basis = enumerate_paths(params);
  std::vector<int> block_size(basis.dim());
  for (std::size_t p = 0; p < basis.dim(); ++p) {
    int count = 0;
    for (std::size_t q = 0; q < basis.dim(); ++q)
      if (basis.endpoints[q] == basis.endpoints[p]) ++count;
    block_size[p] = count;
  }

  // Concatenated target-qubit weave for the whole braidword (adjacent
  // injection weaves cancel), one controlled word, phase corrections on the
  // control qubit. Built lazily: trivial braidwords at k = 3 never need it.
  std::vector<int> ctrl;
  bool ctrl_built = false;
  auto controlled_word = [&]() -> const std::vector<int>& {
    if (!ctrl_built) {
      std::vector<int> q_weave, corrections;
      for (int letter : knot.braid.letters) {
        GateInventory::LetterGate g = gates.letter_gate(n, knot.closure, k, letter);
        q_weave.insert(q_weave.end(), g.weave.begin(), g.weave.end());
        corrections.insert(corrections.end(), g.correction.begin(), g.correction.end());
      }
      ctrl = build_controlled(q_weave, corrections);
      ctrl_built = true;
    }
    return ctrl;
  };

  std::vector<Variant> real_variants, imag_variants;
  auto add_path_variants = [&](std::size_t p, double weight) {
    if (block_size[p] == 1) {
      const auto phase_words = scalar_phase_words(gates, knot, k, static_cast<int>(p));
      Variant re = build_scalar_variant(gates, phase_words, false);
      Variant im = build_scalar_variant(gates, phase_words, true);
      re.weight = im.weight = weight;
      real_variants.push_back(re);
      imag_variants.push_back(im);
    } else if (block_size[p] == 2) {
      // Index within the endpoint block (blocks are contiguous).
      int j = 0;
      for (std::size_t q = 0; q < p; ++q)
        if (basis.endpoints[q] == basis.endpoints[p]) ++j;
      Variant re = build_matrix_variant(gates, controlled_word(), j, false);
      Variant im = build_matrix_variant(gates, controlled_word(), j, true);
      re.weight = im.weight = weight;
      real_variants.push_back(re);
      imag_variants.push_back(im);
    } else {
      throw std::invalid_argument("endpoint block too large to compile");
    }
  };

  if (knot.closure == Closure::plat) {
    std::string alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(i % 2 == 0 ? '1' : '0');
    const int idx = basis.index_of(alpha);
    if (idx < 0) throw std::runtime_error("plat cap state missing from path basis");
    add_path_variants(static_cast<std::size_t>(idx), 1.0);
  } else {
    for (std::size_t p = 0; p < basis.dim(); ++p)
      add_path_variants(p, basis.lambdas[p]);
  }

  std::mt19937_64 rng_re(mix_seed(seed, {static_cast<std::uint64_t>(k), 1}));
  std::mt19937_64 rng_im(mix_seed(seed, {static_cast<std::uint64_t>(k), 2}));
  const ComponentEstimate re = sample_component(real_variants, iterations, rng_re);
  const ComponentEstimate im = sample_component(imag_variants, iterations, rng_im);

  const double dpow = (knot.closure == Closure::trace)
                          ? std::pow(params.d(), n - 1)
                          : std::pow(params.d(), n / 2 - 1);
  const cd factor = writhe_factor(knot, k);

  point.estimate = factor * dpow * cd(re.mean, im.mean);
  point.limit = factor * dpow * cd(limit_of(real_variants), limit_of(imag_variants));
  point.exact = classical_ajl(knot, k);
  const double coef = (knot.closure == Closure::trace) ? 2.23 : 1.95;
  point.ci_halfwidth = coef * dpow / std::sqrt(static_cast<double>(iterations));
  point.ops = re.ops + im.ops;
  point.error_shot_rate = static_cast<double>(re.errors + im.errors) /
                          static_cast<double>(2 * iterations);
  return point;
}

cd estimate_markov_trace(const ClosedKnot& knot, int k, long long iterations,
                         std::uint64_t seed, GateInventory& gates) {
  if (knot.closure != Closure::trace)
    throw std::invalid_argument("markov trace estimation needs a trace closure");
  AJLPoint p = run_ajl(knot, k, iterations, seed, gates);
  // Undo the closure scaling to recover the bare trace estimate.
  const double dpow = std::pow(AJLParams(2, k).d(), knot.braid.strands - 1);
  return p.estimate / writhe_factor(knot, k) / dpow;
}

ExactResult run_exact(const ClosedKnot& knot, AnyonModel model, long long iterations,
                      std::uint64_t seed) {
  if (knot.closure != Closure::plat || knot.braid.strands != 4)
    throw std::invalid_argument("the exact algorithm runs 4-strand plat closures");
  if (iterations < 1) throw std::invalid_argument("need at least one iteration");

  // Braiding the third and fourth anyons of a zero-charge qubit acts exactly
  // like braiding the first and second.
  std::vector<int> word;
  for (int g : knot.braid.letters) {
    const int j = std::abs(g) == 3 ? 1 : std::abs(g);
    word.push_back(g > 0 ? j : -j);
  }

  const int k = (model == AnyonModel::fibonacci) ? 5 : 4;
  double p0 = 0.0;
  std::mt19937_64 rng(mix_seed(seed, {static_cast<std::uint64_t>(k)}));

  if (model == AnyonModel::fibonacci) {
    QuantumRegister reg(1, mix_seed(seed, {7}));
    reg.braid_one(word, 1);
    p0 = reg.peek_distribution()[0];
  } else {
    const auto [s1, s2] = ising_generators_n3();
    CMatrix m = CMatrix::identity(2);
    for (int g : word) {
      const CMatrix& base = (std::abs(g) == 1) ? s1 : s2;
      m = m * (g > 0 ? base : base.adjoint());
    }
    p0 = std::norm(m.at(0, 0));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  long long zeros = 0;
  for (long long i = 0; i < iterations; ++i)
    if (unit(rng) < p0) ++zeros;

  const double d = AJLParams(2, k).d();
  ExactResult out;
  const double p_hat = static_cast<double>(zeros) / static_cast<double>(iterations);
  out.interval = wilson_interval(p_hat, iterations, 0.05);
  out.magnitude = d * std::sqrt(p_hat);
  out.lo = d * std::sqrt(std::max(0.0, out.interval.lo));
  out.hi = d * std::sqrt(std::max(0.0, out.interval.hi));
  out.limit = d * std::sqrt(p0);
  out.exact = std::abs(classical_ajl(knot, k));
  out.ops = static_cast<long long>(word.size()) * iterations;
  return out;
}

HadamardTestResult hadamard_test(const HadamardTestPlan& plan, std::uint64_t seed,
                                 GateInventory& gates) {
  HadamardTestResult out;
  long long sum = 0;
  QuantumRegister reg(2, seed);
  for (long long i = 0; i < plan.iterations; ++i) {
    reg.reset();
    reg.braid_one(gates.hadamard(), 1);
    if (plan.imaginary) reg.braid_one(gates.phase_neg(), 1);
    if (!plan.controlled_word.empty()) reg.braid_two(plan.controlled_word, 1);
    reg.braid_one(gates.hadamard(), 1);
    if (plan.target_basis == 1) reg.braid_one(gates.not_gate(), 2);
    const MeasurementOutcome m = reg.measure();
    if (m.error) {
      ++out.error_shots;
      continue;
    }
    ++out.valid_shots;
    sum += (m.bits[0] == 0) ? 1 : -1;
  }
  out.mean = out.valid_shots > 0
                 ? static_cast<double>(sum) / static_cast<double>(out.valid_shots)
                 : 0.0;
  return out;
}

}  // namespace tqsim
