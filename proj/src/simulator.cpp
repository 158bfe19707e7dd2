#include "tqsim/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "tqsim/compiler.hpp"
#include "tqsim/fib_anyons.hpp"

namespace tqsim {

std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> salts) {
  auto splitmix = [](std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t state = master;
  std::uint64_t out = splitmix(state);
  for (std::uint64_t s : salts) {
    state ^= s + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
    out = splitmix(state);
  }
  return out;
}

std::string MeasurementOutcome::to_string() const {
  if (error) return "ERROR";
  std::string s;
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

namespace {

const std::pair<CMatrix, CMatrix>& one_qubit_gens() {
  static const std::pair<CMatrix, CMatrix> gens = fib_single_qubit_generators();
  return gens;
}

const std::array<CMatrix, 4>& one_qubit_table() {
  // Index: letter +1,+2 -> 0,1 ; -1,-2 -> 2,3.
  static const std::array<CMatrix, 4> table = [] {
    std::array<CMatrix, 4> t;
    const auto& [s1, s2] = one_qubit_gens();
    t[0] = s1;
    t[1] = s2;
    t[2] = s1.adjoint();
    t[3] = s2.adjoint();
    return t;
  }();
  return table;
}

const std::array<CMatrix, 10>& two_qubit_table() {
  // Index: letter +1..+5 -> 0..4 ; -1..-5 -> 5..9.
  static const std::array<CMatrix, 10> table = [] {
    std::array<CMatrix, 10> t;
    const auto gens = fib_two_qubit_generators();
    for (int i = 0; i < 5; ++i) {
      t[i] = gens[i];
      t[i + 5] = gens[i].adjoint();
    }
    return t;
  }();
  return table;
}

constexpr int kMaxQubits = 12;

}  // namespace

QuantumRegister::QuantumRegister(int qubits, std::uint64_t seed)
    : qubits_(qubits), rng_(seed) {
  if (qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (qubits > kMaxQubits) throw std::invalid_argument("register size limit exceeded");
  reset();
}

void QuantumRegister::reset() {
  const std::size_t dim = std::size_t(1) << qubits_;
  state_.assign(dim, cd(0.0, 0.0));
  state_[0] = cd(1.0, 0.0);  // |00...0>
  braid_matrix_ = CMatrix::identity(dim);
  consumed_ = false;
}

void QuantumRegister::expand_and_apply(const CMatrix& gate, int pos, int gate_qubits) {
  CMatrix expanded = gate;
  if (pos > 1)
    expanded = CMatrix::identity(std::size_t(1) << (pos - 1)).kron(expanded);
  const int rest = qubits_ - pos - gate_qubits + 1;
  if (rest > 0) expanded = expanded.kron(CMatrix::identity(std::size_t(1) << rest));
  braid_matrix_ = braid_matrix_ * expanded;
}

void QuantumRegister::braid_one(const std::vector<int>& word, int pos) {
  if (pos < 1 || pos > qubits_) throw std::invalid_argument("qubit position out of range");
  const auto& table = one_qubit_table();
  CMatrix m = CMatrix::identity(2);
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > 2)
      throw std::invalid_argument("single-qubit braid letter out of range");
    m = m * table[letter > 0 ? letter - 1 : 1 - letter];
  }
  expand_and_apply(m, pos, 1);
  if (trace_) trace_({'1', pos, word.size(), 0.0});
}

double QuantumRegister::braid_two(const std::vector<int>& word, int pos) {
  if (pos < 1 || pos > qubits_ - 1)
    throw std::invalid_argument("two-qubit position out of range");
  const auto& table = two_qubit_table();
  CMatrix m = CMatrix::identity(13);
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > 5)
      throw std::invalid_argument("two-qubit braid letter out of range");
    m = m * table[letter > 0 ? letter - 1 : 4 - letter];
  }
  const CMatrix truncated = m.block(0, 0, 4, 4);
  const double leak = leakage(truncated, 4);
  expand_and_apply(truncated, pos, 2);
  if (trace_) trace_({'2', pos, word.size(), leak});
  return leak;
}

void QuantumRegister::apply_swap(int pos) {
  if (pos < 1 || pos > qubits_ - 1)
    throw std::invalid_argument("swap position out of range");
  CMatrix swap(4, 4);
  swap.at(0, 0) = 1.0;
  swap.at(1, 2) = 1.0;
  swap.at(2, 1) = 1.0;
  swap.at(3, 3) = 1.0;
  expand_and_apply(swap, pos, 2);
  if (trace_) trace_({'s', pos, 0, 0.0});
}

MeasurementOutcome QuantumRegister::measure() {
  if (consumed_) throw std::logic_error("register was measured; initialise it again");
  const std::vector<cd> final_state = braid_matrix_.apply(state_);
  std::vector<double> cumulative(final_state.size());
  kern::abs2_cumsum(final_state.data(), cumulative.data(), final_state.size());

  const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  MeasurementOutcome out;
  out.error = true;  // r beyond the total norm means a non-computational state
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    if (r <= cumulative[i]) {
      out.error = false;
      out.bits.assign(qubits_, 0);
      for (int q = 0; q < qubits_; ++q)
        out.bits[q] = static_cast<int>((i >> (qubits_ - 1 - q)) & 1);
      break;
    }
  }
  consumed_ = true;
  return out;
}

std::vector<double> QuantumRegister::peek_distribution() const {
  const std::vector<cd> final_state = braid_matrix_.apply(state_);
  std::vector<double> probs(final_state.size());
  for (std::size_t i = 0; i < final_state.size(); ++i) {
    probs[i] = final_state[i].real() * final_state[i].real() +
               final_state[i].imag() * final_state[i].imag();
  }
  return probs;
}

}  // namespace tqsim
