#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tqsim/complex_matrix.hpp"

namespace tqsim {

// Deterministic stream splitting (splitmix64 over mixed salts).
std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> salts);

struct MeasurementOutcome {
  bool error = false;          // a non-computational state was measured
  std::vector<int> bits;       // qubit states, qubit 1 first
  std::string to_string() const;
};

struct TraceEvent {
  char kind;       // '1', '2' or 's'
  int pos;
  std::size_t word_length;
  double leakage;
};

// Statevector register evolved by braidword programs. The accumulated braid
// operator is right-multiplied in call order, so the final state is
// braid_matrix * |00..0>, with the last-applied word acting on the ket first.
class QuantumRegister {
 public:
  QuantumRegister(int qubits, std::uint64_t seed);

  void reset();

  // Single-qubit braidword (letters +-1, +-2) on the qubit at pos (1-based).
  void braid_one(const std::vector<int>& word, int pos);

  // Two-qubit braidword (letters +-1..+-5) on qubits pos, pos+1. The 13x13
  // product is truncated to the computational 4x4 block; returns the leakage
  // 1 - minEigenvalue(T^dag T) of that block.
  double braid_two(const std::vector<int>& word, int pos);

  // Exact SWAP of adjacent qubits; no leakage.
  void apply_swap(int pos);

  // Samples a basis state from |braid_matrix * state|^2; the residual
  // probability mass is the 'error' outcome. Consumes the register.
  MeasurementOutcome measure();

  // |amplitudes|^2 of braid_matrix * state without consuming the register.
  std::vector<double> peek_distribution() const;

  int qubits() const { return qubits_; }
  const CMatrix& braid_matrix() const { return braid_matrix_; }

  void set_trace(std::function<void(const TraceEvent&)> cb) { trace_ = std::move(cb); }

 private:
  void expand_and_apply(const CMatrix& gate, int pos, int gate_qubits);

  int qubits_;
  std::vector<cd> state_;
  CMatrix braid_matrix_;
  std::mt19937_64 rng_;
  bool consumed_ = false;
  std::function<void(const TraceEvent&)> trace_;
};

}  // namespace tqsim
