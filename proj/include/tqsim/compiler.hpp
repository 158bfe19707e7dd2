#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tqsim/braid_word.hpp"
#include "tqsim/complex_matrix.hpp"

namespace tqsim {

// sqrt(2) * d(U,V) where d is the global-phase-invariant distance
// sqrt(1 - |tr(U V^dag)| / 2); equals the operator norm min ||U -/+ V|| over
// SU(2) representatives.
double phase_distance(const CMatrix& u, const CMatrix& v);

enum class CompileMode { braid, weave };

struct SearchConfig {
  int max_length = 8;        // letters; weave letters are squared generators
  int max_groups = 0;        // optional cap on maximal runs (0 = off)
  CompileMode mode = CompileMode::braid;
  bool prune = true;
  int threads = 0;           // 0 = hardware default
};

struct CompiledWeave {
  std::string target_name;
  CompileMode mode = CompileMode::weave;
  std::vector<int> word;     // letters over {+-1, +-2}
  double distance = 0.0;
  cd phase{1.0, 0.0};        // matrix(word) ~ phase * target
};

// Matrix of a word under the mode's generators (weave letters square the
// elementary generators), right-multiplied in letter order.
CMatrix word_matrix(CompileMode mode, const std::vector<int>& word);

// Incremental enumeration of retained words up to max_length. Rejected
// suffix patterns: free cancellation, runs of six identical braid letters
// (sigma^10 = I) or three identical weave letters ((sigma^2)^3 = sigma^-4),
// one side of each braid triplet identity, and the derived four-letter
// duplicates. Counts per length are returned; the callback, when given, sees
// every retained word.
std::vector<std::uint64_t> enumerate_words(
    const SearchConfig& cfg,
    const std::function<void(const std::vector<int>&)>& fn = nullptr);

// True when the word contains a rejected pattern (the naive full-word filter
// equivalent of the incremental rules).
bool word_rejected(const SearchConfig& cfg, const std::vector<int>& word);

// Exhaustive pruned search for the retained word of minimum phase_distance
// to the target; ties break to shorter then lexicographically smaller words.
CompiledWeave search(const CMatrix& target, const SearchConfig& cfg,
                     const std::string& target_name);

// Published braidwords (elementary letters).
const std::vector<int>& hadamard_weave_word();   // ~H, error 0.003
const std::vector<int>& phase_weave_word();      // ~diag(1,-i), error 0.0045
const std::vector<int>& injection_weave_word();  // ~I, moves warp by two, 0.0015
const std::vector<int>& not_weave_word();        // ~i NOT, error 0.00086

struct KnownWeaveCheck {
  std::string name;
  double distance = 0.0;
  double expected = 0.0;
  bool ok = false;
};
std::vector<KnownWeaveCheck> verify_known_weaves();

// Re-expresses a single-qubit word, every letter of which crosses the warp
// strand with an adjacent weft, as a two-qubit word in which the warp is the
// control pair of anyons. Each crossing becomes two slot generators. The
// warp starts at object position `warp_pos` among (wefts-in-window, warp);
// `weft_offset` counts target-qubit wefts permanently left of the window.
std::vector<int> translate_pair_warp(const std::vector<int>& elementary,
                                     int warp_pos, int weft_offset);

// Injection ++ Q ++ inverse injection, plus the phase-correction word mapped
// onto the control qubit (letters +-1 -> +-4, +-2 -> +-5). Returns a word
// over the five two-qubit generators.
std::vector<int> build_controlled(const std::vector<int>& q_weave_elementary,
                                  const std::vector<int>& phase_correction);

// 1 - minEigenvalue(T^dag T) for the leading computational block of m.
double leakage(const CMatrix& m, std::size_t computational_dim);

// Weave letters are squared generators; expansion doubles the length.
std::vector<int> expand_weave(const std::vector<int>& weave_units);

std::vector<int> reverse_negate(const std::vector<int>& word);

// Append-only text cache of compiled words, keyed by target name.
class BraidCache {
 public:
  explicit BraidCache(std::string path);

  std::optional<CompiledWeave> lookup(const std::string& name,
                                      double max_distance) const;
  void append(const CompiledWeave& w);
  const std::string& path() const { return path_; }

 private:
  void load();
  std::string path_;
  std::vector<CompiledWeave> records_;
};

}  // namespace tqsim
