#include "tqsim/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tqsim/fib_anyons.hpp"

namespace tqsim {

double phase_distance(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != 2 || u.cols() != 2 || v.rows() != 2 || v.cols() != 2)
    throw std::invalid_argument("phase_distance expects 2x2 matrices");
  if (u.unitarity_defect() > 1e-9 || v.unitarity_defect() > 1e-9)
    throw std::invalid_argument("phase_distance expects unitary matrices");
  cd ip(0.0, 0.0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ip += u.at(i, j) * std::conj(v.at(i, j));
  return std::sqrt(std::max(0.0, 2.0 - std::abs(ip)));
}

namespace {

struct Gens {
  // Index map: letter +1,+2 -> 0,1 ; -1,-2 -> 2,3.
  cd g[4][4];
};

int letter_slot(int letter) { return (letter > 0) ? letter - 1 : 1 - letter; }

Gens generator_table(CompileMode mode) {
  auto [s1, s2] = fib_single_qubit_generators();
  if (mode == CompileMode::weave) {
    s1 = s1 * s1;
    s2 = s2 * s2;
  }
  const CMatrix inv1 = s1.adjoint();
  const CMatrix inv2 = s2.adjoint();
  Gens out;
  const CMatrix* mats[4] = {&s1, &s2, &inv1, &inv2};
  for (int m = 0; m < 4; ++m)
    for (int i = 0; i < 4; ++i) out.g[m][i] = mats[m]->data()[i];
  return out;
}

constexpr int kLetters[4] = {-2, -1, 1, 2};

// Suffix rejection rules shared by the incremental generator and the naive
// filter. `w` is the word with the candidate letter already appended.
bool suffix_rejected(CompileMode mode, const std::vector<int>& w, bool prune) {
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == -w[n - 2]) return true;  // free cancellation
  if (!prune) return false;

  const int run_limit = (mode == CompileMode::braid) ? 6 : 3;
  if (n >= static_cast<std::size_t>(run_limit)) {
    bool run = true;
    for (int i = 1; i < run_limit; ++i)
      if (w[n - 1 - i] != w[n - 1]) {
        run = false;
        break;
      }
    if (run) return true;
  }

  if (mode == CompileMode::braid) {
    if (n >= 3) {
      const int x = w[n - 3], y = w[n - 2], z = w[n - 1];
      const bool adjacent = std::abs(x) != std::abs(y);
      // Of each Yang-Baxter pair (x y x) = (y x y), keep the |x|=1 side.
      if (adjacent && z == x && (x > 0) == (y > 0) && std::abs(x) == 2) return true;
      // Of each (y x y^-1) = (x^-1 y x), keep the second form.
      if (adjacent && z == -x && (x > 0) == (y > 0)) return true;
    }
    if (n >= 4) {
      const int p = w[n - 4], q = w[n - 3], r = w[n - 2], s = w[n - 1];
      // (y^-1 x y x) reduces to a two-letter word via the kept triplet.
      if (std::abs(p) != std::abs(q) && r == -p && s == q && (q > 0) == (r > 0))
        return true;
    }
  }
  return false;
}

// The search maximises |tr(U V^dag)|^2, which orders candidates identically
// to the distance sqrt(2 - |tr|) without a square root per node. The value
// is clamped and quantised so that numerically indistinguishable overlaps
// (exact representations in particular) tie and fall through to the
// shorter-then-lexicographic word order.
struct Best {
  double ip_q = -1.0;
  std::vector<int> word;
  cd matrix[4];

  bool better_than(const Best& o) const {
    if (ip_q != o.ip_q) return ip_q > o.ip_q;
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return std::lexicographical_compare(word.begin(), word.end(), o.word.begin(),
                                        o.word.end());
  }
};

struct DfsContext {
  const Gens* gens;
  const SearchConfig* cfg;
  kern::Cmul2x2Fn mul;
  cd target_conj[4];  // conj(target) entries for the Frobenius inner product
  Best best;

  double ip_q_of(const cd* u) const {
    const cd ip = u[0] * target_conj[0] + u[1] * target_conj[1] +
                  u[2] * target_conj[2] + u[3] * target_conj[3];
    const double ip_sq = ip.real() * ip.real() + ip.imag() * ip.imag();
    return std::nearbyint(std::min(ip_sq, 4.0) * 1e13);
  }

  void consider(const cd* u, const std::vector<int>& word) {
    const double ip_q = ip_q_of(u);
    if (ip_q < best.ip_q) return;
    Best cand;
    cand.ip_q = ip_q;
    cand.word = word;
    std::copy(u, u + 4, cand.matrix);
    if (cand.better_than(best)) best = std::move(cand);
  }

  void run(std::vector<int>& word, std::vector<cd>& stack, int groups, int run_len) {
    const std::size_t depth = word.size();
    if (depth >= static_cast<std::size_t>(cfg->max_length)) return;
    for (int letter : kLetters) {
      word.push_back(letter);
      int new_groups = groups;
      int new_run = 1;
      if (depth > 0 && word[depth - 1] == letter) {
        new_run = run_len + 1;
      } else {
        ++new_groups;
      }
      const bool over_groups = cfg->max_groups > 0 && new_groups > cfg->max_groups;
      if (!over_groups && !suffix_rejected(cfg->mode, word, cfg->prune)) {
        cd* u = stack.data() + 4 * (depth + 1);
        const cd* prev = stack.data() + 4 * depth;
        mul(prev, gens->g[letter_slot(letter)], u);
        consider(u, word);
        run(word, stack, new_groups, new_run);
      }
      word.pop_back();
    }
  }
};

}  // namespace

CMatrix word_matrix(CompileMode mode, const std::vector<int>& word) {
  const Gens gens = generator_table(mode);
  CMatrix m = CMatrix::identity(2);
  for (int letter : word) {
    CMatrix g(2, 2);
    std::copy(gens.g[letter_slot(letter)], gens.g[letter_slot(letter)] + 4, g.data());
    m = m * g;
  }
  return m;
}

std::vector<std::uint64_t> enumerate_words(
    const SearchConfig& cfg, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<std::uint64_t> counts(cfg.max_length + 1, 0);
  std::vector<int> word;
  word.reserve(cfg.max_length);
  std::function<void(int, int)> rec = [&](int groups, int run_len) {
    const std::size_t depth = word.size();
    if (depth >= static_cast<std::size_t>(cfg.max_length)) return;
    for (int letter : kLetters) {
      word.push_back(letter);
      int new_groups = groups;
      int new_run = 1;
      if (depth > 0 && word[depth - 1] == letter)
        new_run = run_len + 1;
      else
        ++new_groups;
      const bool over_groups = cfg.max_groups > 0 && new_groups > cfg.max_groups;
      if (!over_groups && !suffix_rejected(cfg.mode, word, cfg.prune)) {
        ++counts[depth + 1];
        if (fn) fn(word);
        rec(new_groups, new_run);
      }
      word.pop_back();
    }
  };
  rec(0, 0);
  return counts;
}

bool word_rejected(const SearchConfig& cfg, const std::vector<int>& word) {
  for (std::size_t len = 1; len <= word.size(); ++len) {
    std::vector<int> prefix(word.begin(), word.begin() + len);
    if (suffix_rejected(cfg.mode, prefix, cfg.prune)) return true;
  }
  return false;
}

CompiledWeave search(const CMatrix& target, const SearchConfig& cfg,
                     const std::string& target_name) {
  if (target.rows() != 2 || target.cols() != 2)
    throw std::invalid_argument("search expects a 2x2 target");
  if (target.unitarity_defect() > 1e-9)
    throw std::invalid_argument("search expects a unitary target");

  const Gens gens = generator_table(cfg.mode);

  auto run_partition = [&](int first_letter) {
    DfsContext ctx;
    ctx.gens = &gens;
    ctx.cfg = &cfg;
    ctx.mul = kern::cmul2x2_fn();
    for (int i = 0; i < 4; ++i) ctx.target_conj[i] = std::conj(target.data()[i]);

    std::vector<cd> stack(4 * (cfg.max_length + 1));
    stack[0] = cd(1.0, 0.0);
    stack[1] = cd(0.0, 0.0);
    stack[2] = cd(0.0, 0.0);
    stack[3] = cd(1.0, 0.0);
    // Identity is a candidate too (empty word), considered once in the
    // first partition.
    std::vector<int> word;
    if (first_letter == kLetters[0]) ctx.consider(stack.data(), word);

    word.push_back(first_letter);
    if (!suffix_rejected(cfg.mode, word, cfg.prune) &&
        !(cfg.max_groups > 0 && 1 > cfg.max_groups)) {
      ctx.mul(stack.data(), gens.g[letter_slot(first_letter)], stack.data() + 4);
      ctx.consider(stack.data() + 4, word);
      ctx.run(word, stack, 1, 1);
    }
    return ctx.best;
  };

  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, 4));

  Best best;
  if (threads == 1 || cfg.max_length <= 4) {
    for (int letter : kLetters) {
      Best b = run_partition(letter);
      if (b.better_than(best)) best = b;
    }
  } else {
    std::vector<std::future<Best>> futures;
    for (int letter : kLetters)
      futures.push_back(std::async(std::launch::async, run_partition, letter));
    for (auto& f : futures) {
      Best b = f.get();
      if (b.better_than(best)) best = b;
    }
  }

  CompiledWeave out;
  out.target_name = target_name;
  out.mode = cfg.mode;
  out.word = best.word;
  cd ip(0.0, 0.0);
  for (int i = 0; i < 4; ++i) ip += best.matrix[i] * std::conj(target.data()[i]);
  out.distance = std::sqrt(std::max(0.0, 2.0 - std::abs(ip)));
  out.phase = (std::abs(ip) > 0.0) ? ip / std::abs(ip) : cd(1.0, 0.0);
  return out;
}

namespace {

std::vector<int> powers_to_letters(std::initializer_list<std::pair<int, int>> groups) {
  // (generator, signed power) pairs, e.g. {2, -4} = sigma_2^-4.
  std::vector<int> out;
  for (auto [gen, power] : groups) {
    const int letter = power > 0 ? gen : -gen;
    for (int i = 0; i < std::abs(power); ++i) out.push_back(letter);
  }
  return out;
}

}  // namespace

const std::vector<int>& hadamard_weave_word() {
  static const std::vector<int> w = powers_to_letters(
      {{2, -4}, {1, -4}, {2, 2}, {1, 4}, {2, 2}, {1, -2}, {2, -4},
       {1, -2}, {2, -2}, {1, -2}, {2, -2}, {1, 2}, {2, -2}});
  return w;
}

const std::vector<int>& phase_weave_word() {
  static const std::vector<int> w = powers_to_letters(
      {{2, 2}, {1, -4}, {2, -2}, {1, 2}, {2, 2}, {1, 4}, {2, -4},
       {1, -4}, {2, 2}, {1, -2}, {2, 4}, {1, 2}, {2, 2}});
  return w;
}

const std::vector<int>& injection_weave_word() {
  static const std::vector<int> w = powers_to_letters(
      {{2, 3}, {1, -2}, {2, -4}, {1, 2}, {2, 4}, {1, 2}, {2, -2}, {1, -2}, {2, -4},
       {1, -4}, {2, -2}, {1, 4}, {2, 2}, {1, -2}, {2, 2}, {1, 2}, {2, -2}, {1, 3}});
  return w;
}

const std::vector<int>& not_weave_word() {
  static const std::vector<int> w = powers_to_letters(
      {{1, -2}, {2, -4}, {1, 4}, {2, -2}, {1, 2}, {2, 2}, {1, -2}, {2, 4}, {1, -2},
       {2, 4}, {1, 2}, {2, -4}, {1, 2}, {2, -2}, {1, 2}, {2, -2}, {1, -2}});
  return w;
}

std::vector<KnownWeaveCheck> verify_known_weaves() {
  auto make_target = [](std::initializer_list<cd> entries) {
    CMatrix m(2, 2);
    std::copy(entries.begin(), entries.end(), m.data());
    return m;
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const CMatrix hadamard =
      make_target({inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2});
  const CMatrix phase = make_target({1.0, 0.0, 0.0, cd(0.0, -1.0)});
  const CMatrix ident = CMatrix::identity(2);
  const CMatrix not_gate = make_target({0.0, 1.0, 1.0, 0.0});

  struct Item {
    const char* name;
    const std::vector<int>* word;
    const CMatrix* target;
    double expected;
  };
  const Item items[] = {
      {"hadamard", &hadamard_weave_word(), &hadamard, 0.003},
      {"phase-neg-i", &phase_weave_word(), &phase, 0.0045},
      {"injection", &injection_weave_word(), &ident, 0.0015},
      {"not", &not_weave_word(), &not_gate, 0.00086},
  };

  std::vector<KnownWeaveCheck> out;
  for (const Item& it : items) {
    KnownWeaveCheck chk;
    chk.name = it.name;
    chk.expected = it.expected;
    chk.distance = phase_distance(word_matrix(CompileMode::braid, *it.word), *it.target);
    chk.ok = chk.distance >= 0.8 * it.expected && chk.distance <= 1.2 * it.expected;
    out.push_back(chk);
  }
  return out;
}

std::vector<int> translate_pair_warp(const std::vector<int>& elementary,
                                     int warp_pos, int weft_offset) {
  std::vector<int> out;
  out.reserve(2 * elementary.size());
  int g = warp_pos - 1 + weft_offset;  // wefts left of the pair
  for (int letter : elementary) {
    const int l = std::abs(letter);
    const int s = letter > 0 ? 1 : -1;
    const int window_pos = g - weft_offset + 1;
    if (l + 1 == window_pos) {
      // crossing with the weft on the warp's left
      if (g < 1) throw std::invalid_argument("pair warp fell off the left edge");
      out.push_back(s * g);
      out.push_back(s * (g + 1));
      --g;
    } else if (l == window_pos) {
      // crossing with the weft on the warp's right
      if (g > 2) throw std::invalid_argument("pair warp fell off the right edge");
      out.push_back(s * (g + 2));
      out.push_back(s * (g + 1));
      ++g;
    } else {
      throw std::invalid_argument("word is not a warp-only weave");
    }
  }
  return out;
}

std::vector<int> build_controlled(const std::vector<int>& q_weave_elementary,
                                  const std::vector<int>& phase_correction) {
  std::vector<int> word = translate_pair_warp(injection_weave_word(), 3, 1);
  std::vector<int> q = translate_pair_warp(q_weave_elementary, 2, 0);
  word.insert(word.end(), q.begin(), q.end());
  std::vector<int> uninject =
      translate_pair_warp(reverse_negate(injection_weave_word()), 1, 1);
  word.insert(word.end(), uninject.begin(), uninject.end());
  for (int letter : phase_correction) {
    const int mapped = (std::abs(letter) == 1) ? 4 : 5;
    word.push_back(letter > 0 ? mapped : -mapped);
  }
  return word;
}

double leakage(const CMatrix& m, std::size_t computational_dim) {
  if (m.rows() < computational_dim || m.cols() < computational_dim)
    throw std::invalid_argument("matrix smaller than the computational block");
  const CMatrix t = m.block(0, 0, computational_dim, computational_dim);
  const double norm_min = operator_norm_min(t);
  return std::max(0.0, 1.0 - norm_min * norm_min);
}

std::vector<int> expand_weave(const std::vector<int>& weave_units) {
  std::vector<int> out;
  out.reserve(2 * weave_units.size());
  for (int letter : weave_units) {
    out.push_back(letter);
    out.push_back(letter);
  }
  return out;
}

std::vector<int> reverse_negate(const std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(-*it);
  return out;
}

BraidCache::BraidCache(std::string path) : path_(std::move(path)) { load(); }

void BraidCache::load() {
  records_.clear();
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    CompiledWeave w;
    std::string mode, word;
    double pre = 0.0, pim = 0.0;
    if (!(is >> w.target_name >> mode >> word >> w.distance >> pre >> pim)) continue;
    w.mode = (mode == "braid") ? CompileMode::braid : CompileMode::weave;
    w.phase = cd(pre, pim);
    if (word != "-") {
      std::istringstream ws(word);
      std::string tok;
      while (std::getline(ws, tok, ',')) w.word.push_back(std::stoi(tok));
    }
    records_.push_back(std::move(w));
  }
}

std::optional<CompiledWeave> BraidCache::lookup(const std::string& name,
                                                double max_distance) const {
  const CompiledWeave* best = nullptr;
  for (const CompiledWeave& w : records_) {
    if (w.target_name != name || w.distance > max_distance) continue;
    if (!best || w.distance < best->distance) best = &w;
  }
  if (!best) return std::nullopt;
  return *best;
}

void BraidCache::append(const CompiledWeave& w) {
  records_.push_back(w);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write braid cache: " + path_);
  out << w.target_name << ' '
      << (w.mode == CompileMode::braid ? "braid" : "weave") << ' ';
  if (w.word.empty()) {
    out << '-';
  } else {
    for (std::size_t i = 0; i < w.word.size(); ++i) {
      if (i) out << ',';
      out << w.word[i];
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), " %.17g %.17g %.17g", w.distance, w.phase.real(),
                w.phase.imag());
  out << buf << '\n';
}

}  // namespace tqsim
