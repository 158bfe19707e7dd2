#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tqsim/ajl_quantum.hpp"
#include "tqsim/ajl_rep.hpp"
#include "tqsim/compiler.hpp"
#include "tqsim/fib_anyons.hpp"
#include "tqsim/io.hpp"
#include "tqsim/kauffman.hpp"
#include "tqsim/knot_table.hpp"
#include "tqsim/simulator.hpp"

namespace {

using namespace tqsim;

std::string default_cache_path() {
  if (const char* env = std::getenv("TQSIM_CACHE")) return env;
  return "tqsim_cache.txt";
}

ClosedKnot load_knot(const std::string& name, const std::string& file,
                     const std::string& closure_name) {
  const Closure closure = closure_name == "plat" ? Closure::plat : Closure::trace;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return knot_from_text(buf.str());
  }
  auto knot = builtin_knot(name, closure);
  if (!knot) {
    std::string names;
    for (const auto& e : builtin_knots()) names += e.name + " ";
    throw CLI::ValidationError("--knot", "unknown knot '" + name + "'; built-ins: " + names);
  }
  return *knot;
}

void parse_k_range(const std::string& range, int& k_lo, int& k_hi) {
  const auto colon = range.find(':');
  if (colon == std::string::npos) {
    k_lo = k_hi = std::stoi(range);
  } else {
    k_lo = std::stoi(range.substr(0, colon));
    k_hi = std::stoi(range.substr(colon + 1));
  }
  if (k_lo < 3 || k_hi < k_lo)
    throw CLI::ValidationError("--k", "expected <k> or <lo>:<hi> with 3 <= lo <= hi");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--out", "cannot write " + path);
  out << text;
}

// Re/Im entries, row-major, in the frozen basis order.
void write_matrix_csv(const std::string& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--dump-dir", "cannot write " + path);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m.at(i, j).real()) << ','
          << format_double(m.at(i, j).imag());
    }
    out << '\n';
  }
}

int cmd_oracle(const std::string& knot_name, const std::string& file,
               const std::string& closure, const std::string& k_spec,
               const std::string& out_path, const std::string& classical_path,
               const std::string& theta_prefix) {
  const ClosedKnot knot = load_knot(knot_name, file, closure);
  const LaurentPoly b = bracket(knot);
  const JonesPoly j = jones(knot);

  std::cout << "writhe:   " << j.writhe << "\n";
  std::cout << "bracket:  " << b.to_string_A() << "\n";
  std::cout << "          [" << b.exponent_list() << "]\n";
  std::cout << "jones:    " << j.in_A.to_string_t() << "\n";
  std::cout << "          [" << j.in_A.exponent_list() << "]\n";

  int k_lo = 3, k_hi = 13;
  if (!k_spec.empty()) parse_k_range(k_spec, k_lo, k_hi);
  CsvTable table;
  table.header = {"k", "Re", "Im"};
  for (int k = k_lo; k <= k_hi; ++k) {
    const cd v = eval_at_root(j, k);
    table.rows.push_back({std::to_string(k), format_double(v.real()),
                          format_double(v.imag())});
  }
  const std::string csv = csv_format(table);
  std::cout << csv;
  write_output(out_path, csv);

  if (!classical_path.empty()) {
    CsvTable cls;
    cls.header = {"k", "Re", "Im", "absV"};
    for (int k = k_lo; k <= k_hi; ++k) {
      const cd v = classical_ajl(knot, k);
      cls.rows.push_back({std::to_string(k), format_double(v.real()),
                          format_double(v.imag()), format_double(std::abs(v))});
    }
    write_output(classical_path, csv_format(cls));
  }

  if (!theta_prefix.empty()) {
    const int n = std::max(knot.braid.strands, 2);
    for (int k = k_lo; k <= k_hi; ++k)
      for (int jj = 1; jj < n; ++jj)
        write_matrix_csv(theta_prefix + "-n" + std::to_string(n) + "-j" +
                             std::to_string(jj) + "-k" + std::to_string(k) + ".csv",
                         theta_generator(AJLParams(n, k), jj));
  }
  return 0;
}

std::optional<CMatrix> named_target(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (name == "hadamard") {
    CMatrix m(2, 2);
    m.at(0, 0) = inv_sqrt2;
    m.at(0, 1) = inv_sqrt2;
    m.at(1, 0) = inv_sqrt2;
    m.at(1, 1) = -inv_sqrt2;
    return m;
  }
  if (name == "phase") return CMatrix::diag({cd(1, 0), cd(0, -1)});
  if (name == "not") {
    CMatrix m(2, 2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
  }
  if (name == "sigma1") return fib_single_qubit_generators().first;
  if (name == "sigma2") return fib_single_qubit_generators().second;
  if (name.rfind("theta1-k", 0) == 0) {
    const int k = std::stoi(name.substr(8));
    return theta_generator(AJLParams(2, k), 1);
  }
  if (name.rfind("theta2blk-k", 0) == 0) {
    const int k = std::stoi(name.substr(11));
    const AJLParams p(3, k);
    return endpoint_block(enumerate_paths(p), theta_generator(p, 2), 2);
  }
  return std::nullopt;
}

CMatrix target_from_file(const std::string& path) {
  // Four lines of "Re Im", row-major.
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--target", "cannot open " + path);
  CMatrix m(2, 2);
  for (int i = 0; i < 4; ++i) {
    double re = 0.0, im = 0.0;
    if (!(in >> re >> im))
      throw CLI::ValidationError("--target", "matrix file needs four 'Re Im' lines");
    m.data()[i] = cd(re, im);
  }
  return m;
}

int cmd_compile(const std::string& target_name, const std::string& mode_name,
                int max_length, int max_groups, const std::string& cache_path,
                int threads) {
  CMatrix target(2, 2);
  if (auto named = named_target(target_name)) {
    target = *named;
  } else {
    target = target_from_file(target_name);
  }

  SearchConfig cfg;
  cfg.mode = mode_name == "braid" ? CompileMode::braid : CompileMode::weave;
  cfg.threads = threads;
  if (cfg.mode == CompileMode::weave) {
    // Weave lengths are quoted the way the braidwords are printed: as power
    // groups sigma_i^{+-2} / sigma_i^{+-4}. A group is one or two squared
    // generators.
    cfg.max_groups = max_groups > 0 ? max_groups : max_length;
    cfg.max_length = 2 * cfg.max_groups;
  } else {
    cfg.max_length = max_length;
    cfg.max_groups = max_groups;
  }

  const CompiledWeave w = search(target, cfg, target_name);

  std::cout << "target:   " << target_name << "\n";
  std::cout << "mode:     " << mode_name << "\n";
  std::cout << "word:     ";
  for (std::size_t i = 0; i < w.word.size(); ++i)
    std::cout << (i ? " " : "") << w.word[i];
  std::cout << "\n";
  if (cfg.mode == CompileMode::weave) {
    std::cout << "elementary:";
    for (int letter : expand_weave(w.word)) std::cout << ' ' << letter;
    std::cout << "\n";
  }
  std::cout << "length:   " << w.word.size() << "\n";
  std::cout << "distance: " << format_double(w.distance) << "\n";
  std::cout << "phase:    " << format_double(w.phase.real()) << " "
            << format_double(w.phase.imag()) << "\n";

  BraidCache cache(cache_path);
  cache.append(w);
  std::cout << "cached:   " << cache.path() << "\n";
  return 0;
}

// One line per word applied while preparing the real-component circuit of
// the first k: kind, pos, length, leakage.
void write_trace_log(const std::string& path, const ClosedKnot& knot, int k,
                     GateInventory& gates) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--trace-log", "cannot write " + path);
  out << "kind,pos,length,leakage\n";
  QuantumRegister reg(2, 1);
  reg.set_trace([&](const TraceEvent& e) {
    out << e.kind << ',' << e.pos << ',' << e.word_length << ','
        << format_double(e.leakage) << '\n';
  });
  std::vector<int> q_weave, corrections;
  for (int letter : knot.braid.letters) {
    auto g = gates.letter_gate(knot.braid.strands, knot.closure, k, letter);
    q_weave.insert(q_weave.end(), g.weave.begin(), g.weave.end());
    corrections.insert(corrections.end(), g.correction.begin(), g.correction.end());
  }
  reg.braid_one(gates.hadamard(), 1);
  reg.braid_two(build_controlled(q_weave, corrections), 1);
  reg.braid_one(gates.hadamard(), 1);
}

int cmd_ajl(const std::string& knot_name, const std::string& file,
            const std::string& closure, const std::string& k_spec, long long iters,
            std::uint64_t seed, const std::string& out_path,
            const std::string& cache_path, const std::string& trace_path) {
  const ClosedKnot knot = load_knot(knot_name, file, closure);
  int k_lo = 4, k_hi = 13;
  parse_k_range(k_spec, k_lo, k_hi);

  BraidCache cache(cache_path);
  GateInventory gates(cache);
  if (!trace_path.empty()) write_trace_log(trace_path, knot, k_lo, gates);

  CsvTable table;
  table.header = {"k",        "Re_est",   "Im_est",       "Re_lim", "Im_lim",
                  "Re_exact", "Im_exact", "ci_halfwidth", "ops"};
  for (int k = k_lo; k <= k_hi; ++k) {
    const AJLPoint p = run_ajl(knot, k, iters, seed, gates);
    table.rows.push_back({std::to_string(k), format_double(p.estimate.real()),
                          format_double(p.estimate.imag()),
                          format_double(p.limit.real()),
                          format_double(p.limit.imag()),
                          format_double(p.exact.real()),
                          format_double(p.exact.imag()),
                          format_double(p.ci_halfwidth), std::to_string(p.ops)});
    std::cout << "k=" << k << " estimate=(" << format_double(p.estimate.real()) << ", "
              << format_double(p.estimate.imag()) << ") exact=("
              << format_double(p.exact.real()) << ", " << format_double(p.exact.imag())
              << ") ci=" << format_double(p.ci_halfwidth) << " ops=" << p.ops << "\n";
  }
  const std::string csv = csv_format(table);
  write_output(out_path, csv);
  if (out_path.empty()) std::cout << csv;
  return 0;
}

// Per-shot CSV: shot index, measured bitstring or ERROR. Replays the
// Fibonacci run through the register shot by shot.
void write_shot_csv(const std::string& path, const ClosedKnot& knot, long long iters,
                    std::uint64_t seed) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--shots-out", "cannot write " + path);
  out << "shot,outcome\n";
  std::vector<int> word;
  for (int g : knot.braid.letters) {
    const int j = std::abs(g) == 3 ? 1 : std::abs(g);
    word.push_back(g > 0 ? j : -j);
  }
  for (long long s = 0; s < iters; ++s) {
    QuantumRegister reg(1, mix_seed(seed, {static_cast<std::uint64_t>(s)}));
    reg.braid_one(word, 1);
    out << s << ',' << reg.measure().to_string() << '\n';
  }
}

int cmd_exact(const std::string& knot_name, const std::string& file,
              const std::string& model_name, long long iters, std::uint64_t seed,
              const std::string& out_path, const std::string& shots_path) {
  const ClosedKnot knot = load_knot(knot_name, file, "plat");
  const AnyonModel model =
      model_name == "ising" ? AnyonModel::ising : AnyonModel::fibonacci;
  const ExactResult r = run_exact(knot, model, iters, seed);
  if (!shots_path.empty() && model == AnyonModel::fibonacci)
    write_shot_csv(shots_path, knot, std::min(iters, 100000LL), seed);

  std::cout << "model:      " << model_name << "\n";
  std::cout << "iterations: " << iters << "\n";
  std::cout << "magnitude:  " << format_double(r.magnitude) << " ("
            << format_double(r.lo) << ", " << format_double(r.hi) << ")\n";
  std::cout << "exact:      " << format_double(r.exact) << "\n";
  std::cout << "limit:      " << format_double(r.limit) << "\n";
  std::cout << "ops:        " << r.ops << "\n";

  CsvTable table;
  table.header = {"magnitude", "lo", "hi", "exact", "limit", "ops"};
  table.rows.push_back({format_double(r.magnitude), format_double(r.lo),
                        format_double(r.hi), format_double(r.exact),
                        format_double(r.limit), std::to_string(r.ops)});
  write_output(out_path, csv_format(table));
  return 0;
}

int cmd_verify(const std::string& dump_dir) {
  if (!dump_dir.empty()) {
    auto [s1, s2] = fib_single_qubit_generators();
    write_matrix_csv(dump_dir + "/sigma1.csv", s1);
    write_matrix_csv(dump_dir + "/sigma2.csv", s2);
    auto [f1, f2] = fib_single_qubit_generators_full();
    write_matrix_csv(dump_dir + "/sigma1_full3.csv", f1);
    write_matrix_csv(dump_dir + "/sigma2_full3.csv", f2);
    const auto twoq = fib_two_qubit_generators();
    for (int i = 0; i < 5; ++i)
      write_matrix_csv(dump_dir + "/twoqubit_sigma" + std::to_string(i + 1) + ".csv",
                       twoq[i]);
    auto [i1, i2] = ising_generators_n3();
    write_matrix_csv(dump_dir + "/ising_sigma1.csv", i1);
    write_matrix_csv(dump_dir + "/ising_sigma2.csv", i2);
    std::cout << "generator CSV dumps written to " << dump_dir << "\n";
  }

  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  };

  {
    const double residual = FibFRData::pentagon_residual();
    report("pentagon identity", residual < 1e-12, "residual " + format_double(residual));
  }
  {
    auto [s1, s2] = fib_single_qubit_generators();
    report("single-qubit braid relations", verify_braid_relations({s1, s2}), "");
    const auto twoq = fib_two_qubit_generators();
    bool unitary = true;
    for (const auto& g : twoq) unitary = unitary && g.unitarity_defect() < 1e-12;
    report("two-qubit generators unitary", unitary, "");
    report("two-qubit braid relations",
           verify_braid_relations({twoq[0], twoq[1], twoq[2], twoq[3], twoq[4]}), "");
    auto [i1, i2] = ising_generators_n3();
    report("ising braid relations", verify_braid_relations({i1, i2}), "");
  }
  {
    bool all = true;
    for (int n = 2; n <= 4 && all; ++n)
      for (int k = 3; k <= 13 && all; ++k) {
        std::vector<CMatrix> gens;
        for (int j = 1; j < n; ++j) {
          const CMatrix th = theta_generator(AJLParams(n, k), j);
          if (th.unitarity_defect() >= 1e-12) all = false;
          gens.push_back(th);
        }
        if (!verify_braid_relations(gens)) all = false;
      }
    report("AJL matrices unitary + braid relations (n<=4, k=3..13)", all, "");
  }
  {
    const auto fib4 = fib_four_anyon_generators();
    bool match = true;
    for (int j = 1; j <= 3; ++j)
      match = match && theta_generator(AJLParams(4, 5), j)
                           .approx_equal(fib4[j - 1] * cd(-1, 0), 1e-12);
    report("Theta_j(4,5) = -sigma_j", match, "");
    auto [i1, i2] = ising_generators_n3();
    const bool ising_match =
        theta_generator(AJLParams(3, 4), 1).approx_equal(i1.adjoint(), 1e-12) &&
        theta_generator(AJLParams(3, 4), 2).approx_equal(i2.adjoint(), 1e-12);
    report("Theta_j(3,4) = inverse Ising sigma_j", ising_match, "");
  }
  for (const auto& chk : verify_known_weaves()) {
    report("published weave: " + chk.name, chk.ok,
           "distance " + format_double(chk.distance) + " expected ~" +
               format_double(chk.expected));
  }
  {
    const std::vector<int> word = build_controlled(not_weave_word(), {});
    const auto gens = fib_two_qubit_generators();
    CMatrix m = CMatrix::identity(13);
    for (int letter : word) {
      const CMatrix& g = gens[std::abs(letter) - 1];
      m = m * (letter > 0 ? g : g.adjoint());
    }
    const double leak = leakage(m, 4);
    report("controlled-iNOT leakage ~ 6e-6", leak > 3e-6 && leak < 1.2e-5,
           format_double(leak));
  }
  {
    bool all = true;
    double worst = 0.0;
    for (const auto& e : builtin_knots()) {
      for (Closure c : {Closure::trace, Closure::plat}) {
        const auto kn = builtin_knot(e.name, c);
        for (int k = 3; k <= 13; ++k) {
          const double diff =
              std::abs(classical_ajl(*kn, k) - eval_at_root(jones(*kn), k));
          worst = std::max(worst, diff);
          if (diff >= 1e-10) all = false;
        }
      }
    }
    report("classical AJL matches the Kauffman oracle", all,
           "worst " + format_double(worst));
  }

  std::cout << (failures == 0 ? "verify: all checks passed\n"
                              : "verify: " + std::to_string(failures) + " failures\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological quantum computation with Fibonacci anyons: braid "
               "compilation, simulation, and Jones polynomial evaluation"};
  app.require_subcommand(1);

  std::string knot_name = "hopf+", knot_file, closure = "trace", k_spec, out_path;
  std::string cache_path = default_cache_path();

  auto* oracle = app.add_subcommand(
      "oracle", "Exact Kauffman bracket / Jones polynomial of a knot");
  auto* oracle_knot = oracle->add_option("--knot", knot_name, "built-in knot name");
  oracle->add_option("--file", knot_file, "braidword file")->excludes(oracle_knot);
  oracle->add_option("--closure", closure, "trace|plat")
      ->check(CLI::IsMember({"trace", "plat"}));
  oracle->add_option("--k", k_spec, "root index or range lo:hi (default 3:13)");
  oracle->add_option("--out", out_path, "CSV output path");
  std::string classical_path, theta_prefix;
  oracle->add_option("--classical-csv", classical_path,
                     "write the path-model evaluation (k, Re, Im, absV)");
  oracle->add_option("--theta-csv", theta_prefix,
                     "write Theta_j(n,k) matrices as <prefix>-n<n>-j<j>-k<k>.csv");

  std::string target = "hadamard", mode = "weave";
  int max_length = 13, max_groups = 0, threads = 0;
  auto* compile = app.add_subcommand(
      "compile", "Search for a braid or weave approximating a 2x2 unitary");
  compile->add_option("--target", target,
                      "hadamard|phase|not|sigma1|sigma2|theta1-k<k>|theta2blk-k<k> "
                      "or a matrix file (four 'Re Im' lines)");
  compile->add_option("--mode", mode, "braid|weave")
      ->check(CLI::IsMember({"braid", "weave"}));
  compile->add_option("--max-length", max_length,
                      "maximum length: elementary braids for --mode braid, "
                      "power groups for --mode weave")
      ->check(CLI::PositiveNumber);
  compile->add_option("--max-groups", max_groups,
                      "explicit cap on power groups (weave mode)");
  compile->add_option("--threads", threads, "search worker threads (0 = auto)");
  compile->add_option("--cache", cache_path, "braid cache path");

  long long iters = 10000;
  std::uint64_t seed = 0;
  auto* ajl = app.add_subcommand(
      "ajl", "Quantum AJL evaluation of the Jones polynomial at roots of unity");
  auto* ajl_knot = ajl->add_option("--knot", knot_name, "built-in knot name");
  ajl->add_option("--file", knot_file, "braidword file")->excludes(ajl_knot);
  ajl->add_option("--closure", closure, "trace|plat")
      ->check(CLI::IsMember({"trace", "plat"}));
  ajl->add_option("--k", k_spec, "root index or range lo:hi")->required();
  ajl->add_option("--iters", iters, "Hadamard-test iterations per component")
      ->check(CLI::PositiveNumber);
  ajl->add_option("--seed", seed, "master RNG seed")->required();
  ajl->add_option("--out", out_path, "CSV output path");
  ajl->add_option("--cache", cache_path, "braid cache path");
  std::string trace_path;
  ajl->add_option("--trace-log", trace_path,
                  "write a per-word run trace (kind,pos,length,leakage)");

  std::string model = "fib";
  auto* exact = app.add_subcommand(
      "exact", "Exact anyonic algorithm for |V| at k=5 (Fibonacci) or k=4 (Ising)");
  auto* exact_knot = exact->add_option("--knot", knot_name, "built-in knot name");
  exact->add_option("--file", knot_file, "braidword file (plat, 4 strands)")
      ->excludes(exact_knot);
  exact->add_option("--model", model, "fib|ising")
      ->check(CLI::IsMember({"fib", "ising"}));
  exact->add_option("--iters", iters, "measurement shots")->check(CLI::PositiveNumber);
  exact->add_option("--seed", seed, "master RNG seed")->required();
  exact->add_option("--out", out_path, "CSV output path");
  std::string shots_path;
  exact->add_option("--shots-out", shots_path,
                    "write per-shot outcomes (shot,bitstring or ERROR)");

  auto* verify = app.add_subcommand(
      "verify", "Run the identity, correspondence and published-weave checks");
  std::string dump_dir;
  verify->add_option("--dump-dir", dump_dir,
                     "also dump every braid generator as Re/Im CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("oracle"))
      return cmd_oracle(knot_name, knot_file, closure, k_spec, out_path,
                        classical_path, theta_prefix);
    if (app.got_subcommand("compile"))
      return cmd_compile(target, mode, max_length, max_groups, cache_path, threads);
    if (app.got_subcommand("ajl"))
      return cmd_ajl(knot_name, knot_file, closure, k_spec, iters, seed, out_path,
                     cache_path, trace_path);
    if (app.got_subcommand("exact"))
      return cmd_exact(knot_name, knot_file, model, iters, seed, out_path,
                       shots_path);
    if (app.got_subcommand("verify")) return cmd_verify(dump_dir);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
