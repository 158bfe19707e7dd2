#include "tqsim/fib_anyons.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tqsim {

namespace {

const double kPi = std::acos(-1.0);

cd polar1(double angle) { return std::exp(cd(0.0, angle)); }

}  // namespace

bool FibFRData::fuse_allowed(int a, int b, int c) {
  if (a == 0) return c == b;
  if (b == 0) return c == a;
  return c == 0 || c == 1;  // tau x tau = 0 + tau
}

double FibFRData::f_coeff(int a, int b, int c, int d, int i, int j) {
  const bool left_ok = fuse_allowed(a, b, i) && fuse_allowed(i, c, d);
  const bool right_ok = fuse_allowed(b, c, j) && fuse_allowed(a, j, d);
  if (!left_ok || !right_ok) return 0.0;
  if (a == 1 && b == 1 && c == 1 && d == 1) {
    const double inv_phi = 1.0 / kGoldenRatio;
    const double inv_sqrt_phi = 1.0 / std::sqrt(kGoldenRatio);
    const double f[2][2] = {{inv_phi, inv_sqrt_phi}, {inv_sqrt_phi, -inv_phi}};
    return f[i][j];
  }
  return 1.0;
}

cd FibFRData::r_coeff(int c, bool inverse) {
  const cd r = (c == 0) ? polar1(-4.0 * kPi / 5.0) : polar1(3.0 * kPi / 5.0);
  return inverse ? std::conj(r) : r;
}

double FibFRData::pentagon_residual() {
  double worst = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const double lhs = f_coeff(1, 1, c, 1, d, a) * f_coeff(a, 1, 1, 1, c, b);
          double rhs = 0.0;
          for (int e = 0; e < 2; ++e)
            rhs += f_coeff(1, 1, 1, d, c, e) * f_coeff(1, e, 1, 1, d, b) *
                   f_coeff(1, 1, 1, b, e, a);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

namespace {

bool sequential_valid(const std::string& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == '0' && s[i + 1] == '0') return false;
  return true;
}

}  // namespace

FusionBasis FusionBasis::enumerate(int n_anyons, std::optional<int> total_charge,
                                   const std::vector<std::string>& order) {
  if (n_anyons < 2) throw std::invalid_argument("need at least two anyons");
  const int sites = n_anyons - 1;
  std::vector<std::string> found;
  for (int mask = 0; mask < (1 << sites); ++mask) {
    std::string s(sites, '0');
    for (int i = 0; i < sites; ++i)
      if (mask & (1 << i)) s[i] = '1';
    if (!sequential_valid(s)) continue;
    if (total_charge && (s.back() - '0') != *total_charge) continue;
    found.push_back(s);
  }
  std::sort(found.begin(), found.end());

  FusionBasis basis;
  basis.n_anyons = n_anyons;
  if (order.empty()) {
    basis.states = std::move(found);
  } else {
    if (order.size() != found.size())
      throw std::invalid_argument("basis order list has wrong size");
    std::vector<std::string> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != found)
      throw std::invalid_argument("basis order list is not a permutation of the states");
    basis.states = order;
  }
  return basis;
}

int FusionBasis::index_of(const std::string& state) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == state) return static_cast<int>(i);
  return -1;
}

namespace {

using Superposition = std::map<std::string, cd>;

int label_at(const std::string& s, int site) {
  // Site -1 is the first anyon, which always carries charge 1.
  if (site < 0) return 1;
  return s[site] - '0';
}

Superposition apply_f(const Superposition& v, int site, int a_site, int d_site,
                      bool to_pair_basis) {
  Superposition out;
  for (const auto& [s, amp] : v) {
    const int a = label_at(s, a_site);
    const int d = label_at(s, d_site);
    const int cur = s[site] - '0';
    for (int next = 0; next < 2; ++next) {
      const double coeff = to_pair_basis ? FibFRData::f_coeff(a, 1, 1, d, cur, next)
                                         : FibFRData::f_coeff(a, 1, 1, d, next, cur);
      if (coeff == 0.0) continue;
      std::string t = s;
      t[site] = static_cast<char>('0' + next);
      out[t] += amp * coeff;
    }
  }
  return out;
}

Superposition apply_r(const Superposition& v, int site, bool inverse) {
  Superposition out;
  for (const auto& [s, amp] : v)
    out[s] += amp * FibFRData::r_coeff(s[site] - '0', inverse);
  return out;
}

// Exchange of anyons (m, m+1), applied to a single superposition.
Superposition apply_exchange(const Superposition& v, int m, bool inverse) {
  if (m == 1) return apply_r(v, 0, inverse);
  const int site = m - 2;
  Superposition w = apply_f(v, site, site - 1, site + 1, true);
  w = apply_r(w, site, inverse);
  return apply_f(w, site, site - 1, site + 1, false);
}

}  // namespace

FusionVector apply_f_move(const FusionBasis& basis, const FusionVector& v,
                          int site, int a_label_site, int d_label_site) {
  Superposition sup;
  for (std::size_t i = 0; i < basis.states.size(); ++i)
    if (v[i] != cd(0.0, 0.0)) sup[basis.states[i]] += v[i];
  sup = apply_f(sup, site, a_label_site, d_label_site, true);
  FusionVector out(basis.dim(), cd(0.0, 0.0));
  for (const auto& [s, amp] : sup) {
    const int idx = basis.index_of(s);
    if (idx < 0) throw std::runtime_error("F move left the stored basis");
    out[idx] = amp;
  }
  return out;
}

CMatrix exchange_matrix(const FusionBasis& basis, int m, bool inverse) {
  if (m < 1 || m >= basis.n_anyons)
    throw std::invalid_argument("exchange index out of range");
  const std::size_t dim = basis.dim();
  CMatrix out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Superposition v{{basis.states[col], cd(1.0, 0.0)}};
    v = apply_exchange(v, m, inverse);
    for (const auto& [s, amp] : v) {
      if (std::abs(amp) < 1e-15) continue;
      const int row = basis.index_of(s);
      if (row < 0) throw std::runtime_error("exchange left the fusion basis");
      out.at(row, col) = amp;
    }
  }
  return out;
}

std::pair<CMatrix, CMatrix> fib_single_qubit_generators() {
  const FusionBasis basis = FusionBasis::enumerate(3, 1, {"01", "11"});
  return {exchange_matrix(basis, 1, false), exchange_matrix(basis, 2, false)};
}

std::pair<CMatrix, CMatrix> fib_single_qubit_generators_full() {
  const FusionBasis basis = FusionBasis::enumerate(3, std::nullopt, {"01", "11", "10"});
  return {exchange_matrix(basis, 1, false), exchange_matrix(basis, 2, false)};
}

const std::vector<std::string>& two_qubit_basis_order() {
  static const std::vector<std::string> order = {
      "0101010", "1101010", "0101110", "1101110",  // |00>, |01>, |10>, |11>
      "1011010", "1011110", "1010110", "0111010", "0111110",
      "0110110", "1111010", "1111110", "1110110"};
  return order;
}

std::array<CMatrix, 5> fib_two_qubit_generators() {
  const FusionBasis basis = FusionBasis::enumerate(8, 0, two_qubit_basis_order());
  const CMatrix e3 = exchange_matrix(basis, 3, false);
  const CMatrix e3_inv = exchange_matrix(basis, 3, true);
  const CMatrix e4 = exchange_matrix(basis, 4, false);
  // The inter-qubit braid passes in front of the inert fourth anyon:
  // exchange 3-4, then 4-5, then undo 3-4.
  const CMatrix sigma3 = e3_inv * e4 * e3;
  return {exchange_matrix(basis, 1, false), exchange_matrix(basis, 2, false), sigma3,
          exchange_matrix(basis, 5, false), exchange_matrix(basis, 6, false)};
}

std::array<CMatrix, 3> fib_four_anyon_generators() {
  // Ordered to line up with the AJL path basis at k = 5.
  const FusionBasis basis =
      FusionBasis::enumerate(4, std::nullopt, {"010", "110", "011", "111", "101"});
  return {exchange_matrix(basis, 1, false), exchange_matrix(basis, 2, false),
          exchange_matrix(basis, 3, false)};
}

CMatrix IsingFRData::f_matrix() {
  CMatrix f(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  f.at(0, 0) = s;
  f.at(0, 1) = s;
  f.at(1, 0) = s;
  f.at(1, 1) = -s;
  return f;
}

CMatrix IsingFRData::r_matrix() {
  CMatrix r(2, 2);
  r.at(0, 0) = polar1(-kPi / 8.0);
  r.at(1, 1) = polar1(-kPi / 8.0) * cd(0.0, 1.0);
  return r;
}

std::pair<CMatrix, CMatrix> ising_generators_n3() {
  const CMatrix f = IsingFRData::f_matrix();
  const CMatrix r = IsingFRData::r_matrix();
  return {r, f * r * f};
}

}  // namespace tqsim
