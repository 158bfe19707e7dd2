#include "tqsim/ajl_rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqsim {

namespace {
const double kPi = std::acos(-1.0);
}

AJLParams::AJLParams(int n_, int k_) : n(n_), k(k_) {
  if (n < 2) throw std::invalid_argument("AJL representation needs n >= 2");
  if (k < 3) throw std::invalid_argument("AJL representation needs k >= 3");
}

cd AJLParams::t() const { return std::exp(cd(0.0, 2.0 * kPi / k)); }

cd AJLParams::a() const {
  return cd(0.0, 1.0) * std::exp(cd(0.0, -kPi / (2.0 * k)));
}

double AJLParams::d() const { return 2.0 * std::cos(kPi / k); }

int PathBasis::index_of(const std::string& path) const {
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths[i] == path) return static_cast<int>(i);
  return -1;
}

double PathBasis::lambda_sum() const {
  double s = 0.0;
  for (double l : lambdas) s += l;
  return s;
}

PathBasis enumerate_paths(const AJLParams& params) {
  PathBasis basis;
  basis.n = params.n;
  basis.k = params.k;

  struct Item {
    std::string path;
    int endpoint;
  };
  std::vector<Item> items;
  for (int mask = 0; mask < (1 << params.n); ++mask) {
    int vertex = 1;
    std::string path(params.n, '0');
    bool ok = true;
    for (int i = 0; i < params.n && ok; ++i) {
      const bool right = mask & (1 << i);
      path[i] = right ? '1' : '0';
      vertex += right ? 1 : -1;
      ok = vertex >= 1 && vertex <= params.k - 1;
    }
    if (ok) items.push_back({path, vertex});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.endpoint != b.endpoint ? a.endpoint < b.endpoint : a.path < b.path;
  });
  for (const Item& it : items) {
    basis.paths.push_back(it.path);
    basis.endpoints.push_back(it.endpoint);
    basis.lambdas.push_back(std::sin(kPi * it.endpoint / params.k));
  }
  return basis;
}

namespace {

double lambda(int l, int k) {
  if (l <= 0 || l >= k) return 0.0;  // lambda_0 = lambda_k = 0
  return std::sin(kPi * l / k);
}

}  // namespace

CMatrix phi_generator(const AJLParams& params, int j) {
  if (j < 1 || j >= params.n) throw std::invalid_argument("phi index out of range");
  const PathBasis basis = enumerate_paths(params);
  const int k = params.k;
  CMatrix phi(basis.dim(), basis.dim());

  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const std::string& p = basis.paths[col];
    // Endpoint of the prefix of length j-1 (vertex before step j).
    int l = 1;
    for (int i = 0; i < j - 1; ++i) l += (p[i] == '1') ? 1 : -1;

    const char s1 = p[j - 1];
    const char s2 = p[j];
    if (s1 == s2) continue;  // '00' and '11' rows are annihilated

    if (s1 == '0' && s2 == '1') {
      phi.at(col, col) += lambda(l - 1, k) / lambda(l, k);
      const double off = std::sqrt(lambda(l - 1, k) * lambda(l + 1, k)) / lambda(l, k);
      if (off != 0.0) {
        std::string q = p;
        q[j - 1] = '1';
        q[j] = '0';
        const int row = basis.index_of(q);
        if (row < 0) throw std::runtime_error("phi image left the path basis");
        phi.at(row, col) += off;
      }
    } else {  // '10'
      phi.at(col, col) += lambda(l + 1, k) / lambda(l, k);
      const double off = std::sqrt(lambda(l - 1, k) * lambda(l + 1, k)) / lambda(l, k);
      if (off != 0.0) {
        std::string q = p;
        q[j - 1] = '0';
        q[j] = '1';
        const int row = basis.index_of(q);
        if (row < 0) throw std::runtime_error("phi image left the path basis");
        phi.at(row, col) += off;
      }
    }
  }
  return phi;
}

CMatrix theta_generator(const AJLParams& params, int j, bool inverse) {
  const CMatrix phi = phi_generator(params, j);
  const cd a = params.a();
  const CMatrix ident = CMatrix::identity(phi.rows());
  // rho_A(b_j) = A Phi_j + A^-1 I ; rho_A(b_j^-1) = A I + A^-1 Phi_j.
  if (!inverse) return phi * a + ident * (cd(1.0, 0.0) / a);
  return phi * (cd(1.0, 0.0) / a) + ident * a;
}

cd markov_trace(const PathBasis& basis, const CMatrix& x) {
  if (x.rows() != basis.dim() || x.cols() != basis.dim())
    throw std::invalid_argument("matrix does not match the path basis");
  cd sum(0.0, 0.0);
  for (std::size_t i = 0; i < basis.dim(); ++i)
    sum += basis.lambdas[i] * x.at(i, i);
  return sum / basis.lambda_sum();
}

CMatrix ajl_word_matrix(const AJLParams& params, const BraidWord& word) {
  const PathBasis basis = enumerate_paths(params);
  CMatrix m = CMatrix::identity(basis.dim());
  std::vector<CMatrix> cache_pos(params.n), cache_neg(params.n);
  for (int g : word.letters) {
    const int j = std::abs(g);
    CMatrix& slot = (g > 0) ? cache_pos[j] : cache_neg[j];
    if (slot.rows() == 0) slot = theta_generator(params, j, g < 0);
    m = m * slot;
  }
  return m;
}

cd classical_ajl(const ClosedKnot& knot, int k) {
  const int n = knot.braid.strands;
  const AJLParams params(std::max(n, 2), k);
  const PathBasis basis = enumerate_paths(params);
  const CMatrix x = ajl_word_matrix(params, knot.braid);

  cd bracket_value;
  if (knot.closure == Closure::trace) {
    cd tr = markov_trace(basis, x);
    bracket_value = tr * std::pow(params.d(), n - 1);
  } else {
    std::string alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(i % 2 == 0 ? '1' : '0');
    const int idx = basis.index_of(alpha);
    if (idx < 0) throw std::runtime_error("plat cap state missing from path basis");
    bracket_value = x.at(idx, idx) * std::pow(params.d(), n / 2 - 1);
  }

  const int w = writhe(knot);
  const cd a = params.a();
  const cd base = -(a * a * a);
  cd factor(1.0, 0.0);
  for (int i = 0; i < std::abs(w); ++i) factor *= (w > 0) ? cd(1.0, 0.0) / base : base;
  return factor * bracket_value;
}

CMatrix endpoint_block(const PathBasis& basis, const CMatrix& x, int l) {
  std::size_t first = basis.dim(), count = 0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    if (basis.endpoints[i] == l) {
      if (count == 0) first = i;
      ++count;
    }
  }
  if (count == 0) throw std::invalid_argument("no paths with the requested endpoint");
  return x.block(first, first, count, count);
}

}  // namespace tqsim
