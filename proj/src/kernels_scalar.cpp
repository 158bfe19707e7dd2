#include "tqsim/kernels.hpp"

namespace tqsim::kern {
namespace {

void cgemm_scalar(const cd* a, const cd* b, cd* c,
                  std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cd(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const cd* arow = a + i * k;
    cd* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cd av = arow[l];
      if (av == cd(0.0, 0.0)) continue;
      const cd* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void cgemv_scalar(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const cd* arow = a + i * n;
    cd acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

void cmul2x2_scalar(const cd* a, const cd* b, cd* c) {
  c[0] = a[0] * b[0] + a[1] * b[2];
  c[1] = a[0] * b[1] + a[1] * b[3];
  c[2] = a[2] * b[0] + a[3] * b[2];
  c[3] = a[2] * b[1] + a[3] * b[3];
}

double abs2_sum_scalar(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

double abs2_cumsum_scalar(const cd* x, double* out, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    out[i] = s;
  }
  return s;
}

}  // namespace

const detail::Ops detail::scalar_ops = {
    cgemm_scalar, cgemv_scalar, cmul2x2_scalar, abs2_sum_scalar, abs2_cumsum_scalar};

}  // namespace tqsim::kern
