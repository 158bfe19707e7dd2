#include "tqsim/kernels.hpp"

#include <immintrin.h>

// Complex multiply-accumulate on packed (re, im) pairs: with ar/ai broadcast
// from one operand, acc += a*b is
//   re = ar*br - ai*bi,  im = ar*bi + ai*br
// which maps onto fmaddsub(ar, b, ai * swap(b)).
namespace tqsim::kern {
namespace {

inline __m256d cmadd(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap)));
}

void cgemm_avx2(const cd* a, const cd* b, cd* c,
                std::size_t m, std::size_t k, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    const cd* arow = a + i * k;
    cd* crow = c + i * n;
    for (std::size_t j = 0; j < n2; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t l = 0; l < k; ++l) {
        const __m256d ar = _mm256_set1_pd(arow[l].real());
        const __m256d ai = _mm256_set1_pd(arow[l].imag());
        const __m256d bv =
            _mm256_loadu_pd(reinterpret_cast<const double*>(b + l * n + j));
        acc = cmadd(acc, ar, ai, bv);
      }
      _mm256_storeu_pd(reinterpret_cast<double*>(crow + j), acc);
    }
    if (n2 != n) {
      const std::size_t j = n - 1;
      cd acc(0.0, 0.0);
      for (std::size_t l = 0; l < k; ++l) acc += arow[l] * b[l * n + j];
      crow[j] = acc;
    }
  }
}

void cgemv_avx2(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    const cd* arow = a + i * n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n2; j += 2) {
      // Here the broadcast operand is x, accumulated over row pairs.
      const __m256d av = _mm256_loadu_pd(reinterpret_cast<const double*>(arow + j));
      const __m256d xr = _mm256_setr_pd(x[j].real(), x[j].real(),
                                        x[j + 1].real(), x[j + 1].real());
      const __m256d xi = _mm256_setr_pd(x[j].imag(), x[j].imag(),
                                        x[j + 1].imag(), x[j + 1].imag());
      acc = cmadd(acc, xr, xi, av);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    cd sum(lanes[0] + lanes[2], lanes[1] + lanes[3]);
    if (n2 != n) sum += arow[n - 1] * x[n - 1];
    y[i] = sum;
  }
}

void cmul2x2_avx2(const cd* a, const cd* b, cd* c) {
  const __m256d b0 = _mm256_loadu_pd(reinterpret_cast<const double*>(b));
  const __m256d b1 = _mm256_loadu_pd(reinterpret_cast<const double*>(b + 2));
  for (int i = 0; i < 2; ++i) {
    __m256d acc = _mm256_setzero_pd();
    acc = cmadd(acc, _mm256_set1_pd(a[2 * i].real()), _mm256_set1_pd(a[2 * i].imag()), b0);
    acc = cmadd(acc, _mm256_set1_pd(a[2 * i + 1].real()), _mm256_set1_pd(a[2 * i + 1].imag()), b1);
    _mm256_storeu_pd(reinterpret_cast<double*>(c + 2 * i), acc);
  }
}

double abs2_sum_avx2(const cd* x, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t(1);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n2; i += 2) {
    const __m256d v = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (n2 != n) {
    s += x[n - 1].real() * x[n - 1].real() + x[n - 1].imag() * x[n - 1].imag();
  }
  return s;
}

double abs2_cumsum_avx2(const cd* x, double* out, std::size_t n) {
  // The prefix sum is serial; vectorise the squares two entries at a time.
  double s = 0.0;
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < n2; i += 2) {
    const __m256d v = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    const __m256d sq = _mm256_mul_pd(v, v);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, sq);
    s += lanes[0] + lanes[1];
    out[i] = s;
    s += lanes[2] + lanes[3];
    out[i + 1] = s;
  }
  if (n2 != n) {
    s += x[n - 1].real() * x[n - 1].real() + x[n - 1].imag() * x[n - 1].imag();
    out[n - 1] = s;
  }
  return s;
}

}  // namespace

const detail::Ops detail::avx2_ops = {
    cgemm_avx2, cgemv_avx2, cmul2x2_avx2, abs2_sum_avx2, abs2_cumsum_avx2};

}  // namespace tqsim::kern
