#pragma once

#include <complex>
#include <cstddef>

// Dense complex arithmetic kernels. A scalar reference implementation is
// always available; an AVX2+FMA variant is selected at runtime when the CPU
// supports it. The two are equivalence-tested against each other.
namespace tqsim::kern {

using cd = std::complex<double>;

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();
// Test hook. Requesting an unsupported backend falls back to scalar.
void set_backend(Backend b);
const char* backend_name(Backend b);

// C(m x n) = A(m x k) * B(k x n), row-major. C must not alias A or B.
void cgemm(const cd* a, const cd* b, cd* c,
           std::size_t m, std::size_t k, std::size_t n);

// y = A(m x n) * x. y must not alias x.
void cgemv(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n);

// C = A * B for 2x2 row-major matrices. C must not alias A or B.
void cmul2x2(const cd* a, const cd* b, cd* c);

// The active cmul2x2 implementation, resolved once for tight loops.
using Cmul2x2Fn = void (*)(const cd*, const cd*, cd*);
Cmul2x2Fn cmul2x2_fn();

double abs2_sum(const cd* x, std::size_t n);

// out[i] = sum_{j<=i} |x[j]|^2. Returns the total.
double abs2_cumsum(const cd* x, double* out, std::size_t n);

namespace detail {
struct Ops {
  void (*cgemm)(const cd*, const cd*, cd*, std::size_t, std::size_t, std::size_t);
  void (*cgemv)(const cd*, const cd*, cd*, std::size_t, std::size_t);
  void (*cmul2x2)(const cd*, const cd*, cd*);
  double (*abs2_sum)(const cd*, std::size_t);
  double (*abs2_cumsum)(const cd*, double*, std::size_t);
};
extern const Ops scalar_ops;
#if TQSIM_BUILD_AVX2
extern const Ops avx2_ops;
#endif
}  // namespace detail

}  // namespace tqsim::kern
