#include "tqsim/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace tqsim::kern {
namespace {

const detail::Ops* resolve(Backend b) {
#if TQSIM_BUILD_AVX2
  if (b == Backend::avx2 && avx2_supported()) return &detail::avx2_ops;
#endif
  (void)b;
  return &detail::scalar_ops;
}

Backend default_backend() {
  if (const char* env = std::getenv("TQSIM_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
  }
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<const detail::Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const detail::Ops* ops() {
  const detail::Ops* p = g_ops.load(std::memory_order_acquire);
  if (!p) {
    Backend b = default_backend();
    p = resolve(b);
    g_backend.store(p == &detail::scalar_ops ? Backend::scalar : Backend::avx2,
                    std::memory_order_relaxed);
    g_ops.store(p, std::memory_order_release);
  }
  return p;
}

}  // namespace

bool avx2_supported() {
#if TQSIM_BUILD_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  ops();
  return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
  const detail::Ops* p = resolve(b);
  g_backend.store(p == &detail::scalar_ops ? Backend::scalar : Backend::avx2,
                  std::memory_order_relaxed);
  g_ops.store(p, std::memory_order_release);
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void cgemm(const cd* a, const cd* b, cd* c,
           std::size_t m, std::size_t k, std::size_t n) {
  ops()->cgemm(a, b, c, m, k, n);
}

void cgemv(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n) {
  ops()->cgemv(a, x, y, m, n);
}

void cmul2x2(const cd* a, const cd* b, cd* c) { ops()->cmul2x2(a, b, c); }

Cmul2x2Fn cmul2x2_fn() { return ops()->cmul2x2; }

double abs2_sum(const cd* x, std::size_t n) { return ops()->abs2_sum(x, n); }

double abs2_cumsum(const cd* x, double* out, std::size_t n) {
  return ops()->abs2_cumsum(x, out, n);
}

}  // namespace tqsim::kern
