#include <immintrin.h>

#include "vlr/kernels.hpp"

// Compiled with -mavx2 -mfma; dispatch.cpp gates use on cpuid.
namespace vlr::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// a[n-1-m] for m = m0..m0+3, as a vector in m order
inline __m256d load_rev(const double* a, std::size_t n, std::size_t m0) {
  const __m256d v = _mm256_loadu_pd(a + (n - 4 - m0));
  return _mm256_permute4x64_pd(v, 0b00011011);
}

double dot_(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t m = 0;
  for (; m + 8 <= n; m += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + m), _mm256_loadu_pd(b + m), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + m + 4), _mm256_loadu_pd(b + m + 4), acc1);
  }
  for (; m + 4 <= n; m += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + m), _mm256_loadu_pd(b + m), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; m < n; ++m) s += a[m] * b[m];
  return s;
}

double dot_rev_(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t m = 0;
  for (; m + 8 <= n; m += 8) {
    acc0 = _mm256_fmadd_pd(load_rev(a, n, m), _mm256_loadu_pd(b + m), acc0);
    acc1 = _mm256_fmadd_pd(load_rev(a, n, m + 4), _mm256_loadu_pd(b + m + 4), acc1);
  }
  for (; m + 4 <= n; m += 4)
    acc0 = _mm256_fmadd_pd(load_rev(a, n, m), _mm256_loadu_pd(b + m), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; m < n; ++m) s += a[n - 1 - m] * b[m];
  return s;
}

void dot_rev2_(const double* k, const double* br, const double* bi, std::size_t n,
               double* out_re, double* out_im) {
  __m256d ar0 = _mm256_setzero_pd(), ai0 = _mm256_setzero_pd();
  __m256d ar1 = _mm256_setzero_pd(), ai1 = _mm256_setzero_pd();
  std::size_t m = 0;
  for (; m + 8 <= n; m += 8) {
    const __m256d k0 = load_rev(k, n, m);
    const __m256d k1 = load_rev(k, n, m + 4);
    ar0 = _mm256_fmadd_pd(k0, _mm256_loadu_pd(br + m), ar0);
    ai0 = _mm256_fmadd_pd(k0, _mm256_loadu_pd(bi + m), ai0);
    ar1 = _mm256_fmadd_pd(k1, _mm256_loadu_pd(br + m + 4), ar1);
    ai1 = _mm256_fmadd_pd(k1, _mm256_loadu_pd(bi + m + 4), ai1);
  }
  for (; m + 4 <= n; m += 4) {
    const __m256d k0 = load_rev(k, n, m);
    ar0 = _mm256_fmadd_pd(k0, _mm256_loadu_pd(br + m), ar0);
    ai0 = _mm256_fmadd_pd(k0, _mm256_loadu_pd(bi + m), ai0);
  }
  double sr = hsum(_mm256_add_pd(ar0, ar1));
  double si = hsum(_mm256_add_pd(ai0, ai1));
  for (; m < n; ++m) {
    const double kv = k[n - 1 - m];
    sr += kv * br[m];
    si += kv * bi[m];
  }
  *out_re = sr;
  *out_im = si;
}

void axpy_(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t m = 0;
  for (; m + 4 <= n; m += 4)
    _mm256_storeu_pd(y + m, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + m), _mm256_loadu_pd(y + m)));
  for (; m < n; ++m) y[m] += alpha * x[m];
}

const Ops avx2_impl = {"avx2", dot_, dot_rev_, dot_rev2_, axpy_};

} // namespace

const Ops* avx2_ops_impl() { return &avx2_impl; }

} // namespace vlr::kernels
