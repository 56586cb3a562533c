#include "vlr/kernels.hpp"

namespace vlr::kernels {
namespace {

double dot_(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t m = 0; m < n; ++m) s += a[m] * b[m];
  return s;
}

double dot_rev_(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t m = 0; m < n; ++m) s += a[n - 1 - m] * b[m];
  return s;
}

void dot_rev2_(const double* k, const double* br, const double* bi, std::size_t n,
               double* out_re, double* out_im) {
  double sr = 0.0, si = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double kv = k[n - 1 - m];
    sr += kv * br[m];
    si += kv * bi[m];
  }
  *out_re = sr;
  *out_im = si;
}

void axpy_(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) y[m] += alpha * x[m];
}

const Ops scalar_impl = {"scalar", dot_, dot_rev_, dot_rev2_, axpy_};

} // namespace

const Ops& scalar_ops() { return scalar_impl; }

} // namespace vlr::kernels
