#pragma once

#include <cstddef>

// Hot inner loops of the time marching schemes. One scalar reference
// implementation and one AVX2 implementation compiled in a separate TU;
// the active set is chosen once at startup from CPU features and can be
// forced with VLR_KERNEL=scalar|avx2.
namespace vlr::kernels {

struct Ops {
  const char* name;
  // sum_{m=0}^{n-1} a[m] * b[m]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_{m=0}^{n-1} a[n-1-m] * b[m]  (convolution tail against a reversed walk)
  double (*dot_rev)(const double* a, const double* b, std::size_t n);
  // same reversed walk applied to a shared kernel and two strands:
  // re out = sum k[n-1-m]*br[m], im out = sum k[n-1-m]*bi[m]
  void (*dot_rev2)(const double* k, const double* br, const double* bi, std::size_t n,
                   double* out_re, double* out_im);
  // y[m] += alpha * x[m]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const Ops& active();
const Ops& scalar_ops();
// null when the build or the CPU lacks AVX2+FMA
const Ops* avx2_ops();

} // namespace vlr::kernels
