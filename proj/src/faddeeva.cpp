#include "vlr/faddeeva.hpp"

namespace vlr {

namespace {

constexpr double H = 0.25;  // trapezoid step
constexpr int N = 96;       // terms per side; exp(-(N H)^2) underflows anyway
constexpr double ISQRT_PI = 0.5641895835477562869;

struct Tables {
  // exp(-t^2) on the integer grid t = n H and the half grid t = (n+1/2) H
  double e0[N + 1];
  double th0[N + 1];
  double eh[N];
  double th[N];
  Tables() {
    for (int n = 0; n <= N; ++n) {
      th0[n] = n * H;
      e0[n] = std::exp(-th0[n] * th0[n]);
    }
    for (int n = 0; n < N; ++n) {
      th[n] = (n + 0.5) * H;
      eh[n] = std::exp(-th[n] * th[n]);
    }
  }
};
const Tables& tables() {
  static const Tables t;
  return t;
}

cplx w_upper(cplx z) {
  const double x = z.real(), y = z.imag();
  if (std::norm(z) >= 256.0) {
    // descending continued fraction, depth 12
    cplx f = 0.0;
    for (int k = 12; k >= 1; --k) f = (0.5 * k) / (z - f);
    return cplx(0.0, ISQRT_PI) / (z - f);
  }

  const Tables& tb = tables();
  // Pick the grid that keeps the poles of the correction term away from z.
  const double fr = x / H - std::floor(x / H);
  const bool half_grid = (fr < 0.25 || fr > 0.75);

  cplx sum = 0.0;
  const cplx z2 = z * z;
  if (half_grid) {
    for (int n = N - 1; n >= 0; --n) {
      const double t = tb.th[n];
      sum += tb.eh[n] * (2.0 * z) / (z2 - t * t);
    }
  } else {
    for (int n = N; n >= 1; --n) {
      const double t = tb.th0[n];
      sum += tb.e0[n] * (2.0 * z) / (z2 - t * t);
    }
    sum += 1.0 / z;
  }
  cplx w = cplx(0.0, H * M_1_PI) * sum;

  if (y < 1.5) {
    // residue correction of the trapezoid sum; q = exp(-2 pi i z / H)
    const cplx q = std::exp(cplx(0.0, -2.0 * M_PI / H) * z);
    const cplx egz = std::exp(-z2);
    w += half_grid ? 2.0 * egz / (1.0 + q) : 2.0 * egz / (1.0 - q);
  }
  return w;
}

} // namespace

cplx faddeeva_w(cplx z) {
  if (z.imag() >= 0.0) return w_upper(z);
  // w(z) = 2 exp(-z^2) - w(-z); growth in the lower half plane is genuine
  return 2.0 * std::exp(-z * z) - w_upper(-z);
}

} // namespace vlr
