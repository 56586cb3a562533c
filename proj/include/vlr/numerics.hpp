#pragma once

#include "vlr/core.hpp"

namespace vlr {

// Gauss-Legendre rule on [-1, 1]; results are cached per order.
struct GLRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GLRule& gl_rule(int order);

// Nodes/weights of the order-n rule mapped to [a, b].
void gl_map(const GLRule& rule, double a, double b,
            std::vector<double>& x, std::vector<double>& w);

std::vector<double> linspace(double a, double b, std::size_t n);
std::vector<double> geomspace(double a, double b, std::size_t n);

// Least squares fit y ~ sum_j c_j x^powers[j], optionally row-weighted.
// Householder QR; throws accuracy error when the system is rank deficient.
std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<int>& powers,
                            const std::vector<double>* row_weights = nullptr);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y);

// Richardson extrapolation for a first-pass error that scales like h^p.
inline double richardson(double coarse, double fine, int p) {
  const double f = std::pow(2.0, p);
  return (f * fine - coarse) / (f - 1.0);
}
inline cplx richardson(cplx coarse, cplx fine, int p) {
  const double f = std::pow(2.0, p);
  return (f * fine - coarse) / (f - 1.0);
}

// Probabilists' Hermite polynomials He_j, used by the Gaussian derivative
// closed forms: d^j/ds^j exp(-a s^2/2) = (-sqrt(a))^j He_j(s sqrt(a)) exp(-a s^2/2).
double hermite_he(int j, double x);

// In-place radix-2 complex FFT, n a power of two. Reference use only.
void fft_pow2(std::vector<cplx>& a, bool inverse);

} // namespace vlr
