#pragma once

#include "vlr/core.hpp"

namespace vlr {

// Uniform time grid t_i = dt * i, i = 0..n.
struct TimeGrid {
  double dt = 0.01;
  int n = 0;

  double t(int i) const { return dt * i; }
  double t_max() const { return dt * n; }
  int size() const { return n + 1; }

  void validate() const {
    if (!(dt > 0.0) || n < 1) fail(error_kind::config, "TimeGrid: need dt > 0 and n >= 1");
  }
  static TimeGrid to(double t_max, double dt) {
    TimeGrid g;
    g.dt = dt;
    g.n = (int)std::lround(t_max / dt);
    if (std::abs(g.n * dt - t_max) > 1e-9 * std::max(1.0, t_max))
      fail(error_kind::config, "TimeGrid: t_max must be a multiple of dt");
    g.validate();
    return g;
  }
};

// Memory kernel of the closed density equation at wavenumber kappa:
//   K(t) = -w0 * t * fhat0(kappa t)
double memory_kernel(const PhysicalParams& p, double kappa, double t);

struct DensityTrace {
  TimeGrid grid;
  double kappa = 0.0;
  std::vector<double> re, im;

  cplx at(int i) const { return {re[i], im[i]}; }
  double abs(int i) const { return std::hypot(re[i], im[i]); }
};

struct ResolventTrace {
  TimeGrid grid;
  double kappa = 0.0;
  std::vector<double> R;
};

// Product trapezoid march for rho = G + K * rho (K(0) = 0 keeps it explicit).
// coupling_scale multiplies the kernel; 0 turns the interaction off.
DensityTrace solve_volterra_direct(const InitialDatum& datum, const PhysicalParams& p,
                                   double kappa, const TimeGrid& grid,
                                   double coupling_scale = 1.0);

// Same march for the resolvent equation R = K + K * R.
ResolventTrace solve_resolvent_direct(const PhysicalParams& p, double kappa,
                                      const TimeGrid& grid);

// rho = G + R * G by trapezoid quadrature on the grid of R.
DensityTrace reconstruct_density(const InitialDatum& datum, const PhysicalParams& p,
                                 double kappa, const ResolventTrace& R);

struct EnvelopeFit {
  double rate = 0.0; // decay rate of the |signal| envelope, positive = decay
  double r2 = 0.0;
  int peaks = 0;
};

// Log linear fit through the local maxima of |signal| inside [t0, t1];
// values below floor are ignored. Throws resolution when fewer than three
// usable peaks remain.
EnvelopeFit fit_envelope_rate(const std::vector<double>& t, const std::vector<double>& val,
                              double t0, double t1, double floor = 1e-13);

} // namespace vlr
