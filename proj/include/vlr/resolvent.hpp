#pragma once

#include "vlr/core.hpp"
#include "vlr/poles.hpp"
#include "vlr/volterra.hpp"

namespace vlr {

// Deformed inversion contour for the low frequency remainder kernel.
// Three legs, traversed upward: an oblique lower leg of slope -(1+delta),
// a vertical segment at Re z = -delta*kappa with |Im z| <= R*kappa, and an
// oblique upper leg of slope (1+delta). The oblique legs keep Re(z^2) < 0
// so the continuation term of the integrand stays bounded. gamma_prime_scale
// records the abscissa (as a multiple of kappa) of the undeformed vertical
// line; it must separate the root pair from the legs.
struct ContourSpec {
  double delta = 0.5;
  double R = 2.0;
  double gamma_prime_scale = -0.025;
  int gl_order = 24;
  double corner_frac = 20.0; // first panel width = kappa / corner_frac
  double growth = 1.15;      // panel width growth along a leg
  double leg_factor = 40.0;  // leg length >= leg_factor * kappa
  double leg_min = 3e5;      // and >= this absolute length
  double collision_tol = 1e-3; // times kappa, min distance of nodes to roots

  void validate() const {
    if (!(delta > 0.0) || !(R > 0.0) || gl_order < 4 || !(corner_frac > 1.0) ||
        !(growth > 1.0) || !(leg_factor > 0.0))
      fail(error_kind::config, "ContourSpec: invalid geometry");
    if (!(gamma_prime_scale < 0.0))
      fail(error_kind::config, "ContourSpec: gamma_prime_scale must be negative");
  }
};

// Quadrature table of L/(1-L) along the contour; reusable for every t.
struct ContourTable {
  double kappa = 0.0;
  std::vector<cplx> z;
  std::vector<cplx> coef; // (dz weight) * L/(1-L) / (2 pi i)
};

ContourTable build_contour_table(double kappa, const PhysicalParams& p,
                                 const ContourSpec& spec, const PoleData* pole);

// Oscillator part of the kernel: 2 Re(J e^{p t}).
double kernel_KG(const PoleData& pole, double t);

// Remainder kernel from the contour table; nodes with Re(z) t < -40 are
// skipped, which is exact to double precision.
double kernel_RFT_contour(const ContourTable& table, double t);
// Same kernel sampled on every node of a uniform grid, via per-contour-node
// geometric recurrences; matches pointwise evaluation to rounding.
std::vector<double> kernel_RFT_on_grid(const ContourTable& table, const TimeGrid& grid);

struct SplitRow {
  double kappa = 0.0;
  double max_discrepancy = 0.0; // over the t grid, |R_direct - R_KG - R_RFT|
  double lambda0 = 0.0;         // fitted decay rate of R_RFT per unit kappa*t
  double C = 0.0;               // envelope constant at the fit window
  double fit_r2 = 0.0;
  bool kg_defined = false;
};
struct SplitReport {
  std::vector<SplitRow> rows;
  double max_discrepancy = 0.0;
};

// Compares the marched resolvent kernel against the oscillator + remainder
// split on the given t grid. The direct reference is Richardson
// extrapolated from dt and dt/2. Above nu0 the whole kernel is the
// remainder and only the envelope fit is recorded.
SplitReport split_check(const PhysicalParams& p, const std::vector<double>& kappas,
                        const TimeGrid& grid, const ContourSpec& spec, double nu0);

// Max change of the remainder kernel under contour perturbations
// (slopes, height, growth, corner width), over the given kappas and times.
double contour_independence(const PhysicalParams& p, const std::vector<double>& kappas,
                            const std::vector<double>& times, const ContourSpec& spec);

// Decay envelope of the remainder kernel alone: lambda0 is the least-squares
// slope of log|R_RFT| against kappa*t sampled over t in [5/kappa, 50/kappa],
// and C = sup_t |R_RFT(t)| exp(lambda0 kappa t) over the same window.
struct RemainderEnvelope {
  double lambda0 = 0.0;
  double C = 0.0;
  double r2 = 0.0;
  int n = 0;
};
RemainderEnvelope remainder_envelope(const PhysicalParams& p, double kappa,
                                     const ContourSpec& spec, double dt = 0.05);

} // namespace vlr
