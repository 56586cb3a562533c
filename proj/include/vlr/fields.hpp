#pragma once

#include "vlr/core.hpp"
#include "vlr/poles.hpp"
#include "vlr/resolvent.hpp"

namespace vlr {

enum class FieldComponent { LD1, LD2, KG1, KG2, total };
const char* to_string(FieldComponent c);

struct DecomposeOptions {
  int ell = 4;          // order of the oscillator expansion, remainder order ell+1
  double dt = 0.01;     // march step; results Richardson extrapolated with dt/2
  double nu0 = 0.7;     // above this kappa everything goes to the remainder part
  bool richardson = true;
  ContourSpec contour;  // contour used for the remainder kernel below nu0
};

// Field amplitudes on the (t, kappa) sample set. Amplitudes are real for
// real input data; the electric field along the ray is i k^ times amp.
struct FieldDecomposition {
  std::vector<double> t;
  RadialGrid grid;
  int ell = 4;
  double nu0 = 0.7;
  // [it][ik]
  std::vector<std::vector<double>> ld1, ld2, kg1, kg2, total;

  const std::vector<std::vector<double>>& comp(FieldComponent c) const;
  void validate() const;
};

// Splits the field of the marched density into
//   total = LD1 + LD2 + KG1 + KG2
// where KG1 carries the oscillator exponentials, KG2 their order ell+1
// memory correction, LD1 the streaming terms and LD2 the remainder kernel
// convolution. Sample times must be multiples of dt.
FieldDecomposition decompose_field(const InitialDatum& datum, const PhysicalParams& p,
                                   const RadialGrid& grid, const std::vector<double>& t_samples,
                                   const DecomposeOptions& opt);

// sqrt( 4 pi / (2 pi)^3 * sum w kappa^2 (1 + kappa^2 + (t kappa)^2)^sigma amp^2 )
double l2_norm(const FieldDecomposition& fd, FieldComponent c, std::size_t it, double sigma = 0.0);
double l2_norm_slice(const RadialGrid& grid, const std::vector<double>& amp, double t,
                     double sigma = 0.0);

// f(r) = 1/(2 pi^2) * integral amp(kappa) j_b(kappa r) kappa^2 dkappa, b in {0, 1}.
std::vector<double> inverse_radial_transform(const RadialGrid& grid,
                                             const std::vector<double>& amp,
                                             const std::vector<double>& r, int bessel_order);
// max |f| over a uniform r scan of [0, r_max]
double linf_norm(const RadialGrid& grid, const std::vector<double>& amp, int bessel_order,
                 double r_max, std::size_t n_r = 800);

struct ExponentFit {
  double exponent = 0.0; // fitted power of t
  double r2 = 0.0;
  int n = 0;
};
// Log-log least squares over samples with t in [t0, t1] and value > 0.
ExponentFit fit_decay_exponent(const std::vector<double>& t, const std::vector<double>& v,
                               double t0, double t1);

struct NormSeries {
  std::vector<double> t;
  std::vector<double> value;
};

struct FreeTransportDecay {
  int grad_order = 0;
  NormSeries l2, linf;
  ExponentFit fit_l2, fit_linf;
};
// Decay of the streaming density moments kappa^j G(kappa, kappa t).
FreeTransportDecay free_transport_decay(const InitialDatum& datum, const PhysicalParams& p,
                                        const RadialGrid& grid, const std::vector<double>& ts,
                                        int grad_order);

struct DispersiveDecay {
  std::vector<double> t, sup_abs, argmax_r;
  ExponentFit fit;
};
// Stationary phase decay of the oscillator kernel smoothed by a bump
// supported on [a, b]: sup over r in the shell swept by the bump's group
// velocities of |(2 pi)^{-3/2} 4 pi * integral j0(kappa r) cos(Omega(kappa) t)
// a(kappa) kappa^2 dkappa| with Omega(kappa) = sqrt(omega_p^2 + 3 T/me k^2),
// the oscillation frequency the pole branch is asymptotic to.  The damping
// factor is dropped so the fitted exponent isolates the stationary-phase rate.
DispersiveDecay dispersive_kernel_decay(const PhysicalParams& p, double a, double b,
                                        const std::vector<double>& ts);

// L2-in-kappa norm of the oscillator component alone on a dense time grid.
NormSeries kg_component_envelope(const InitialDatum& datum, const PhysicalParams& p,
                                 const RadialGrid& grid, double nu0, double t_max, double dt);

} // namespace vlr
