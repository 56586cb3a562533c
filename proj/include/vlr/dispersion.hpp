#pragma once

#include "vlr/core.hpp"

namespace vlr {

enum class EvalMethod { closed_form, quadrature, plemelj, asymptotic };

struct DispersionEval {
  cplx z;
  double kappa = 0.0;
  cplx value;
  cplx dz_value;
  EvalMethod method = EvalMethod::closed_form;
};

// Building blocks in the scaled variable u = z / (kappa * vth):
//   I(u)  = 1 - u M(u),          M(u) = integral_0^inf exp(-u s - s^2/2) ds
//   I2(u) = (1 + u^2) M(u) - u   (the u-derivative structure of I)
// Both analytically continued to the whole plane; the continuation across
// Re u <= 0 picks up sqrt(2 pi) exp(u^2/2) terms (half weight on the axis).
cplx dispersion_I(cplx u);
cplx dispersion_I2(cplx u);

// L(z, kappa) = -(w0 n0 / (kappa vth)^2) I(z / (kappa vth))
cplx eval_L_closed(cplx z, double kappa, const PhysicalParams& p);
// dL/dz = (w0 n0 / (kappa vth)^3 / kappa^0) ... see implementation
cplx eval_dzL(cplx z, double kappa, const PhysicalParams& p);

struct QuadratureEval {
  cplx value;
  double error_estimate = 0.0;
  int nodes = 0;
};
// Direct Laplace-transform quadrature of the memory kernel; requires
// Re z > -36 * kappa * vth (integrand growth), throws on accuracy failure.
QuadratureEval eval_L_quadrature_detailed(cplx z, double kappa, const PhysicalParams& p);
cplx eval_L_quadrature(cplx z, double kappa, const PhysicalParams& p);

// Boundary value on the imaginary axis z = i omega via a principal value
// integral of the marginal plus the half-residue term.
cplx eval_L_plemelj(double omega, double kappa, const PhysicalParams& p);

// Large-z expansion -(wp^2/z^2)(1 + 3 T kappa^2 / (me z^2) + ...),
// order in {2, 4}.
cplx eval_L_asymptotic(cplx z, double kappa, const PhysicalParams& p, int order);

struct PenroseResult {
  double min_abs = 0.0;    // min over the sampled region of |1 - L|
  cplx argmin_z;
  double argmin_kappa = 0.0;
  bool on_disc_boundary = false; // low frequency scan only
};

// High frequency scan: kappa in [nu0, kappa_max], z on the rectangle
// [-lambda_scale*kappa, 1] x [-im_max, im_max].
PenroseResult penrose_margin_high(const PhysicalParams& p, double nu0, double kappa_max,
                                  double lambda_scale, double im_max,
                                  int n_re, int n_im, int n_kappa);

// Low frequency scan: kappa in [kappa_min, nu0], right half plane
// Re z in [eps_margin*kappa, re_max] shifted grid union the boundaries of
// the excluded discs of radius eps*kappa around +-i*omega_p.
PenroseResult penrose_margin_low(const PhysicalParams& p, double kappa_min, double nu0,
                                 double eps, double delta_prime,
                                 int n_re, int n_im, int n_kappa);

} // namespace vlr
