#pragma once

#include "vlr/core.hpp"
#include "vlr/fields.hpp"

namespace vlr {

// Undamped oscillator model of the long wave field amplitude:
//   a'' + Omega_KG^2 a = 0,  Omega_KG^2 = wp^2 + 3 (T/me) kappa^2,
//   a(0) = (w0/kappa) G(kappa, 0),  a'(0) = w0 dG(1)(kappa, 0).
struct KGFieldSpec {
  double kappa = 0.0;
  double Omega = 0.0;
  double a0 = 0.0;
  double da0 = 0.0;
};

KGFieldSpec make_kg_spec(const InitialDatum& datum, const PhysicalParams& p, double kappa);
double solve_kg_exact(const KGFieldSpec& s, double t);
// Splitting into the e^{+i Omega t} and e^{-i Omega t} strands; their sum
// is solve_kg_exact identically.
std::pair<cplx, cplx> kg_branch_split(const KGFieldSpec& s, double t);

enum class HydroReference { marched_field, quadratic_model };

// Sobolev norm of (field - oscillator model) for the datum rescaled to
// wavenumbers of order eps, evaluated at time t and divided by eps^2.
// s must lie in (5/2, 7/2). With reference = quadratic_model the field is
// replaced by the model itself and the result is exactly zero.
double hminus_s_error(double eps, double t, double s, const InitialDatum& datum,
                      const PhysicalParams& p,
                      HydroReference reference = HydroReference::marched_field);

struct WeakLimitRow {
  double eps = 0.0;
  double diff = 0.0;       // |P(eps) - P_lim(eps)| for the matched test profile
  double diff_orth = 0.0;  // same with a profile supported away from the data
  double p_abs = 0.0;
};
struct WeakLimitResult {
  std::vector<WeakLimitRow> rows;
  double ratio_geo_mean = 0.0; // mean diff(2*eps)/diff(eps), ~4 for a quadratic phase law
};

// Demodulated long-time limit of the + oscillator strand at t / eps^2:
// P(eps) pairs e^{-i wp t/eps^2} e_+(t/eps^2, eps kappa) against a radial
// test profile; the limit has the free Schrodinger phase
// exp(i (3 T / (2 me wp)) kappa^2 t).
WeakLimitResult bohm_gross_weak_limit_check(const std::vector<double>& eps_list, double t,
                                            const InitialDatum& datum, const PhysicalParams& p);

} // namespace vlr
