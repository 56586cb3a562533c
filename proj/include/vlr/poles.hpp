#pragma once

#include "vlr/core.hpp"

namespace vlr {

// One root of 1 - L(., kappa) in the upper half plane together with the
// residue data of the pair {p, conj(p)}.
struct PoleData {
  double kappa = 0.0;
  cplx p;                 // root, Im p > 0
  cplx J;                 // residue factor -1 / dzL(p)
  double lambda = 0.0;    // -Re p
  double Omega = 0.0;     //  Im p
  double log10_lambda = 0.0; // log magnitude of the decay rate, see below
  std::array<cplx, 6> A{};   // J / p^(j+1), j = 0..5
};

struct PoleBranch {
  std::vector<double> kappa;
  std::vector<PoleData> node;
  double nu0 = 0.7;
  std::size_t size() const { return kappa.size(); }
  void validate() const;
};

// Newton iteration on F = 1 - L from the given seed. Stops at |F| <= 1e-13
// or at a machine-scale step (the F evaluation noise scales like kappa^-2,
// so the absolute residual target is unreachable at small kappa). Throws
// rootfind on stagnation and branch_jump when the iterate leaves the disc
// |z - seed| < eps_disc.
cplx find_pole(double kappa, cplx seed, const PhysicalParams& p, double eps_disc = 0.3,
               int max_iter = 50);

// Root plus residue data at a single kappa. The stored log10_lambda and
// lambda follow the small-kappa substitution policy: when the Newton
// lambda falls below trust_floor the boundary-value rate (Plemelj form,
// evaluated in log space) replaces it.
PoleData pole_data_at(double kappa, const PhysicalParams& p, cplx seed,
                      double trust_floor = 1e-10);

// Continuation over an increasing kappa grid starting near i*omega_p.
PoleBranch track_branch(const std::vector<double>& kappa_grid, const PhysicalParams& p,
                        double nu0 = 0.7);

// Root data at a single kappa without an external seed: the long-wave
// frequency seeds a direct Newton solve up to kappa = 0.25, multiplicative
// continuation takes over beyond it.
PoleData pole_by_continuation(double kappa, const PhysicalParams& p);

// Boundary-value decay rate at wavenumber kappa: Omega_pl solves
// Re L(i Omega) = 1, and the rate is Im L / Im dzL there, computed in log
// space so it stays finite far below the double underflow threshold.
struct PlemeljRate {
  double Omega = 0.0;
  double log10_lambda = 0.0;
};
PlemeljRate plemelj_log_rate(double kappa, const PhysicalParams& p, double seed_Omega = 0.0);

struct BohmGrossFit {
  double c0 = 0.0;            // constant term of the weighted quartic fit
  double c2 = 0.0;            // kappa^2 coefficient of the weighted quartic fit
  double max_residual = 0.0;      // unweighted quadratic fit
  double quartic_residual = 0.0;  // unweighted quartic refit
  int n = 0;
};
// Fit Omega^2 ~ c0 + c2 kappa^2 (+ c4 kappa^4) over branch nodes inside
// [kmin, kmax]; needs at least six nodes.
BohmGrossFit bohm_gross_fit(const PoleBranch& b, double kmin, double kmax);

struct FlatnessRow {
  int N = 0;
  double sup_log10 = 0.0;     // sup over the checked nodes of log10(lambda * kappa^-N)
  double argmax_kappa = 0.0;
  bool attained_at_right = false; // sup attained at the largest checked kappa
  bool monotone = false;          // log10(lambda kappa^-N) increasing over checked nodes
};
struct FlatnessResult {
  std::vector<FlatnessRow> rows;
  double checked_kappa_max = 0.0; // nodes kappa <= geometric midpoint of the range
  double slope_inv_kappa2 = 0.0;  // least squares slope of log(lambda) vs -1/kappa^2
  double slope_r2 = 0.0;
};
// Demonstrates that lambda(kappa) vanishes faster than any power at the
// low end of the branch: for each N the weighted rate lambda * kappa^-N
// is still increasing on the lower half of the grid.
FlatnessResult lambda_flatness_check(const PoleBranch& b, const std::vector<int>& powers);

} // namespace vlr
