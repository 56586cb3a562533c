#pragma once

#include "vlr/core.hpp"
#include "vlr/poles.hpp"

namespace vlr {

// Distribution slice at fixed kappa: values over the s grid at each output
// time, split into the oscillator part and the three pieces of the rest.
//   g_total = g_KG + g2 + g3 + remainder
// g_KG collects the oscillator exponentials pulled back along streaming,
// g2 is its time independent boundary term, g3 the streaming commutator,
// remainder the non oscillator field contribution.
struct PhaseTrace {
  double kappa = 0.0;
  std::vector<double> s;
  std::vector<double> t;
  // [it][is]
  std::vector<std::vector<double>> g_total, g_kg, g2, g3, remainder;
  bool kg_defined = false;
};

struct KineticOptions {
  double dt = 0.01;
  int ell = 4;
  double nu0 = 0.7;
  double coupling_scale = 1.0; // 0 freezes the field: pure streaming
};

// Marches the density, then reconstructs the distribution along
// characteristics at the output times.
PhaseTrace evolve_g(const InitialDatum& datum, const PhysicalParams& p, double kappa,
                    const std::vector<double>& s_grid, const std::vector<double>& t_out,
                    const KineticOptions& opt);

// Amplitude of the oscillator part of the field that generated g_KG:
// sum_j sum_pm (c_j / p) e^{p t}; real for real data.
double h_kg_tilde_field(const InitialDatum& datum, const PhysicalParams& p, double kappa,
                        double t, int ell = 4);

struct ScatterRow {
  double t1 = 0.0, t2 = 0.0;
  double D = 0.0;          // weighted L2 distance of the non oscillator part
  double norm_g2 = 0.0, norm_g3 = 0.0, norm_rem = 0.0, norm_kg = 0.0; // at t2
};
struct ScatterReport {
  std::vector<ScatterRow> rows;
  double max_D = 0.0;
  double norm_scale = 0.0; // weighted L2 size of the datum, for relative reading
};

// Cauchy-in-time diagnostic for h_LD = g2 + g3 + remainder across pairs
// (t1, t2): the profile transported back along streaming converges.
ScatterReport scattering_check(const InitialDatum& datum, const PhysicalParams& p,
                               const std::vector<double>& kappas,
                               const std::vector<std::pair<double, double>>& t_pairs,
                               const KineticOptions& opt);

} // namespace vlr
