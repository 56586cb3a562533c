#include "vlr/volterra.hpp"

#include "vlr/kernels.hpp"
#include "vlr/numerics.hpp"

namespace vlr {

double memory_kernel(const PhysicalParams& p, double kappa, double t) {
  return -p.w0 * t * MaxwellianBackground{p}.fhat0(kappa * t);
}

namespace {

std::vector<double> kernel_samples(const PhysicalParams& p, double kappa, const TimeGrid& grid,
                                   double scale) {
  std::vector<double> K((std::size_t)grid.size());
  for (int i = 0; i <= grid.n; ++i) K[(std::size_t)i] = scale * memory_kernel(p, kappa, grid.t(i));
  return K;
}

} // namespace

DensityTrace solve_volterra_direct(const InitialDatum& datum, const PhysicalParams& p,
                                   double kappa, const TimeGrid& grid, double coupling_scale) {
  grid.validate();
  if (!(kappa > 0.0)) fail(error_kind::domain, "solve_volterra_direct: kappa must be positive");
  const auto& ops = kernels::active();
  const std::size_t n1 = (std::size_t)grid.size();
  const auto K = kernel_samples(p, kappa, grid, coupling_scale);

  DensityTrace tr;
  tr.grid = grid;
  tr.kappa = kappa;
  tr.re.assign(n1, 0.0);
  tr.im.assign(n1, 0.0); // datum and kernel are real, so the trace stays real
  tr.re[0] = datum.G(kappa, 0.0);
  for (std::size_t i = 1; i < n1; ++i) {
    double conv = 0.5 * K[i] * tr.re[0];
    if (i >= 2) conv += ops.dot_rev(K.data() + 1, tr.re.data() + 1, i - 1);
    tr.re[i] = datum.G(kappa, kappa * grid.t((int)i)) + grid.dt * conv;
  }
  return tr;
}

ResolventTrace solve_resolvent_direct(const PhysicalParams& p, double kappa,
                                      const TimeGrid& grid) {
  grid.validate();
  if (!(kappa > 0.0)) fail(error_kind::domain, "solve_resolvent_direct: kappa must be positive");
  const auto& ops = kernels::active();
  const std::size_t n1 = (std::size_t)grid.size();
  const auto K = kernel_samples(p, kappa, grid, 1.0);

  ResolventTrace tr;
  tr.grid = grid;
  tr.kappa = kappa;
  tr.R.assign(n1, 0.0);
  for (std::size_t i = 1; i < n1; ++i) {
    double conv = 0.0;
    if (i >= 2) conv = ops.dot_rev(K.data() + 1, tr.R.data() + 1, i - 1);
    tr.R[i] = K[i] + grid.dt * conv;
  }
  return tr;
}

DensityTrace reconstruct_density(const InitialDatum& datum, const PhysicalParams&, double kappa,
                                 const ResolventTrace& rt) {
  if (!(kappa > 0.0)) fail(error_kind::domain, "reconstruct_density: kappa must be positive");
  const auto& ops = kernels::active();
  const TimeGrid& grid = rt.grid;
  const std::size_t n1 = (std::size_t)grid.size();
  if (rt.R.size() != n1) fail(error_kind::config, "reconstruct_density: trace length mismatch");

  std::vector<double> G(n1);
  for (std::size_t i = 0; i < n1; ++i) G[i] = datum.G(kappa, kappa * grid.t((int)i));

  DensityTrace tr;
  tr.grid = grid;
  tr.kappa = kappa;
  tr.re.assign(n1, 0.0);
  tr.im.assign(n1, 0.0);
  tr.re[0] = G[0];
  for (std::size_t i = 1; i < n1; ++i) {
    double conv = 0.5 * rt.R[i] * G[0];
    if (i >= 2) conv += ops.dot_rev(rt.R.data() + 1, G.data() + 1, i - 1);
    tr.re[i] = G[i] + grid.dt * conv;
  }
  return tr;
}

EnvelopeFit fit_envelope_rate(const std::vector<double>& t, const std::vector<double>& val,
                              double t0, double t1, double floor) {
  if (t.size() != val.size() || t.size() < 3)
    fail(error_kind::config, "fit_envelope_rate: inconsistent series");
  EnvelopeFit f;
  std::vector<double> ts, ls;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double v = std::abs(val[i]);
    if (t[i] < t0 || t[i] > t1 || v <= floor) continue;
    if (v >= std::abs(val[i - 1]) && v >= std::abs(val[i + 1])) {
      ts.push_back(t[i]);
      ls.push_back(std::log(v));
    }
  }
  if (ts.size() < 3)
    fail(error_kind::resolution, "fit_envelope_rate: fewer than three envelope peaks in window");
  const auto lf = line_fit(ts, ls);
  f.rate = -lf.slope;
  f.r2 = lf.r2;
  f.peaks = (int)ts.size();
  return f;
}

} // namespace vlr
