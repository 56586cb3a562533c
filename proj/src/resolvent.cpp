#include "vlr/resolvent.hpp"

#include "vlr/dispersion.hpp"
#include "vlr/numerics.hpp"
#include "vlr/report.hpp"

namespace vlr {

namespace {

constexpr double kSkipExponent = -40.0; // e^-40 ~ 4e-18, below double signal

// Is z strictly between the contour and the original inversion line, so
// that its residue is collected when the line is swept onto the contour?
bool enclosed_by(const cplx& z, double kappa, const ContourSpec& spec) {
  const double d = spec.delta * kappa, H = spec.R * kappa;
  const double h = std::abs(z.imag());
  const double edge = h <= H ? -d : -d - (h - H) / (1.0 + spec.delta);
  return z.real() > edge;
}

} // namespace

ContourTable build_contour_table(double kappa, const PhysicalParams& p, const ContourSpec& spec,
                                 const PoleData* pole) {
  spec.validate();
  if (!(kappa > 0.0)) fail(error_kind::domain, "build_contour_table: kappa must be positive");

  const double d = spec.delta * kappa, H = spec.R * kappa;
  const auto& rule = gl_rule(spec.gl_order);
  const cplx two_pi_i(0.0, 2.0 * M_PI);

  ContourTable tab;
  tab.kappa = kappa;
  std::vector<double> xs, ws;

  auto add_panel = [&](cplx z0, cplx along, cplx dz_dir, double s0, double s1) {
    gl_map(rule, s0, s1, xs, ws);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const cplx z = z0 + along * xs[i];
      if (pole && (std::abs(z - pole->p) < spec.collision_tol * kappa ||
                   std::abs(z - std::conj(pole->p)) < spec.collision_tol * kappa))
        fail(error_kind::accuracy,
             "build_contour_table: node collides with a root at kappa=" + format_double(kappa));
      const cplx L = eval_L_closed(z, kappa, p);
      tab.z.push_back(z);
      tab.coef.push_back(ws[i] * dz_dir * (L / (1.0 - L)) / two_pi_i);
    }
  };

  // vertical segment, bottom corner to top corner, uniform panels
  const int nv = std::max(4, (int)std::ceil(2.0 * H / (kappa / spec.corner_frac)));
  const double wv = 2.0 * H / nv;
  for (int j = 0; j < nv; ++j)
    add_panel(cplx(-d, -H), cplx(0.0, 1.0), cplx(0.0, 1.0), j * wv, (j + 1) * wv);

  // oblique legs, graded panels growing outward from the corners
  const double leg_len = std::max(spec.leg_factor * kappa, spec.leg_min);
  cplx dir_up(-1.0, 1.0 + spec.delta);
  dir_up /= std::abs(dir_up);
  const cplx dir_dn = std::conj(dir_up);
  double s = 0.0, w = kappa / spec.corner_frac;
  while (s < leg_len) {
    const double s1 = std::min(s + w, leg_len);
    add_panel(cplx(-d, H), dir_up, dir_up, s, s1);       // outward = traversal
    add_panel(cplx(-d, -H), dir_dn, -dir_dn, s, s1);     // traversal runs inward
    s = s1;
    w *= spec.growth;
  }
  return tab;
}

double kernel_KG(const PoleData& pole, double t) {
  return 2.0 * (pole.J * std::exp(pole.p * t)).real();
}

double kernel_RFT_contour(const ContourTable& table, double t) {
  double acc = 0.0;
  for (std::size_t m = 0; m < table.z.size(); ++m) {
    if (table.z[m].real() * t < kSkipExponent) continue;
    acc += (table.coef[m] * std::exp(table.z[m] * t)).real();
  }
  return acc;
}

std::vector<double> kernel_RFT_on_grid(const ContourTable& table, const TimeGrid& grid) {
  grid.validate();
  std::vector<double> out(grid.size(), 0.0);
  // each contour node is a geometric sequence in t; march it until its
  // envelope crosses the same cutoff the point evaluator uses
  for (std::size_t m = 0; m < table.z.size(); ++m) {
    const double re = table.z[m].real();
    const double cap = re < 0.0 ? kSkipExponent / (re * grid.dt) : (double)grid.n;
    const int last = (int)std::min((double)grid.n, cap);
    const cplx step = std::exp(table.z[m] * grid.dt);
    cplx w = table.coef[m];
    for (int i = 0; i <= last; ++i) {
      out[(std::size_t)i] += w.real();
      w *= step;
    }
  }
  return out;
}

namespace {

struct EnvelopeLine {
  double rate = 0.0, C = 0.0, r2 = 0.0;
  int n = 0;
};

// Log-linear fit through the local maxima of |v| against kappa * t.
EnvelopeLine fit_peaks(const std::vector<double>& t, const std::vector<double>& v, double t0,
                       double t1, double kappa) {
  std::vector<double> xs, ys;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double a = std::abs(v[i]);
    if (t[i] < t0 || t[i] > t1 || a < 1e-280) continue;
    if (a >= std::abs(v[i - 1]) && a >= std::abs(v[i + 1])) {
      xs.push_back(kappa * t[i]);
      ys.push_back(std::log(a));
    }
  }
  if (xs.size() < 3)
    fail(error_kind::resolution, "split_check: fewer than three envelope peaks in the fit window");
  const LineFit lf = line_fit(xs, ys);
  return {-lf.slope, std::exp(lf.intercept), lf.r2, (int)xs.size()};
}

// Pointwise log fit. rel_floor > 0 drops samples more than that factor below
// the window maximum, which keeps quadrature noise out of fast-decaying fits.
EnvelopeLine fit_log_abs(const std::vector<double>& t, const std::vector<double>& v, double t0,
                         double t1, double kappa, double rel_floor) {
  double amax = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= t0 && t[i] <= t1) amax = std::max(amax, std::abs(v[i]));
  const double floor = std::max(1e-280, amax * rel_floor);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double a = std::abs(v[i]);
    if (t[i] < t0 || t[i] > t1 || a < floor) continue;
    xs.push_back(kappa * t[i]);
    ys.push_back(std::log(a));
  }
  if (xs.size() < 8)
    fail(error_kind::resolution, "remainder fit: too few usable samples in the window");
  const LineFit lf = line_fit(xs, ys);
  return {-lf.slope, std::exp(lf.intercept), lf.r2, (int)xs.size()};
}

std::vector<double> richardson_resolvent(const PhysicalParams& p, double kappa,
                                         const TimeGrid& grid) {
  const ResolventTrace coarse = solve_resolvent_direct(p, kappa, grid);
  TimeGrid half;
  half.dt = grid.dt / 2.0;
  half.n = 2 * grid.n;
  const ResolventTrace fine = solve_resolvent_direct(p, kappa, half);
  std::vector<double> ref((std::size_t)grid.size());
  for (int i = 0; i <= grid.n; ++i)
    ref[(std::size_t)i] = richardson(coarse.R[(std::size_t)i], fine.R[(std::size_t)(2 * i)], 2);
  return ref;
}

} // namespace

SplitReport split_check(const PhysicalParams& p, const std::vector<double>& kappas,
                        const TimeGrid& grid, const ContourSpec& spec, double nu0) {
  grid.validate();
  spec.validate();
  SplitReport rep;
  for (double kappa : kappas) {
    const auto ref = richardson_resolvent(p, kappa, grid);
    std::vector<double> t((std::size_t)grid.size());
    for (int i = 0; i <= grid.n; ++i) t[(std::size_t)i] = grid.t(i);

    SplitRow row;
    row.kappa = kappa;
    const double w0 = 5.0 / kappa, w1 = std::min(50.0 / kappa, grid.t_max());
    if (kappa < nu0) {
      const PoleData pole = pole_by_continuation(kappa, p);
      if (!enclosed_by(pole.p, kappa, spec))
        fail(error_kind::config, "split_check: contour does not enclose the root pair at kappa=" +
                                     format_double(kappa) + "; raise R or delta");
      const ContourTable tab = build_contour_table(kappa, p, spec, &pole);
      std::vector<double> rem(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        rem[i] = kernel_RFT_contour(tab, t[i]);
        row.max_discrepancy =
            std::max(row.max_discrepancy, std::abs(ref[i] - kernel_KG(pole, t[i]) - rem[i]));
      }
      // The remainder decays faster than the pole pair and bottoms out at the
      // quadrature noise floor, so the fit self-clamps via the relative floor.
      const EnvelopeLine el = fit_log_abs(t, rem, w0, w1, kappa, 1e-10);
      row.lambda0 = el.rate;
      row.C = el.C;
      row.fit_r2 = el.r2;
      row.kg_defined = true;
      rep.max_discrepancy = std::max(rep.max_discrepancy, row.max_discrepancy);
    } else {
      const EnvelopeLine el = fit_peaks(t, ref, w0, w1, kappa);
      row.lambda0 = el.rate;
      row.C = el.C;
      row.fit_r2 = el.r2;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

double contour_independence(const PhysicalParams& p, const std::vector<double>& kappas,
                            const std::vector<double>& times, const ContourSpec& spec) {
  spec.validate();
  std::vector<ContourSpec> variants(6, spec);
  variants[0].delta *= 0.9;
  variants[1].delta *= 1.1;
  variants[2].R *= 0.9;
  variants[3].R *= 1.1;
  variants[4].growth = 1.10;
  variants[5].corner_frac = 30.0;

  double worst = 0.0;
  for (double kappa : kappas) {
    const PoleData pole = pole_by_continuation(kappa, p);
    const ContourTable base = build_contour_table(kappa, p, spec, &pole);
    for (const ContourSpec& vs : variants) {
      const ContourTable tab = build_contour_table(kappa, p, vs, &pole);
      for (double t : times)
        worst = std::max(worst,
                         std::abs(kernel_RFT_contour(tab, t) - kernel_RFT_contour(base, t)));
    }
  }
  return worst;
}

RemainderEnvelope remainder_envelope(const PhysicalParams& p, double kappa,
                                     const ContourSpec& spec, double dt) {
  p.validate();
  spec.validate();
  if (!(kappa > 0.0) || !(dt > 0.0))
    fail(error_kind::domain, "remainder_envelope: kappa and dt must be positive");
  const PoleData pole = pole_by_continuation(kappa, p);
  if (!enclosed_by(pole.p, kappa, spec))
    fail(error_kind::config,
         "remainder_envelope: contour does not enclose the root pair at kappa=" +
             format_double(kappa) + "; raise R or delta");
  const ContourTable tab = build_contour_table(kappa, p, spec, &pole);

  const double t0 = 5.0 / kappa, t1 = 50.0 / kappa;
  const int n = (int)std::ceil((t1 - t0) / dt);
  std::vector<double> ts((std::size_t)n + 1), vs((std::size_t)n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = std::min(t0 + dt * i, t1);
    ts[(std::size_t)i] = t;
    vs[(std::size_t)i] = kernel_RFT_contour(tab, t);
  }
  const EnvelopeLine el = fit_log_abs(ts, vs, t0, t1, kappa, 0.0);
  RemainderEnvelope env;
  env.lambda0 = el.rate;
  env.r2 = el.r2;
  env.n = el.n;
  for (std::size_t i = 0; i < ts.size(); ++i)
    env.C = std::max(env.C, std::abs(vs[i]) * std::exp(env.lambda0 * kappa * ts[i]));
  return env;
}

} // namespace vlr
