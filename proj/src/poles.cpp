#include "vlr/poles.hpp"

#include <limits>

#include "vlr/dispersion.hpp"
#include "vlr/numerics.hpp"
#include "vlr/report.hpp"

namespace vlr {

void PoleBranch::validate() const {
  if (kappa.size() != node.size() || kappa.empty())
    fail(error_kind::config, "PoleBranch: inconsistent node storage");
  for (std::size_t i = 1; i < kappa.size(); ++i)
    if (kappa[i] <= kappa[i - 1]) fail(error_kind::config, "PoleBranch: kappa not increasing");
}

cplx find_pole(double kappa, cplx seed, const PhysicalParams& p, double eps_disc, int max_iter) {
  if (!(kappa > 0.0)) fail(error_kind::domain, "find_pole: kappa must be positive");
  cplx z = seed;
  for (int it = 0; it < max_iter; ++it) {
    const cplx F = 1.0 - eval_L_closed(z, kappa, p);
    if (std::abs(F) <= 1e-13) return z;
    const cplx dF = -eval_dzL(z, kappa, p);
    if (!(std::abs(dF) > 1e-300))
      fail(error_kind::rootfind, "find_pole: vanishing derivative at kappa=" + format_double(kappa));
    const cplx dz = F / dF;
    z -= dz;
    // evaluation noise in F grows like w0 n0 / kappa^2, so near small kappa
    // the residual stalls above 1e-13; a machine-scale step means done
    if (std::abs(dz) <= 1e-12 * std::max(1.0, std::abs(z))) return z;
    if (std::abs(z - seed) > eps_disc)
      fail(error_kind::branch_jump,
           "find_pole: left the isolation disc at kappa=" + format_double(kappa));
  }
  fail(error_kind::rootfind, "find_pole: no convergence at kappa=" + format_double(kappa));
}

PlemeljRate plemelj_log_rate(double kappa, const PhysicalParams& p, double seed_Omega) {
  if (!(kappa > 0.0)) fail(error_kind::domain, "plemelj_log_rate: kappa must be positive");
  const double vth = p.vth();
  double Om = seed_Omega > 0.0
                  ? seed_Omega
                  : std::sqrt(p.omega_p() * p.omega_p() + 3.0 * (p.T / p.me) * kappa * kappa);
  bool ok = false;
  for (int it = 0; it < 60; ++it) {
    const double F = eval_L_closed(cplx(0.0, Om), kappa, p).real() - 1.0;
    if (std::abs(F) <= 1e-14) {
      ok = true;
      break;
    }
    const double dF = -eval_dzL(cplx(0.0, Om), kappa, p).imag(); // d/dOm Re L(i Om)
    if (!(std::abs(dF) > 1e-300))
      fail(error_kind::rootfind, "plemelj_log_rate: flat crossing at kappa=" + format_double(kappa));
    const double dOm = F / dF;
    Om -= dOm;
    if (!(Om > 0.0))
      fail(error_kind::rootfind, "plemelj_log_rate: left the upper axis at kappa=" + format_double(kappa));
    if (std::abs(dOm) <= 1e-12 * std::max(1.0, Om)) { // evaluation noise floor
      ok = true;
      break;
    }
  }
  if (!ok) fail(error_kind::rootfind, "plemelj_log_rate: no convergence at kappa=" + format_double(kappa));

  // Im L(i Om) = pref sqrt(pi/2) y e^{-y^2/2} exactly; take logs analytically
  // so the rate survives far below the representable range.
  const double y = Om / (kappa * vth);
  const double im_I2 = dispersion_I2(cplx(0.0, y)).imag();
  if (!(im_I2 > 0.0))
    fail(error_kind::accuracy, "plemelj_log_rate: nonpositive derivative mass at kappa=" + format_double(kappa));
  PlemeljRate out;
  out.Omega = Om;
  out.log10_lambda =
      std::log10(kappa * vth * std::sqrt(M_PI / 2.0) * y / im_I2) - 0.5 * y * y / std::log(10.0);
  return out;
}

PoleData pole_data_at(double kappa, const PhysicalParams& p, cplx seed, double trust_floor) {
  PoleData d;
  d.kappa = kappa;
  d.p = find_pole(kappa, seed, p);
  if (d.p.imag() < 0.0) d.p = std::conj(d.p); // track the upper root of the pair
  d.J = -1.0 / eval_dzL(d.p, kappa, p);
  cplx pw = d.p;
  for (int j = 0; j < 6; ++j) {
    d.A[j] = d.J / pw;
    pw *= d.p;
  }
  d.lambda = -d.p.real();
  d.Omega = d.p.imag();
  if (d.lambda > trust_floor) {
    d.log10_lambda = std::log10(d.lambda);
  } else {
    // Newton leaves only roundoff in Re p here; substitute the boundary
    // value rate, which is exact in log space.
    const PlemeljRate pl = plemelj_log_rate(kappa, p, d.Omega);
    d.log10_lambda = pl.log10_lambda;
    d.lambda = std::pow(10.0, pl.log10_lambda); // may underflow to zero, by design
  }
  return d;
}

PoleBranch track_branch(const std::vector<double>& kappa_grid, const PhysicalParams& p,
                        double nu0) {
  if (kappa_grid.size() < 2) fail(error_kind::config, "track_branch: need at least two nodes");
  for (std::size_t i = 1; i < kappa_grid.size(); ++i)
    if (kappa_grid[i] <= kappa_grid[i - 1])
      fail(error_kind::config, "track_branch: kappa grid not increasing");

  PoleBranch b;
  b.nu0 = nu0;
  const double k0 = kappa_grid.front();
  double k_prev = 0.0, k_prev2 = 0.0;
  cplx p_prev(0.0, std::sqrt(p.omega_p() * p.omega_p() + 3.0 * (p.T / p.me) * k0 * k0));
  cplx p_prev2;
  bool have_two = false;

  // secant continuation: predict the next root linearly, and bisect the
  // kappa step when the iterate escapes its isolation disc (coarse grids)
  auto advance = [&](double k_target) {
    int depth = 0;
    while (k_prev != k_target) {
      double k_try = k_target;
      for (;; ++depth) {
        cplx seed = p_prev;
        if (have_two && k_prev != k_prev2)
          seed += (p_prev - p_prev2) / (k_prev - k_prev2) * (k_try - k_prev);
        try {
          const cplx root = find_pole(k_try, seed, p);
          k_prev2 = k_prev;
          p_prev2 = p_prev;
          k_prev = k_try;
          p_prev = root;
          have_two = true;
          break;
        } catch (const error& e) {
          if (e.kind() != error_kind::branch_jump || depth >= 40) throw;
          k_try = k_prev == 0.0 ? k_try / 2.0 : 0.5 * (k_prev + k_try);
        }
      }
    }
  };

  for (double kappa : kappa_grid) {
    advance(kappa);
    b.kappa.push_back(kappa);
    b.node.push_back(pole_data_at(kappa, p, p_prev));
  }
  b.validate();
  return b;
}

PoleData pole_by_continuation(double kappa, const PhysicalParams& p) {
  if (!(kappa > 0.0)) fail(error_kind::domain, "pole_by_continuation: kappa must be positive");
  const double k_direct = 0.25;
  if (kappa <= k_direct) {
    const cplx seed(0.0, std::sqrt(p.omega_p() * p.omega_p() + 3.0 * (p.T / p.me) * kappa * kappa));
    return pole_data_at(kappa, p, seed);
  }
  const int m = (int)std::ceil(std::log(kappa / k_direct) / std::log(1.3));
  std::vector<double> ks;
  for (int j = 0; j < m; ++j) ks.push_back(k_direct * std::pow(kappa / k_direct, (double)j / m));
  ks.push_back(kappa);
  return track_branch(ks, p).node.back();
}

BohmGrossFit bohm_gross_fit(const PoleBranch& b, double kmin, double kmax) {
  std::vector<double> x, y, w;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double k = b.kappa[i];
    if (k < kmin || k > kmax) continue;
    x.push_back(k * k);
    y.push_back(b.node[i].Omega * b.node[i].Omega);
    w.push_back(1.0 / (k * k * k * k * k * k));
  }
  if (x.size() < 6)
    fail(error_kind::config, "bohm_gross_fit: window holds fewer than six nodes");

  BohmGrossFit f;
  f.n = (int)x.size();
  const auto quad = polyfit(x, y, {0, 1});
  const auto quart = polyfit(x, y, {0, 1, 2});
  // the kappa^-6 row weights pin the low end where the law is exact
  const auto quart_w = polyfit(x, y, {0, 1, 2}, &w);
  f.c0 = quart_w[0];
  f.c2 = quart_w[1];
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.max_residual = std::max(f.max_residual, std::abs(y[i] - quad[0] - quad[1] * x[i]));
    f.quartic_residual = std::max(
        f.quartic_residual, std::abs(y[i] - quart[0] - quart[1] * x[i] - quart[2] * x[i] * x[i]));
  }
  return f;
}

FlatnessResult lambda_flatness_check(const PoleBranch& b, const std::vector<int>& powers) {
  b.validate();
  FlatnessResult out;
  out.checked_kappa_max = std::sqrt(b.kappa.front() * b.kappa.back());
  std::size_t nchk = 0;
  while (nchk < b.size() && b.kappa[nchk] <= out.checked_kappa_max) ++nchk;
  if (nchk < 6) fail(error_kind::config, "lambda_flatness_check: too few low nodes");

  for (int N : powers) {
    FlatnessRow row;
    row.N = N;
    row.monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nchk; ++i) {
      const double v = b.node[i].log10_lambda - N * std::log10(b.kappa[i]);
      if (v <= prev) row.monotone = false;
      if (i == 0 || v > row.sup_log10) {
        row.sup_log10 = v;
        row.argmax_kappa = b.kappa[i];
      }
      prev = v;
    }
    row.attained_at_right = row.argmax_kappa == b.kappa[nchk - 1];
    out.rows.push_back(row);
  }

  // textbook steepness reading: ln(lambda) against 1/kappa^2
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < nchk; ++i) {
    xs.push_back(1.0 / (b.kappa[i] * b.kappa[i]));
    ys.push_back(b.node[i].log10_lambda * std::log(10.0));
  }
  const auto lf = line_fit(xs, ys);
  out.slope_inv_kappa2 = -lf.slope;
  out.slope_r2 = lf.r2;
  return out;
}

} // namespace vlr
