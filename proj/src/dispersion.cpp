#include "vlr/dispersion.hpp"

#include "vlr/faddeeva.hpp"
#include "vlr/numerics.hpp"

namespace vlr {

namespace {

constexpr double SQRT_2PI = 2.5066282746310005024;
constexpr double SQRT_PI_2 = 1.2533141373155002512;
constexpr double U_SWITCH = 12.0; // asymptotic series beyond this |u|

// Joint evaluation of I and I2 for Im u >= 0; real-symmetric continuation
// handles the rest. Beyond U_SWITCH the alternating (2m-1)!! series applies
// and crossing Re u <= 0 adds the sqrt(2 pi) exp(u^2/2) continuation term
// (half weight exactly on the axis).
void I_pair_upper(cplx u, cplx& I, cplx& I2) {
  if (std::abs(u) < U_SWITCH) {
    const cplx M = SQRT_PI_2 * faddeeva_w(cplx(0.0, 1.0 / std::sqrt(2.0)) * u);
    I = 1.0 - u * M;
    I2 = M - u * I;
    return;
  }
  const cplx v = 1.0 / (u * u);
  cplx c = v;       // (-1)^{m+1} (2m-1)!! v^m
  cplx sI = c;
  cplx sI2 = 2.0 * c / u;
  double prev = std::abs(c);
  for (int m = 2; m <= 60; ++m) {
    c *= -(2.0 * m - 1.0) * v;
    const double mag = std::abs(c);
    if (mag > prev) break; // asymptotic tail minimum
    prev = mag;
    sI += c;
    sI2 += (2.0 * m) * c / u;
    if (mag < 1e-18 * std::abs(sI)) break;
  }
  if (u.real() < 0.0 || u.real() == 0.0) {
    const double half = u.real() == 0.0 ? 0.5 : 1.0;
    const cplx refl = SQRT_2PI * std::exp(0.5 * u * u) * half;
    sI += -refl * u;
    sI2 += refl * (1.0 + u * u);
  }
  I = sI;
  I2 = sI2;
}

void I_pair(cplx u, cplx& I, cplx& I2) {
  if (u.imag() < 0.0) {
    cplx a, b;
    I_pair_upper(std::conj(u), a, b);
    I = std::conj(a);
    I2 = std::conj(b);
    return;
  }
  I_pair_upper(u, I, I2);
}

double check_kappa(double kappa) {
  if (!(kappa > 0.0)) fail(error_kind::domain, "dispersion: kappa must be positive");
  return kappa;
}

} // namespace

cplx dispersion_I(cplx u) {
  cplx a, b;
  I_pair(u, a, b);
  return a;
}

cplx dispersion_I2(cplx u) {
  cplx a, b;
  I_pair(u, a, b);
  return b;
}

cplx eval_L_closed(cplx z, double kappa, const PhysicalParams& p) {
  check_kappa(kappa);
  const double kv = kappa * p.vth();
  const double pref = p.w0 * p.n0 / (kv * kv);
  return -pref * dispersion_I(z / kv);
}

cplx eval_dzL(cplx z, double kappa, const PhysicalParams& p) {
  check_kappa(kappa);
  const double kv = kappa * p.vth();
  const double pref = p.w0 * p.n0 / (kv * kv);
  return pref / kv * dispersion_I2(z / kv);
}

QuadratureEval eval_L_quadrature_detailed(cplx z, double kappa, const PhysicalParams& p) {
  check_kappa(kappa);
  const double kv = kappa * p.vth();
  const cplx u = z / kv;
  const double a = std::max(0.0, -u.real());
  if (a > 37.0)
    fail(error_kind::domain, "eval_L_quadrature: Re z too negative for the direct transform");
  // integrand s exp(-s^2/2 - u s); support ends where the exponent passed -42
  const double smax = a + std::sqrt(a * a + 84.0);
  const double wp = std::min(0.5, 4.0 / (1.0 + std::abs(u.imag())));

  const GLRule& rule = gl_rule(24);
  std::vector<double> x, w;
  int nodes = 0;
  auto integrate = [&](double width) {
    const int np = (int)std::ceil(smax / width);
    cplx acc = 0.0;
    for (int ip = 0; ip < np; ++ip) {
      gl_map(rule, smax * ip / np, smax * (ip + 1) / np, x, w);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = x[i];
        acc += w[i] * s * std::exp(-0.5 * s * s) * std::exp(-u * s);
        ++nodes;
      }
    }
    return acc;
  };

  const cplx coarse = integrate(wp);
  const cplx fine = integrate(0.5 * wp);
  const double pref = p.w0 * p.n0 / (kv * kv);

  QuadratureEval out;
  out.value = -pref * fine;
  out.error_estimate = pref * std::abs(fine - coarse);
  out.nodes = nodes;
  if (out.error_estimate > 1e-9 * std::max(1.0, std::abs(out.value)))
    fail(error_kind::accuracy, "eval_L_quadrature: error estimate above budget");
  return out;
}

cplx eval_L_quadrature(cplx z, double kappa, const PhysicalParams& p) {
  return eval_L_quadrature_detailed(z, kappa, p).value;
}

cplx eval_L_plemelj(double omega, double kappa, const PhysicalParams& p) {
  check_kappa(kappa);
  const double vth = p.vth();
  const double r0 = omega / (kappa * vth);
  auto g = [](double r) { return -r * std::exp(-0.5 * r * r); };

  const GLRule& rule = gl_rule(24);
  std::vector<double> x, w;
  // symmetric window around the singularity: the difference quotient is smooth
  double sym = 0.0;
  for (int ip = 0; ip < 4; ++ip) {
    gl_map(rule, 0.25 * ip, 0.25 * (ip + 1), x, w);
    for (std::size_t i = 0; i < x.size(); ++i)
      sym += w[i] * (g(r0 + x[i]) - g(r0 - x[i])) / x[i];
  }
  // plain tails out to where the Gaussian is dead
  const double S = 12.0 + std::abs(r0);
  double tails = 0.0;
  auto tail = [&](double a, double b) {
    const int np = std::max(1, (int)std::ceil((b - a) / 0.5));
    for (int ip = 0; ip < np; ++ip) {
      gl_map(rule, a + (b - a) * ip / np, a + (b - a) * (ip + 1) / np, x, w);
      for (std::size_t i = 0; i < x.size(); ++i) tails += w[i] * g(x[i]) / (x[i] - r0);
    }
  };
  tail(r0 + 1.0, r0 + S);
  tail(r0 - S, r0 - 1.0);

  const double pv = sym + tails;
  const double res = M_PI * r0 * std::exp(-0.5 * r0 * r0); // -i pi g'(r0) residue half turn
  const double pref = p.w0 * p.n0 / (kappa * kappa * vth * vth * SQRT_2PI);
  return pref * cplx(pv, res);
}

cplx eval_L_asymptotic(cplx z, double kappa, const PhysicalParams& p, int order) {
  check_kappa(kappa);
  if (order != 2 && order != 4)
    fail(error_kind::config, "eval_L_asymptotic: order must be 2 or 4");
  const cplx z2 = z * z;
  cplx val = -p.w0 * p.n0 / z2;
  if (order == 4) val *= 1.0 - 3.0 * (p.T / p.me) * kappa * kappa / z2;
  return val;
}

namespace {

void scan_point(const PhysicalParams& p, double kappa, cplx z, PenroseResult& best,
                bool on_disc) {
  const double v = std::abs(1.0 - eval_L_closed(z, kappa, p));
  if (best.argmin_kappa == 0.0 || v < best.min_abs) {
    best.min_abs = v;
    best.argmin_z = z;
    best.argmin_kappa = kappa;
    best.on_disc_boundary = on_disc;
  }
}

} // namespace

PenroseResult penrose_margin_high(const PhysicalParams& p, double nu0, double kappa_max,
                                  double lambda_scale, double im_max, int n_re, int n_im,
                                  int n_kappa) {
  if (!(nu0 > 0.0) || !(kappa_max > nu0) || n_re < 2 || n_im < 2 || n_kappa < 2)
    fail(error_kind::config, "penrose_margin_high: bad scan region");
  PenroseResult best;
  const auto ks = linspace(nu0, kappa_max, n_kappa);
  for (double k : ks) {
    const auto res = linspace(-lambda_scale * k, 1.0, n_re);
    const auto ims = linspace(-im_max, im_max, n_im);
    for (double re : res)
      for (double im : ims) scan_point(p, k, cplx(re, im), best, false);
  }
  return best;
}

PenroseResult penrose_margin_low(const PhysicalParams& p, double kappa_min, double nu0,
                                 double eps, double delta_prime, int n_re, int n_im,
                                 int n_kappa) {
  if (!(kappa_min > 0.0) || !(nu0 > kappa_min) || !(eps > 0.0) || !(delta_prime > 0.0))
    fail(error_kind::config, "penrose_margin_low: bad scan region");
  PenroseResult best;
  const double wp = p.omega_p();
  const auto ks = geomspace(kappa_min, nu0, n_kappa);
  for (double k : ks) {
    const auto res = linspace(-delta_prime * k, 1.0, n_re);
    const auto ims = linspace(-(wp + 2.0 * eps), wp + 2.0 * eps, n_im);
    for (double re : res)
      for (double im : ims) {
        const cplx z(re, im);
        if (std::abs(z - cplx(0.0, wp)) < eps || std::abs(z + cplx(0.0, wp)) < eps) continue;
        scan_point(p, k, z, best, false);
      }
    // the infimum is typically attained on the excluded disc boundaries
    const int nb = 256;
    for (int s = -1; s <= 1; s += 2)
      for (int i = 0; i < nb; ++i) {
        const double th = 2.0 * M_PI * i / nb;
        const cplx z = cplx(0.0, s * wp) + eps * cplx(std::cos(th), std::sin(th));
        if (z.real() < -delta_prime * k) continue;
        scan_point(p, k, z, best, true);
      }
  }
  return best;
}

} // namespace vlr
