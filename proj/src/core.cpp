#include "vlr/core.hpp"

#include "vlr/numerics.hpp"

namespace vlr {

RadialGrid RadialGrid::geometric(std::size_t n, double kmin, double kmax, double nu0) {
  if (n < 2 || !(kmin > 0.0) || !(kmax > kmin))
    fail(error_kind::config, "RadialGrid::geometric: need n >= 2 and 0 < kmin < kmax");
  RadialGrid g;
  g.nu0 = nu0;
  g.kappa = geomspace(kmin, kmax, n);
  g.weight.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = i == 0 ? g.kappa[0] : 0.5 * (g.kappa[i - 1] + g.kappa[i]);
    const double hi = i + 1 == n ? g.kappa[n - 1] : 0.5 * (g.kappa[i] + g.kappa[i + 1]);
    g.weight[i] = hi - lo;
  }
  g.validate();
  return g;
}

RadialGrid RadialGrid::geometric_panels(double kmin, double kmax, int panels_per_decade,
                                        int gl_order, double nu0) {
  if (!(kmin > 0.0) || !(kmax > kmin) || panels_per_decade < 1)
    fail(error_kind::config, "RadialGrid::geometric_panels: bad range");
  RadialGrid g;
  g.nu0 = nu0;
  const double decades = std::log10(kmax / kmin);
  const int np = std::max(1, (int)std::ceil(decades * panels_per_decade));
  const auto& rule = gl_rule(gl_order);
  std::vector<double> x, w;
  for (int p = 0; p < np; ++p) {
    const double a = kmin * std::pow(kmax / kmin, (double)p / np);
    const double b = kmin * std::pow(kmax / kmin, (double)(p + 1) / np);
    gl_map(rule, a, b, x, w);
    g.kappa.insert(g.kappa.end(), x.begin(), x.end());
    g.weight.insert(g.weight.end(), w.begin(), w.end());
  }
  g.validate();
  return g;
}

double InitialDatum::G(double kappa, double s) const {
  const double ek = std::exp(-0.5 * kappa * kappa * kappa_width * kappa_width);
  const double es = std::exp(-0.5 * s * s * s_width * s_width);
  const double shape = kind == DatumKind::gaussian_ring ? kappa * kappa : s;
  return amplitude * shape * ek * es;
}

double InitialDatum::dG(int j, double kappa, double s) const {
  if (j < 0 || j > 12) fail(error_kind::domain, "InitialDatum::dG: order out of range");
  if (j == 0) return G(kappa, s);
  const double a = s_width * s_width;
  const double ra = s_width; // sqrt(a)
  const double ek = std::exp(-0.5 * kappa * kappa * kappa_width * kappa_width);
  const double es = std::exp(-0.5 * a * s * s);
  // d^j/ds^j e^{-a s^2/2} = (-ra)^j He_j(ra s) e^{-a s^2/2}
  auto dgauss = [&](int m) {
    return std::pow(-ra, m) * hermite_he(m, ra * s) * es;
  };
  double out;
  if (kind == DatumKind::gaussian_ring) {
    out = kappa * kappa * dgauss(j);
  } else {
    out = s * dgauss(j) + (j > 0 ? j * dgauss(j - 1) : 0.0);
  }
  return amplitude * ek * out;
}

InitialDatum make_default_datum(DatumKind kind) {
  InitialDatum d;
  d.kind = kind;
  d.amplitude = 1.0;
  d.kappa_width = 1.0;
  d.s_width = 1.0;
  return d;
}

double free_transport_density(const InitialDatum& datum, double kappa, double t) {
  return datum.G(kappa, kappa * t);
}

} // namespace vlr
