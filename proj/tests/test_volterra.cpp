#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vlr/poles.hpp"
#include "vlr/volterra.hpp"

using namespace vlr;

namespace {

const PhysicalParams P{};

// Plain-loop reference march, no shared code with the library implementation.
std::vector<double> oracle_march(const InitialDatum& datum, double kappa, const TimeGrid& g) {
  std::vector<double> rho(g.size()), K(g.size());
  for (int i = 0; i <= g.n; ++i) {
    const double t = g.t(i);
    K[i] = -P.w0 * t * P.n0 * std::exp(-0.5 * kappa * kappa * t * t);
  }
  rho[0] = datum.G(kappa, 0.0);
  for (int i = 1; i <= g.n; ++i) {
    double acc = 0.5 * K[i] * rho[0];
    for (int m = 1; m < i; ++m) acc += K[i - m] * rho[m];
    rho[i] = datum.G(kappa, kappa * g.t(i)) + g.dt * acc;
  }
  return rho;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

} // namespace

TEST_CASE("direct march agrees with a plain-loop oracle") {
  const InitialDatum datum = make_default_datum(DatumKind::gaussian_dipole);
  const TimeGrid g = TimeGrid::to(30.0, 0.01);
  for (double kappa : {0.3, 0.7, 1.5}) {
    const auto ref = oracle_march(datum, kappa, g);
    const DensityTrace tr = solve_volterra_direct(datum, P, kappa, g);
    CAPTURE(kappa);
    CHECK(max_abs_diff(tr.re, ref) <= 1e-12);
    for (double v : tr.im) CHECK(v == 0.0);
  }
}

TEST_CASE("kernel shape") {
  CHECK(memory_kernel(P, 0.5, 0.0) == 0.0);
  CHECK(memory_kernel(P, 0.5, 2.0) ==
        doctest::Approx(-2.0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(memory_kernel(P, 2.0, 1.0) < 0.0);
}

TEST_CASE("resolvent reconstruction inverts the direct march") {
  const InitialDatum datum = make_default_datum(DatumKind::gaussian_dipole);
  const TimeGrid g = TimeGrid::to(50.0, 0.01);
  for (double kappa : {0.4, 1.0}) {
    const ResolventTrace R = solve_resolvent_direct(P, kappa, g);
    const DensityTrace direct = solve_volterra_direct(datum, P, kappa, g);
    const DensityTrace rec = reconstruct_density(datum, P, kappa, R);
    // same triangular system solved two ways; only roundoff separates them
    CHECK(max_abs_diff(direct.re, rec.re) <= 5e-13);
  }
}

TEST_CASE("march converges at second order in dt") {
  const InitialDatum datum = make_default_datum(DatumKind::gaussian_dipole);
  const double kappa = 0.5, T = 40.0;
  const TimeGrid gref = TimeGrid::to(T, 0.02 / 8.0);
  const auto ref = solve_volterra_direct(datum, P, kappa, gref);
  auto err_at = [&](double dt) {
    const TimeGrid g = TimeGrid::to(T, dt);
    const auto tr = solve_volterra_direct(datum, P, kappa, g);
    const int stride = (int)std::lround(dt / gref.dt);
    double m = 0.0;
    for (int i = 0; i <= g.n; ++i) m = std::max(m, std::abs(tr.re[i] - ref.re[i * stride]));
    return m;
  };
  const double e1 = err_at(0.02), e2 = err_at(0.01);
  CHECK(e1 / e2 >= 3.5);
  CHECK(e1 / e2 <= 4.6);
}

TEST_CASE("density envelope decays at the spectral rate") {
  const InitialDatum datum = make_default_datum(DatumKind::gaussian_dipole);
  const PoleBranch b = track_branch({0.3, 0.4, 0.5, 0.6, 0.7}, P);
  for (std::size_t i : {2, 4}) {
    const double kappa = b.kappa[i];
    const TimeGrid g = TimeGrid::to(100.0, 0.01);
    const DensityTrace tr = solve_volterra_direct(datum, P, kappa, g);
    std::vector<double> t(tr.re.size()), v(tr.re.size());
    for (int j = 0; j <= g.n; ++j) t[j] = g.t(j), v[j] = tr.abs(j);
    const EnvelopeFit f = fit_envelope_rate(t, v, 10.0, 60.0);
    CAPTURE(kappa);
    CHECK(f.peaks >= 10);
    CHECK(std::abs(f.rate - b.node[i].lambda) <= 0.02 * b.node[i].lambda);
    CHECK(f.r2 > 0.999);
  }
}

TEST_CASE("resolvent small time expansion") {
  const double kappa = 0.3;
  const TimeGrid g = TimeGrid::to(0.05, 2e-4);
  const ResolventTrace R = solve_resolvent_direct(P, kappa, g);
  const double c3 = 0.5 * kappa * kappa + 1.0 / 6.0;
  const int i1 = (int)std::lround(0.01 / g.dt);
  CHECK(std::abs(R.R[i1] + 0.01) <= 2e-3 * 0.01);
  const int i4 = (int)std::lround(0.04 / g.dt);
  const double c3_est = (R.R[i4] + 0.04) / (0.04 * 0.04 * 0.04);
  CHECK(c3_est == doctest::Approx(c3).epsilon(0.02));
}

TEST_CASE("zero coupling reduces to free transport") {
  const InitialDatum datum = make_default_datum(DatumKind::gaussian_dipole);
  const TimeGrid g = TimeGrid::to(10.0, 0.01);
  const double kappa = 0.8;
  const DensityTrace tr = solve_volterra_direct(datum, P, kappa, g, 0.0);
  for (int i = 0; i <= g.n; ++i)
    CHECK(tr.re[i] == free_transport_density(datum, kappa, g.t(i)));
}

TEST_CASE("grid and fit validation") {
  CHECK_THROWS_AS((void)TimeGrid::to(10.005, 0.01), error);
  CHECK_THROWS_AS((void)TimeGrid::to(-1.0, 0.01), error);
  const InitialDatum datum = make_default_datum(DatumKind::gaussian_dipole);
  const TimeGrid g = TimeGrid::to(1.0, 0.01);
  CHECK_THROWS_AS((void)solve_volterra_direct(datum, P, -0.5, g), error);
  // a pure decay has no interior peaks to fit
  std::vector<double> t, v;
  for (int i = 0; i < 100; ++i) t.push_back(0.1 * i), v.push_back(std::exp(-0.1 * i));
  try {
    (void)fit_envelope_rate(t, v, 0.0, 10.0);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == error_kind::resolution);
    CHECK(e.exit_code() == 4);
  }
}
