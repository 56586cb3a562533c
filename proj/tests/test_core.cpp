#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures_data.hpp"
#include "vlr/core.hpp"
#include "vlr/numerics.hpp"

using namespace vlr;

TEST_CASE("datum derivatives match frozen references") {
  for (const auto& row : fx::datum_derivatives) {
    InitialDatum d;
    d.kind = row.kind == 0 ? DatumKind::gaussian_ring : DatumKind::gaussian_dipole;
    d.amplitude = row.amp;
    d.kappa_width = row.wk;
    d.s_width = row.ws;
    CAPTURE(row.kind);
    CAPTURE(row.j);
    CAPTURE(row.kappa);
    CAPTURE(row.s);
    const double got = d.dG(row.j, row.kappa, row.s);
    CHECK(std::abs(got - row.dG) <= 1e-13 + 1e-12 * std::abs(row.dG));
  }
}

TEST_CASE("derivatives agree with finite differences of the previous order") {
  const InitialDatum datums[] = {make_default_datum(DatumKind::gaussian_ring),
                                 make_default_datum(DatumKind::gaussian_dipole),
                                 {DatumKind::gaussian_dipole, 1.5, 1.1, 0.9}};
  const double pts[][2] = {{0.2, 0.0}, {0.2, 0.37}, {0.7, 2.5}, {1.3, -1.1}};
  for (const auto& d : datums)
    for (auto [kappa, s] : pts)
      for (int j = 1; j <= 6; ++j) {
        const double h = 0.01;
        // five point stencil, O(h^4)
        const double fd = (-d.dG(j - 1, kappa, s + 2 * h) + 8 * d.dG(j - 1, kappa, s + h) -
                           8 * d.dG(j - 1, kappa, s - h) + d.dG(j - 1, kappa, s - 2 * h)) /
                          (12 * h);
        const double ex = d.dG(j, kappa, s);
        CAPTURE(j);
        CAPTURE(kappa);
        CAPTURE(s);
        CHECK(std::abs(fd - ex) <= 1e-6 * std::max(1.0, std::abs(ex)));
      }
}

TEST_CASE("zeroth derivative is the datum itself and the streaming ray evaluates it") {
  const auto d = make_default_datum(DatumKind::gaussian_ring);
  for (double kappa : {0.05, 0.4, 1.7})
    for (double t : {0.0, 0.3, 7.0}) {
      CHECK(d.dG(0, kappa, kappa * t) == d.G(kappa, kappa * t));
      CHECK(free_transport_density(d, kappa, t) == d.G(kappa, kappa * t));
    }
}

TEST_CASE("background marginal and its closed constants") {
  MaxwellianBackground bg;
  bg.params = PhysicalParams{};
  // density normalization of the marginal
  double mass = 0.0, curv = 0.0;
  const int n = 4000;
  for (int i = 0; i <= n; ++i) {
    const double r = -12.0 + 24.0 * i / n;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    mass += w * bg.f_marginal(r) * 24.0 / n;
    curv += w * (r == 0.0 ? -bg.params.n0 / std::pow(bg.params.vth(), 3) / std::sqrt(2 * M_PI)
                          : bg.f_marginal_deriv(r) / r) *
            24.0 / n;
  }
  CHECK(mass == doctest::Approx(bg.params.n0).epsilon(1e-10));
  CHECK(curv == doctest::Approx(bg.mean_curvature_constant()).epsilon(1e-10));
  // Fourier side at zero frequency recovers the density
  CHECK(bg.fhat0(0.0) == doctest::Approx(bg.params.n0).epsilon(1e-15));
}

TEST_CASE("physical parameter derived scales") {
  PhysicalParams p;
  CHECK(p.vth() == 1.0);
  CHECK(p.omega_p() == 1.0);
  CHECK(p.debye_length() == 1.0);
  p.T = 4.0;
  p.me = 1.0;
  p.n0 = 2.0;
  p.w0 = 0.5;
  CHECK(p.vth() == doctest::Approx(2.0));
  CHECK(p.omega_p() == doctest::Approx(1.0));
  CHECK(p.debye_length() == doctest::Approx(2.0));
  PhysicalParams bad;
  bad.T = -1.0;
  CHECK_THROWS_AS(bad.validate(), const error&);
}

TEST_CASE("radial grids are increasing with consistent weights") {
  const auto g = RadialGrid::geometric_panels(1e-4, 6.0, 8, 12, 0.7);
  g.validate();
  double len = 0.0;
  for (double w : g.weight) {
    CHECK(w > 0.0);
    len += w;
  }
  CHECK(len == doctest::Approx(6.0 - 1e-4).epsilon(1e-12));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g.kappa[i] > g.kappa[i - 1]);

  const auto t = RadialGrid::geometric(128, 1e-3, 3.0, 0.7);
  t.validate();
  double len2 = 0.0;
  for (double w : t.weight) len2 += w;
  CHECK(len2 == doctest::Approx(3.0 - 1e-3).epsilon(1e-12));

  RadialGrid bad;
  bad.kappa = {0.2, 0.1};
  bad.weight = {1.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), const error&);
  CHECK_THROWS_AS(RadialGrid::geometric(1, 0.1, 1.0, 0.7), const error&);
}

TEST_CASE("quadrature weights integrate smooth profiles on the grid") {
  const auto g = RadialGrid::geometric_panels(1e-4, 6.0, 8, 12, 0.7);
  double got = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    got += g.weight[i] * g.kappa[i] * g.kappa[i] * std::exp(-0.5 * g.kappa[i] * g.kappa[i]);
  // integral_0^b k^2 exp(-k^2/2) dk = sqrt(pi/2) erf(b/sqrt 2) - b exp(-b^2/2);
  // the missing [0, 1e-4] piece is ~3e-13
  const double b = 6.0;
  const double exact = std::sqrt(M_PI / 2.0) * std::erf(b / std::sqrt(2.0)) - b * std::exp(-0.5 * b * b);
  CHECK(got == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("error kinds map to distinct exit codes") {
  CHECK(error(error_kind::config, "x").exit_code() == 2);
  CHECK(error(error_kind::accuracy, "x").exit_code() == 3);
  CHECK(error(error_kind::resolution, "x").exit_code() == 4);
  CHECK(error(error_kind::rootfind, "x").exit_code() == 5);
  CHECK(error(error_kind::branch_jump, "x").exit_code() == 5);
}
