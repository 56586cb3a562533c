#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures_data.hpp"
#include "vlr/faddeeva.hpp"

using namespace vlr;

TEST_CASE("scaled complex error function matches frozen references") {
  for (const auto& row : fx::faddeeva) {
    const cplx z(row.zr, row.zi);
    const cplx ref(row.wr, row.wi);
    const cplx got = faddeeva_w(z);
    CAPTURE(row.zr);
    CAPTURE(row.zi);
    CHECK(std::abs(got - ref) <= 5e-15 * std::abs(ref));
  }
}

TEST_CASE("real part on the real axis is the Gaussian") {
  for (double x : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 3.7, 5.0, 9.3, 15.9, 17.0, 44.0}) {
    const cplx w = faddeeva_w(cplx(x, 0.0));
    CHECK(w.real() == doctest::Approx(std::exp(-x * x)).epsilon(5e-14));
    const cplx wm = faddeeva_w(cplx(-x, 0.0));
    CHECK(wm.real() == doctest::Approx(std::exp(-x * x)).epsilon(5e-14));
    // odd imaginary part
    CHECK(wm.imag() == doctest::Approx(-w.imag()).epsilon(5e-15));
  }
}

TEST_CASE("reflection identities hold across the plane") {
  const cplx zs[] = {{0.3, 0.2},  {1.7, 0.01}, {4.0, 3.0},   {11.0, 0.4},
                     {17.0, 2.0}, {0.0, 6.0},  {2.25, 0.125}};
  for (cplx z : zs) {
    const cplx w = faddeeva_w(z);
    // w(-conj z) = conj(w(z))
    const cplx w2 = faddeeva_w(-std::conj(z));
    CHECK(std::abs(w2 - std::conj(w)) <= 1e-14 * std::abs(w));
    // lower half plane continuation w(z) + w(-z) = 2 exp(-z^2)
    const cplx w3 = faddeeva_w(-z);
    CHECK(std::abs(w + w3 - 2.0 * std::exp(-z * z)) <=
          1e-13 * (std::abs(w) + std::abs(w3) + std::abs(2.0 * std::exp(-z * z))));
  }
}

TEST_CASE("special values") {
  CHECK(faddeeva_w(cplx(0.0, 0.0)) == cplx(1.0, 0.0));
  // w(i y) is real: e^{y^2} erfc(y)
  for (double y : {0.3, 1.0, 4.0, 20.0}) {
    const cplx w = faddeeva_w(cplx(0.0, y));
    CHECK(std::abs(w.imag()) <= 1e-16 * std::abs(w.real()));
    CHECK(w.real() > 0.0);
  }
  // asymptotic decay along the imaginary axis: w(iy) ~ 1/(sqrt(pi) y)
  const double y = 90.0;
  CHECK(faddeeva_w(cplx(0.0, y)).real() ==
        doctest::Approx(1.0 / (std::sqrt(M_PI) * y)).epsilon(1e-3));
}
