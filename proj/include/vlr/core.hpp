#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlr {

using cplx = std::complex<double>;

// Failure taxonomy shared by the library and the CLI exit codes.
enum class error_kind {
  config = 2,      // bad user input, invalid grids, inconsistent options
  domain = 2,      // argument outside the mathematical domain of an operation
  accuracy = 3,    // a result failed its internal accuracy estimate
  resolution = 4,  // a grid is too coarse for the requested quantity
  rootfind = 5,    // an iteration failed to converge
  branch_jump = 5, // a tracked root left its isolation disc
};

class error : public std::runtime_error {
public:
  error(error_kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  error_kind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

private:
  error_kind kind_;
};

[[noreturn]] inline void fail(error_kind k, const std::string& msg) { throw error(k, msg); }

// Background plasma constants. Defaults are the nondimensional preset in
// which the thermal speed, Debye length and plasma frequency are all one.
struct PhysicalParams {
  double n0 = 1.0;   // background density
  double T = 1.0;    // temperature
  double me = 1.0;   // particle mass
  double w0 = 1.0;   // interaction strength (4*pi*e^2 scale)

  double vth() const { return std::sqrt(T / me); }
  double omega_p() const { return std::sqrt(w0 * n0 / me); }
  double debye_length() const { return vth() / omega_p(); }

  void validate() const {
    if (!(n0 > 0.0) || !(T > 0.0) || !(me > 0.0) || !(w0 > 0.0))
      fail(error_kind::config, "PhysicalParams: n0, T, me, w0 must all be positive");
  }
};

// Maxwellian background together with the marginals the linear theory uses.
struct MaxwellianBackground {
  PhysicalParams params;

  // Fourier transform of the velocity profile, evaluated at |xi|.
  double fhat0(double xi) const {
    const double a = params.vth() * xi;
    return params.n0 * std::exp(-0.5 * a * a);
  }
  // One dimensional marginal along a fixed direction and its derivative.
  double f_marginal(double r) const {
    const double v = params.vth();
    const double x = r / v;
    return params.n0 / (std::sqrt(2.0 * M_PI) * v) * std::exp(-0.5 * x * x);
  }
  double f_marginal_deriv(double r) const {
    const double v = params.vth();
    return -r / (v * v) * f_marginal(r);
  }
  // integral of f_marginal'(r)/r over the line, closed form
  double mean_curvature_constant() const { return -params.n0 * params.me / params.T; }
};

// Radial wavenumber grid with quadrature weights and the frequency cut nu0
// separating the oscillator treatment (below) from the direct one (above).
struct RadialGrid {
  std::vector<double> kappa;
  std::vector<double> weight;
  double nu0 = 0.7;

  std::size_t size() const { return kappa.size(); }

  void validate() const {
    if (kappa.empty()) fail(error_kind::config, "RadialGrid: empty grid");
    if (kappa.size() != weight.size())
      fail(error_kind::config, "RadialGrid: node/weight length mismatch");
    if (kappa.front() <= 0.0) fail(error_kind::config, "RadialGrid: kappa must be positive");
    for (std::size_t i = 1; i < kappa.size(); ++i)
      if (kappa[i] <= kappa[i - 1])
        fail(error_kind::config, "RadialGrid: kappa must be strictly increasing");
    if (!(nu0 > 0.0)) fail(error_kind::config, "RadialGrid: nu0 must be positive");
  }

  // Geometric node placement with trapezoid weights.
  static RadialGrid geometric(std::size_t n, double kmin, double kmax, double nu0);
  // Panels geometric in kappa, Gauss-Legendre nodes inside each panel.
  static RadialGrid geometric_panels(double kmin, double kmax, int panels_per_decade,
                                     int gl_order, double nu0);
};

enum class DatumKind { gaussian_ring, gaussian_dipole };

// Isotropic initial datum G(kappa, s): the Fourier profile along the ray
// direction, with separable Gaussian factors in kappa and s.
//   gaussian_ring:   a * kappa^2 * exp(-(kappa*wk)^2/2) * exp(-(s*ws)^2/2)
//   gaussian_dipole: a * s      * exp(-(kappa*wk)^2/2) * exp(-(s*ws)^2/2)
struct InitialDatum {
  DatumKind kind = DatumKind::gaussian_ring;
  double amplitude = 1.0;
  double kappa_width = 1.0;
  double s_width = 1.0;

  void validate() const {
    if (!(amplitude != 0.0) || !(kappa_width > 0.0) || !(s_width > 0.0))
      fail(error_kind::config, "InitialDatum: amplitude nonzero, widths positive");
  }

  double G(double kappa, double s) const;
  // j-th derivative in s, closed form via Hermite recursion; j in [0, 12]
  double dG(int j, double kappa, double s) const;
};

InitialDatum make_default_datum(DatumKind kind);

// Density of the force-free flow: the datum evaluated on the streaming ray.
double free_transport_density(const InitialDatum& datum, double kappa, double t);

} // namespace vlr
