#include "vlr/numerics.hpp"

#include <map>
#include <mutex>

namespace vlr {

namespace {

GLRule compute_gl(int n) {
  // Newton on P_n with the Chebyshev-like initial guess; converges in < 8
  // iterations for every n used here.
  GLRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

} // namespace

const GLRule& gl_rule(int order) {
  if (order < 2 || order > 256) fail(error_kind::config, "gl_rule: order out of range");
  static std::map<int, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
  return it->second;
}

void gl_map(const GLRule& rule, double a, double b, std::vector<double>& x,
            std::vector<double>& w) {
  const std::size_t n = rule.x.size();
  x.resize(n);
  w.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = mid + half * rule.x[i];
    w[i] = half * rule.w[i];
  }
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  if (n < 2) fail(error_kind::config, "linspace: need n >= 2");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * (double)i / (double)(n - 1);
  return v;
}

std::vector<double> geomspace(double a, double b, std::size_t n) {
  if (n < 2 || !(a > 0.0) || !(b > 0.0)) fail(error_kind::config, "geomspace: bad range");
  std::vector<double> v(n);
  const double r = std::log(b / a);
  for (std::size_t i = 0; i < n; ++i) v[i] = a * std::exp(r * (double)i / (double)(n - 1));
  v.front() = a;
  v.back() = b;
  return v;
}

std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<int>& powers,
                            const std::vector<double>* row_weights) {
  const std::size_t m = x.size(), k = powers.size();
  if (m != y.size() || m < k || k == 0)
    fail(error_kind::config, "polyfit: need at least as many samples as coefficients");
  if (row_weights && row_weights->size() != m)
    fail(error_kind::config, "polyfit: weight length mismatch");

  std::vector<double> A(m * k), b(y);
  for (std::size_t i = 0; i < m; ++i) {
    const double wi = row_weights ? (*row_weights)[i] : 1.0;
    for (std::size_t j = 0; j < k; ++j) A[i * k + j] = wi * std::pow(x[i], powers[j]);
    b[i] *= wi;
  }

  // Householder QR, then back substitution on the k x k triangle.
  for (std::size_t j = 0; j < k; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < m; ++i) norm = std::hypot(norm, A[i * k + j]);
    if (norm < 1e-300) fail(error_kind::accuracy, "polyfit: rank deficient design matrix");
    double alpha = A[j * k + j] > 0 ? -norm : norm;
    std::vector<double> v(m - j);
    v[0] = A[j * k + j] - alpha;
    for (std::size_t i = j + 1; i < m; ++i) v[i - j] = A[i * k + j];
    double vnorm2 = 0.0;
    for (double t : v) vnorm2 += t * t;
    if (vnorm2 < 1e-300) {
      A[j * k + j] = alpha;
      continue;
    }
    for (std::size_t c = j; c < k; ++c) {
      double dot = 0.0;
      for (std::size_t i = j; i < m; ++i) dot += v[i - j] * A[i * k + c];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = j; i < m; ++i) A[i * k + c] -= f * v[i - j];
    }
    double dot = 0.0;
    for (std::size_t i = j; i < m; ++i) dot += v[i - j] * b[i];
    const double f = 2.0 * dot / vnorm2;
    for (std::size_t i = j; i < m; ++i) b[i] -= f * v[i - j];
  }

  std::vector<double> c(k);
  for (std::size_t jj = k; jj-- > 0;) {
    double s = b[jj];
    for (std::size_t c2 = jj + 1; c2 < k; ++c2) s -= A[jj * k + c2] * c[c2];
    const double d = A[jj * k + jj];
    if (std::abs(d) < 1e-13 * std::abs(A[0]))
      fail(error_kind::accuracy, "polyfit: ill conditioned triangle");
    c[jj] = s / d;
  }
  return c;
}

LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y) {
  auto c = polyfit(x, y, {0, 1});
  LineFit f;
  f.intercept = c[0];
  f.slope = c[1];
  double ybar = 0.0;
  for (double v : y) ybar += v;
  ybar /= (double)y.size();
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = f.intercept + f.slope * x[i];
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

double hermite_he(int j, double x) {
  if (j < 0) fail(error_kind::domain, "hermite_he: negative order");
  double h0 = 1.0;
  if (j == 0) return h0;
  double h1 = x;
  for (int n = 1; n < j; ++n) {
    const double h2 = x * h1 - n * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) fail(error_kind::config, "fft_pow2: size not a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / (double)len * (inverse ? 1.0 : -1.0);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j], v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& v : a) v /= (double)n;
}

} // namespace vlr
