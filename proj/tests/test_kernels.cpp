#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "vlr/kernels.hpp"

using namespace vlr;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// plain loop oracles, written independently of the kernel implementations
double oracle_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
double oracle_dot_rev(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += a[a.size() - 1 - i] * b[i];
  return s;
}

} // namespace

TEST_CASE("scalar kernels match plain loop oracles") {
  const auto& ops = kernels::scalar_ops();
  const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 12, 13, 15, 16, 17, 31, 64, 10007};
  unsigned seed = 42;
  for (std::size_t n : sizes) {
    CAPTURE(n);
    auto a = random_vec(n, seed++);
    auto b = random_vec(n, seed++);
    auto bi = random_vec(n, seed++);
    const double tol = 1e-13 * (1.0 + (double)n);

    CHECK(std::abs(ops.dot(a.data(), b.data(), n) - oracle_dot(a, b)) <= tol);
    CHECK(std::abs(ops.dot_rev(a.data(), b.data(), n) - oracle_dot_rev(a, b)) <= tol);

    double re = -1, im = -1;
    ops.dot_rev2(a.data(), b.data(), bi.data(), n, &re, &im);
    CHECK(std::abs(re - oracle_dot_rev(a, b)) <= tol);
    CHECK(std::abs(im - oracle_dot_rev(a, bi)) <= tol);

    auto y = random_vec(n, seed++);
    auto y2 = y;
    ops.axpy(0.37, a.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i) y2[i] += 0.37 * a[i];
    for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(y2[i]).epsilon(1e-15));
  }
}

TEST_CASE("simd kernels agree with the scalar reference") {
  const auto* simd = kernels::avx2_ops();
  if (!simd) return; // build or cpu without the wide path
  const auto& ref = kernels::scalar_ops();
  const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 12, 13, 15, 16, 17, 31, 64, 10007};
  unsigned seed = 7;
  for (std::size_t n : sizes) {
    CAPTURE(n);
    auto a = random_vec(n, seed++);
    auto b = random_vec(n, seed++);
    auto bi = random_vec(n, seed++);
    const double tol = 1e-13 * (1.0 + (double)n);

    CHECK(std::abs(simd->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <= tol);
    CHECK(std::abs(simd->dot_rev(a.data(), b.data(), n) - ref.dot_rev(a.data(), b.data(), n)) <= tol);

    double r1 = 0, i1 = 0, r2 = 0, i2 = 0;
    simd->dot_rev2(a.data(), b.data(), bi.data(), n, &r1, &i1);
    ref.dot_rev2(a.data(), b.data(), bi.data(), n, &r2, &i2);
    CHECK(std::abs(r1 - r2) <= tol);
    CHECK(std::abs(i1 - i2) <= tol);

    auto y = random_vec(n, seed++);
    auto y2 = y;
    simd->axpy(-1.25, a.data(), y.data(), n);
    ref.axpy(-1.25, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - y2[i]) <= 1e-15);
  }
}

TEST_CASE("active kernel set is one of the registered implementations") {
  const auto& ops = kernels::active();
  const bool is_scalar = std::string(ops.name) == "scalar";
  const bool is_avx2 = std::string(ops.name) == "avx2";
  CHECK((is_scalar || is_avx2));
  if (is_avx2) CHECK(kernels::avx2_ops() != nullptr);
}
