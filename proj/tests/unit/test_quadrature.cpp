#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "unruh/quadrature.hpp"

using namespace unruh;

TEST_CASE("adaptive Gauss-Kronrod on smooth and peaked integrands") {
  auto r = quad::integrate([](double x) { return std::exp(-x) * std::sin(x); }, 0.0, 20.0, 1e-15,
                           1e-13);
  CHECK(r.converged);
  const double exact = 0.5 * (1.0 - std::exp(-20.0) * (std::sin(20.0) + std::cos(20.0)));
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-13));

  r = quad::integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, 1e-14, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 / 1e-2 * std::atan(1.0 / 1e-2)).epsilon(1e-11));
}

TEST_CASE("breakpoints split the interval") {
  const double pts[] = {0.0, 1.0, 3.0};
  const auto r = quad::integrate_breakpoints([](double x) { return std::abs(x - 1.0); }, pts,
                                             1e-15, 1e-13);
  CHECK(r.value == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("Richardson step removes the leading error term") {
  // f(h) = 1 + 3h: linear error, ratio 2.
  CHECK(quad::richardson(1.0 + 3.0 * 0.2, 1.0 + 3.0 * 0.1, 2.0, 1) == doctest::Approx(1.0));
  CHECK(quad::richardson(1.0 + 0.04, 1.0 + 0.01, 2.0, 2) == doctest::Approx(1.0));
}

TEST_CASE("averaged tail of oscillating partial sums") {
  std::vector<double> sums;
  for (int n = 1; n <= 40; ++n) sums.push_back(std::numbers::ln2 + (n % 2 ? 1.0 : -1.0) / (n + 10.0));
  double spread = 0.0;
  const double v = quad::averaged_limit(sums, &spread);
  CHECK(std::abs(v - std::numbers::ln2) < 1e-4);
  CHECK(spread >= 0.0);
}

TEST_CASE("cosine transform of a Lorentzian") {
  // int_0^inf cos(w u) / (1 + u^2) du = (pi/2) e^{-w}
  quad::CosineTransformOptions opt;
  opt.upper = 2000.0;
  for (double w : {0.5, 1.0, 3.0}) {
    const auto r = quad::cosine_transform([](double u) { return 1.0 / (1.0 + u * u); }, w, opt);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5 * std::numbers::pi * std::exp(-w)).epsilon(1e-7));
  }
}

TEST_CASE("principal value around a simple pole") {
  // PV int_0^2 e^x / (x - 1) dx = e (Ei(1) - Ei(-1))
  const double pole[] = {1.0};
  const auto r = quad::principal_value([](double x) { return std::exp(x) / (x - 1.0); }, 0.0, 2.0,
                                       pole, 1e-3, 1e-15, 1e-13);
  CHECK(r.converged);
  const double exact = std::exp(1.0) * (std::expint(1.0) - std::expint(-1.0));
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-10));
}
