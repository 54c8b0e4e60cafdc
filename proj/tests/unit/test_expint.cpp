#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unruh/errors.hpp"
#include "unruh/expint.hpp"

using namespace unruh;

namespace {

void check_close(double got, double want, double rel) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) <= rel * std::abs(want));
}

} // namespace

TEST_CASE("Ei against frozen high-precision values") {
  const double s = 2.0 * std::sqrt(3.0);
  check_close(expint_ei(1.0), oracle::ei_1, 1e-14);
  check_close(expint_ei(-1.0), oracle::ei_m1, 1e-14);
  check_close(expint_ei(0.5), oracle::ei_half, 1e-14);
  check_close(expint_ei(-0.5), oracle::ei_mhalf, 1e-14);
  check_close(expint_ei(s), oracle::ei_2sqrt3, 1e-14);
  check_close(expint_ei(-s), oracle::ei_m2sqrt3, 1e-13);
  check_close(expint_ei(5.0), oracle::ei_5, 1e-14);
  check_close(expint_ei(-5.0), oracle::ei_m5, 1e-13);
  check_close(expint_ei(6.0), oracle::ei_6, 1e-14);
  check_close(expint_ei(-6.0), oracle::ei_m6, 1e-13);
  check_close(expint_ei(6.5), oracle::ei_6p5, 1e-14);
  check_close(expint_ei(-6.5), oracle::ei_m6p5, 1e-13);
  check_close(expint_ei(10.0), oracle::ei_10, 1e-14);
  check_close(expint_ei(-10.0), oracle::ei_m10, 1e-13);
  check_close(expint_ei(30.0), oracle::ei_30, 1e-13);
  check_close(expint_ei(-30.0), oracle::ei_m30, 1e-13);
  check_close(expint_ei(50.0), oracle::ei_50, 1e-13);
  check_close(expint_ei(-50.0), oracle::ei_m50, 1e-13);
  check_close(expint_ei(1e-8), oracle::ei_1em8, 1e-14);
  check_close(expint_ei(-1e-8), oracle::ei_m1em8, 1e-14);
}

TEST_CASE("absolute accuracy 1e-12 against std::expint on a dense grid") {
  for (double x = -40.0; x <= 40.0; x += 0.0625) {
    if (x == 0.0) continue;
    const double ref = std::expint(x);
    INFO("x = " << x);
    CHECK(std::abs(expint_ei(x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("E1 and scaled variants are consistent") {
  for (double x : {0.1, 1.0, 3.0, 7.0, 20.0, 60.0}) {
    check_close(expint_e1(x), -expint_ei(-x), 1e-14);
    check_close(expint_e1_scaled(x), std::exp(x) * expint_e1(x), 1e-13);
    if (x < 700.0) check_close(expint_ei_scaled(x), std::exp(-x) * expint_ei(x), 1e-13);
  }
  // Scaled forms stay finite where the raw ones overflow or underflow.
  CHECK(std::isfinite(expint_ei_scaled(1000.0)));
  CHECK(expint_e1_scaled(1000.0) == doctest::Approx(1.0 / 1000.0).epsilon(1e-3));
}

TEST_CASE("Ei sign and monotonicity") {
  double prev = expint_ei(0.01);
  for (double x = 0.02; x < 20.0; x += 0.01) {
    const double v = expint_ei(x);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(expint_ei(0.4) > 0.0);
  CHECK(expint_ei(2.0 * std::sqrt(3.0)) > 0.0);
}

TEST_CASE("alternating asymptotic partial sums bracket e^x E1(x) for x > 6") {
  // e^x E1(x) = -e^x Ei(-x) ~ sum (-1)^k k!/x^{k+1}; consecutive partial
  // sums straddle the value while the terms still decrease.
  for (double x : {8.0, 15.0, 40.0}) {
    const double scaled = expint_e1_scaled(x);
    double term = 1.0 / x;
    double sum = term;
    for (int k = 1; k < static_cast<int>(x) - 1; ++k) {
      term *= -k / x;
      const double next = sum + term;
      CHECK((scaled - sum) * (scaled - next) <= 1e-28 * scaled * scaled);
      sum = next;
    }
  }
}

TEST_CASE("Ei is undefined at zero") {
  CHECK_THROWS_AS(expint_ei(0.0), DomainError);
}
