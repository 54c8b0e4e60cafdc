#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "unruh/errors.hpp"
#include "unruh/spectral.hpp"

using namespace unruh;
using std::numbers::pi;

TEST_CASE("high-velocity constants") {
  const auto c = high_velocity_constants(0.85);
  CHECK(c.A == doctest::Approx(oracle::a_085).epsilon(1e-14));
  CHECK(c.B == doctest::Approx(oracle::b_085).epsilon(1e-14));
  CHECK(c.valid);
  CHECK_FALSE(high_velocity_constants(0.5).valid);
  CHECK(high_velocity_constants(0.999999).A == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(high_velocity_constants(1.0), DomainError);
  CHECK_THROWS_AS(high_velocity_constants(0.0), DomainError);
}

TEST_CASE("inertial spectrum is w/8pi on both paths") {
  CHECK(SpectralFunction::inertial().value(2.0) == doctest::Approx(2.0 / (8.0 * pi)));
  const auto numeric = SpectralFunction::numeric(Worldline::inertial(0.5));
  CHECK(numeric.value(2.0) == inertial_spectrum(2.0));
  CHECK(numeric.excess(0.3) == 0.0);
}

TEST_CASE("numeric circular excess against frozen oscillatory quadrature") {
  const auto s09 = SpectralFunction::numeric(Worldline::circular_with_acceleration(1.0, 0.9));
  CHECK(s09.excess(0.2) == doctest::Approx(oracle::circ_v09_w02).epsilon(1e-8));
  CHECK(s09.excess(1.0) == doctest::Approx(oracle::circ_v09_w1).epsilon(1e-8));
  CHECK(s09.excess(5.0) == doctest::Approx(oracle::circ_v09_w5).epsilon(1e-6));
  const auto s05 = SpectralFunction::numeric(Worldline::circular_with_acceleration(1.0, 0.5));
  CHECK(s05.excess(1.0) == doctest::Approx(oracle::circ_v05_w1).epsilon(1e-8));
}

TEST_CASE("numeric uniform acceleration reproduces the Planckian excess") {
  const auto numeric = SpectralFunction::numeric(Worldline::uniform_acceleration(1.0));
  const auto closed = SpectralFunction::uniform_acceleration(1.0);
  for (double w : {0.2, 0.5, 1.0, 2.0})
    CHECK(numeric.excess(w) == doctest::Approx(closed.excess(w)).epsilon(1e-6));
  // (w/8pi) coth(pi w / a)
  CHECK(closed.value(0.7) == doctest::Approx(0.7 / (8.0 * pi) / std::tanh(pi * 0.7)).epsilon(1e-14));
}

TEST_CASE("circular closed form is even in w and decays exponentially") {
  const auto s = SpectralFunction::circular_high_velocity(2.0, {1.0, 1.0, true});
  CHECK(s.value(-1.5) == s.value(1.5));
  CHECK(s.excess(0.0) == doctest::Approx(2.0 / (16.0 * std::sqrt(3.0) * pi)));
  CHECK(s.excess(1.0) / s.excess(2.0) == doctest::Approx(std::exp(std::sqrt(3.0))));
}

TEST_CASE("rates: radiation reaction universal, vacuum fluctuations not") {
  const AtomModel atom{1.0, 0.5};
  const auto inertial = SpectralFunction::inertial();
  const auto circular = SpectralFunction::closed_form(Worldline::circular_with_acceleration(1.0, 0.95));
  for (Level lv : {Level::Plus, Level::Minus}) {
    CHECK(total_rate(atom, inertial, lv).gamma_rr == total_rate(atom, circular, lv).gamma_rr);
    CHECK(total_rate(atom, inertial, lv).gamma_rr < 0.0);
  }
  CHECK(total_rate(atom, inertial, Level::Minus).gamma_total == doctest::Approx(0.0));
  CHECK(total_rate(atom, circular, Level::Minus).gamma_total > 0.0);
  CHECK(total_rate(atom, inertial, Level::Plus).gamma_total ==
        doctest::Approx(-0.25 / (8.0 * pi)));
}

TEST_CASE("numeric spectrum refuses w = 0") {
  const auto s = SpectralFunction::numeric(Worldline::uniform_acceleration(1.0));
  CHECK_THROWS_AS(s.value(0.0), DomainError);
}

TEST_CASE("custom spectrum for fault injection") {
  const auto s = SpectralFunction::custom("biased", [](double w) { return 1.1 * inertial_spectrum(w); });
  CHECK(s.method() == SpectralMethod::Custom);
  CHECK(s.excess(1.0) == doctest::Approx(0.1 / (8.0 * pi)));
}

TEST_CASE("F exceeds w/8pi on accelerated worldlines over a frequency grid") {
  for (const auto& w : {Worldline::uniform_acceleration(2.0), Worldline::circular_with_acceleration(1.0, 0.7)}) {
    const auto s = SpectralFunction::numeric(w);
    for (double omega = 0.1; omega <= 3.0; omega *= 1.5) CHECK(s.excess(omega) > 0.0);
  }
}
