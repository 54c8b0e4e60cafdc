#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unruh/errors.hpp"
#include "unruh/worldline.hpp"

using namespace unruh;

TEST_CASE("four-velocity is normalized on every worldline") {
  for (const auto& w : {Worldline::inertial(0.6), Worldline::uniform_acceleration(2.5),
                        Worldline::circular(0.7, 0.95)}) {
    for (double tau : {-3.0, -0.1, 0.0, 0.4, 5.0}) {
      const auto u = w.four_velocity(tau);
      // u.u = 1 is a difference of O(u_t^2) terms; scale the tolerance.
      CHECK(std::abs(minkowski_dot(u, u) - 1.0) <= 1e-14 * u.t * u.t);
    }
  }
}

TEST_CASE("circular geodesic interval matches the high-precision value") {
  const auto w = Worldline::circular(1.0, 0.5);
  CHECK(w.geodesic_interval_sq(1.0) ==
        doctest::Approx(oracle::sigma2_circular_r1_v05_u1).epsilon(1e-14));
}

TEST_CASE("interval is stationary: depends only on the proper-time difference") {
  const auto w = Worldline::circular(1.3, 0.8);
  for (double t0 : {-2.0, 0.3, 7.0}) {
    const auto a = w.event_at(t0 + 0.9);
    const auto b = w.event_at(t0);
    const Event d{a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    CHECK(minkowski_dot(d, d) == doctest::Approx(w.geodesic_interval_sq(0.9)).epsilon(1e-12));
  }
}

TEST_CASE("sigma^2 exceeds u^2 off inertial, equals it on inertial") {
  const auto inertial = Worldline::inertial(0.3);
  CHECK(inertial.geodesic_interval_sq(2.0) == doctest::Approx(4.0));
  for (const auto& w : {Worldline::uniform_acceleration(1.0), Worldline::circular(1.0, 0.9)}) {
    for (double u : {1e-4, 0.01, 0.5, 3.0, 20.0}) CHECK(w.geodesic_interval_sq(u) > u * u);
  }
}

TEST_CASE("quartic excess tends to a^2/12 at small u") {
  const auto circ = Worldline::circular_with_acceleration(2.0, 0.9);
  const auto ua = Worldline::uniform_acceleration(2.0);
  for (const auto& w : {circ, ua}) {
    CHECK(w.proper_acceleration() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(w.interval_excess_quartic(1e-6) == doctest::Approx(4.0 / 12.0).epsilon(1e-10));
    // The series and direct branches must join smoothly.
    const double below = w.interval_excess_quartic(2.999 / 2.0);
    const double above = w.interval_excess_quartic(3.001 / 2.0);
    CHECK(below == doctest::Approx(above).epsilon(1e-3));
  }
}

TEST_CASE("circular kinematics") {
  const auto w = Worldline::circular(2.0, 0.6);
  const auto& c = std::get<Circular>(w.kind());
  CHECK(c.gamma() == doctest::Approx(1.25));
  CHECK(w.proper_acceleration() == doctest::Approx(0.36 * 1.5625 / 2.0));
  CHECK(c.proper_angular_rate() == doctest::Approx(0.6 * 1.25 / 2.0));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(Worldline::circular(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Worldline::circular(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(Worldline::uniform_acceleration(0.0), DomainError);
  CHECK_THROWS_AS(Worldline::inertial(1.2), DomainError);
}
