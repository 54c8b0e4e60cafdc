#include "unruh/worldline.hpp"

#include <cmath>
#include <sstream>

#include "unruh/errors.hpp"

namespace unruh {

namespace {

double lorentz_gamma(double v) { return 1.0 / std::sqrt((1.0 - v) * (1.0 + v)); }

// (y^2 - 2 + 2 cos y) / y^4 = 2 sum_m (-1)^m y^{2m} / (2m+4)!
double circular_quartic(double y) {
  const double y2 = y * y;
  if (std::abs(y) < 3.0) {
    double term = 2.0 / 24.0;
    double sum = term;
    for (int m = 1; m < 40; ++m) {
      term *= -y2 / ((2.0 * m + 3.0) * (2.0 * m + 4.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (y2 - 2.0 + 2.0 * std::cos(y)) / (y2 * y2);
}

// (2 cosh x - 2 - x^2) / x^4 = 2 sum_m x^{2m} / (2m+4)!
double hyperbolic_quartic(double x) {
  const double x2 = x * x;
  if (std::abs(x) < 3.0) {
    double term = 2.0 / 24.0;
    double sum = term;
    for (int m = 1; m < 40; ++m) {
      term *= x2 / ((2.0 * m + 3.0) * (2.0 * m + 4.0));
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  return (2.0 * std::cosh(x) - 2.0 - x2) / (x2 * x2);
}

void require_speed(double v, bool allow_zero) {
  if (!std::isfinite(v) || v >= 1.0 || v < 0.0 || (!allow_zero && v == 0.0)) {
    std::ostringstream msg;
    msg << "speed must lie in " << (allow_zero ? "[0, 1)" : "(0, 1)") << ", got " << v;
    throw DomainError(msg.str());
  }
}

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << what << " must be positive and finite, got " << value;
    throw DomainError(msg.str());
  }
}

} // namespace

// --- Inertial --------------------------------------------------------------

double Inertial::gamma() const { return lorentz_gamma(speed); }

Event Inertial::event_at(double tau) const {
  const double g = gamma();
  return {g * tau, g * speed * tau, 0.0, 0.0};
}

Event Inertial::four_velocity(double) const {
  const double g = gamma();
  return {g, g * speed, 0.0, 0.0};
}

double Inertial::time_separation(double u) const { return gamma() * u; }

double Inertial::spatial_separation(double u) const { return gamma() * speed * std::abs(u); }

double Inertial::interval_sq(double u) const { return u * u; }

double Inertial::interval_excess_quartic(double) const { return 0.0; }

// --- UniformAcceleration ---------------------------------------------------

Event UniformAcceleration::event_at(double tau) const {
  const double a = acceleration;
  return {std::sinh(a * tau) / a, std::cosh(a * tau) / a, 0.0, 0.0};
}

Event UniformAcceleration::four_velocity(double tau) const {
  const double a = acceleration;
  return {std::cosh(a * tau), std::sinh(a * tau), 0.0, 0.0};
}

double UniformAcceleration::time_separation(double u) const {
  return 2.0 / acceleration * std::sinh(0.5 * acceleration * u);
}

double UniformAcceleration::spatial_separation(double) const { return 0.0; }

double UniformAcceleration::interval_sq(double u) const {
  const double half = 2.0 / acceleration * std::sinh(0.5 * acceleration * u);
  return half * half;
}

double UniformAcceleration::interval_excess_quartic(double u) const {
  const double a = acceleration;
  return a * a * hyperbolic_quartic(a * u);
}

// --- Circular --------------------------------------------------------------

double Circular::gamma() const { return lorentz_gamma(speed); }

double Circular::proper_acceleration() const {
  const double g = gamma();
  return speed * speed * g * g / radius;
}

Event Circular::event_at(double tau) const {
  const double phase = proper_angular_rate() * tau;
  return {gamma() * tau, radius * std::cos(phase), radius * std::sin(phase), 0.0};
}

Event Circular::four_velocity(double tau) const {
  const double rate = proper_angular_rate();
  const double phase = rate * tau;
  const double tangential = radius * rate; // = v gamma
  return {gamma(), -tangential * std::sin(phase), tangential * std::cos(phase), 0.0};
}

double Circular::time_separation(double u) const { return gamma() * u; }

double Circular::spatial_separation(double u) const {
  return 2.0 * radius * std::abs(std::sin(0.5 * proper_angular_rate() * u));
}

double Circular::interval_sq(double u) const {
  const double y = proper_angular_rate() * u;
  if (std::abs(y) < 3.0) {
    const double u2 = u * u;
    return u2 + u2 * u2 * interval_excess_quartic(u);
  }
  const double g = gamma();
  const double s = 2.0 * radius * std::sin(0.5 * y);
  return g * g * u * u - s * s;
}

double Circular::interval_excess_quartic(double u) const {
  // sigma^2 - u^2 = R^2 (y^2 - 4 sin^2(y/2)) with y = rate * u, and R rate^2 = a.
  const double a = proper_acceleration();
  return a * a * circular_quartic(proper_angular_rate() * u);
}

// --- Worldline -------------------------------------------------------------

Worldline Worldline::inertial(double speed) {
  require_speed(speed, true);
  return Worldline(Inertial{speed});
}

Worldline Worldline::uniform_acceleration(double acceleration) {
  require_positive(acceleration, "acceleration");
  return Worldline(UniformAcceleration{acceleration});
}

Worldline Worldline::circular(double radius, double speed) {
  require_positive(radius, "radius");
  require_speed(speed, false);
  return Worldline(Circular{radius, speed});
}

Worldline Worldline::circular_with_acceleration(double acceleration, double speed) {
  require_positive(acceleration, "acceleration");
  require_speed(speed, false);
  const double g2 = 1.0 / ((1.0 - speed) * (1.0 + speed));
  return Worldline(Circular{speed * speed * g2 / acceleration, speed});
}

std::string Worldline::name() const {
  struct Visitor {
    std::string operator()(const Inertial&) const { return "inertial"; }
    std::string operator()(const UniformAcceleration&) const { return "uniform"; }
    std::string operator()(const Circular&) const { return "circular"; }
  };
  return std::visit(Visitor{}, kind_);
}

std::string Worldline::describe() const {
  std::ostringstream out;
  out.precision(17);
  struct Visitor {
    std::ostringstream& out;
    void operator()(const Inertial& w) const { out << "inertial(speed=" << w.speed << ")"; }
    void operator()(const UniformAcceleration& w) const {
      out << "uniform(accel=" << w.acceleration << ")";
    }
    void operator()(const Circular& w) const {
      out << "circular(radius=" << w.radius << ", speed=" << w.speed << ")";
    }
  };
  std::visit(Visitor{out}, kind_);
  return out.str();
}

Event Worldline::event_at(double tau) const {
  return std::visit([tau](const auto& w) { return w.event_at(tau); }, kind_);
}

Event Worldline::four_velocity(double tau) const {
  return std::visit([tau](const auto& w) { return w.four_velocity(tau); }, kind_);
}

double Worldline::proper_acceleration() const {
  return std::visit([](const auto& w) { return w.proper_acceleration(); }, kind_);
}

double Worldline::time_separation(double u) const {
  return std::visit([u](const auto& w) { return w.time_separation(u); }, kind_);
}

double Worldline::spatial_separation(double u) const {
  return std::visit([u](const auto& w) { return w.spatial_separation(u); }, kind_);
}

double Worldline::geodesic_interval_sq(double u) const {
  return std::visit([u](const auto& w) { return w.interval_sq(u); }, kind_);
}

double Worldline::interval_excess_quartic(double u) const {
  return std::visit([u](const auto& w) { return w.interval_excess_quartic(u); }, kind_);
}

} // namespace unruh
