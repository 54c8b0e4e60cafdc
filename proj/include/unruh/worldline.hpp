#pragma once

#include <concepts>
#include <string>
#include <variant>

namespace unruh {

/// Minkowski event (t, x, y, z) in natural units; signature (+,-,-,-).
struct Event {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Minkowski product a.b with signature (+,-,-,-).
constexpr double minkowski_dot(const Event& a, const Event& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

// ---------------------------------------------------------------------------
// Stationary trajectory kinds.
//
// Every kind is described by a handful of functions of the proper time
// difference u alone. The downstream pipeline (correlation functions,
// spectra, rates, shifts) only ever consults these, so a new stationary
// class only has to satisfy StationaryTrajectory and be added to
// Worldline::Kind.
//
// Pair quantities (time_separation, spatial_separation) are taken between
// the events at proper times +u/2 and -u/2.
// ---------------------------------------------------------------------------

/// Uniform motion along the x-axis with speed v in [0, 1).
struct Inertial {
  double speed = 0.0;

  double gamma() const;
  double proper_acceleration() const { return 0.0; }
  Event event_at(double tau) const;
  Event four_velocity(double tau) const;
  double time_separation(double u) const;
  double spatial_separation(double u) const;
  double interval_sq(double u) const;
  double interval_excess_quartic(double u) const;
};

/// Hyperbolic motion t = sinh(a tau)/a, x = cosh(a tau)/a.
struct UniformAcceleration {
  double acceleration = 1.0;

  double proper_acceleration() const { return acceleration; }
  Event event_at(double tau) const;
  Event four_velocity(double tau) const;
  /// Coordinate time between the pair events; both sit at the same x.
  double time_separation(double u) const;
  /// Zero: the pair events +-u/2 share the same spatial point.
  double spatial_separation(double u) const;
  double interval_sq(double u) const;
  double interval_excess_quartic(double u) const;
};

/// Circular motion of radius R and speed v in the x-y plane.
struct Circular {
  double radius = 1.0;
  double speed = 0.5;

  double gamma() const;
  /// Lab-frame angular velocity v/R.
  double angular_velocity() const { return speed / radius; }
  /// Angular rate per unit proper time, gamma v / R.
  double proper_angular_rate() const { return gamma() * angular_velocity(); }
  double proper_acceleration() const;
  Event event_at(double tau) const;
  Event four_velocity(double tau) const;
  double time_separation(double u) const;
  double spatial_separation(double u) const;
  double interval_sq(double u) const;
  double interval_excess_quartic(double u) const;
};

template <class T>
concept StationaryTrajectory = requires(const T& w, double s) {
  { w.proper_acceleration() } -> std::convertible_to<double>;
  { w.event_at(s) } -> std::same_as<Event>;
  { w.four_velocity(s) } -> std::same_as<Event>;
  { w.time_separation(s) } -> std::convertible_to<double>;
  { w.spatial_separation(s) } -> std::convertible_to<double>;
  { w.interval_sq(s) } -> std::convertible_to<double>;
  { w.interval_excess_quartic(s) } -> std::convertible_to<double>;
};

static_assert(StationaryTrajectory<Inertial>);
static_assert(StationaryTrajectory<UniformAcceleration>);
static_assert(StationaryTrajectory<Circular>);

/// A validated stationary worldline parametrized by proper time.
///
/// Construct through the named factories; they reject superluminal speeds
/// and non-positive accelerations or radii with DomainError.
class Worldline {
public:
  using Kind = std::variant<Inertial, UniformAcceleration, Circular>;

  static Worldline inertial(double speed = 0.0);
  static Worldline uniform_acceleration(double acceleration);
  static Worldline circular(double radius, double speed);
  /// Circular orbit with the given proper acceleration: R = v^2 gamma^2 / a.
  static Worldline circular_with_acceleration(double acceleration, double speed);

  const Kind& kind() const { return kind_; }
  bool is_inertial() const { return std::holds_alternative<Inertial>(kind_); }
  std::string name() const;
  std::string describe() const;

  Event event_at(double tau) const;
  Event four_velocity(double tau) const;
  double proper_acceleration() const;

  /// Coordinate time between the events at +-u/2 (odd in u).
  double time_separation(double u) const;
  /// |dx| between the events at +-u/2 (even in u).
  double spatial_separation(double u) const;
  /// sigma^2(u) = dt^2 - |dx|^2; depends on u only.
  double geodesic_interval_sq(double u) const;
  /// (sigma^2(u) - u^2) / u^4, evaluated without cancellation.
  /// Tends to a^2/12 as u -> 0.
  double interval_excess_quartic(double u) const;

private:
  explicit Worldline(Kind kind) : kind_(kind) {}
  Kind kind_;
};

} // namespace unruh
