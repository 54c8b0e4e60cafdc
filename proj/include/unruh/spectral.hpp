#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "unruh/atom.hpp"
#include "unruh/worldline.hpp"

namespace unruh {

/// Large-speed constants of the circular spectrum:
/// A = 1 + (3/5)(v gamma)^-2, B = 1 - (1/5)(v gamma)^-2.
struct HighVelocityConstants {
  double A = 1.0;
  double B = 1.0;
  /// The expansion is trustworthy only for v >= 0.85.
  bool valid = true;

  /// The ultrarelativistic limit A = B = 1.
  static HighVelocityConstants ultrarelativistic() { return {1.0, 1.0, true}; }
};

/// Throws DomainError unless 0 < v < 1.
HighVelocityConstants high_velocity_constants(double speed);

inline constexpr double kHighVelocityThreshold = 0.85;

enum class SpectralMethod {
  ClosedFormInertial,
  ClosedFormCircularHighV,
  ClosedFormUniformAccel,
  NumericSubtracted,
  Custom,
};

std::string_view to_string(SpectralMethod method);

struct NumericSpectralOptions {
  /// Explicit integration range is tail_factor / min(|omega|, a).
  double tail_factor = 200.0;
  /// Trailing half-periods averaged for the tail.
  int tail_window = 8;
  double rel_tol = 1e-12;
  /// Absolute tolerance in units of a (the acceleration scale).
  double abs_tol = 1e-15;
  /// Upper bound on the averaged-tail disagreement, relative to |omega|/8pi.
  double max_tail_spread = 1e-8;
};

/// F(omega) = int_0^inf C^F(u) cos(omega u) du along a worldline.
///
/// Every rate, Einstein coefficient and level shift derives from this
/// object. It is immutable after construction and cheap to copy; numeric
/// evaluations are independent of each other and safe to run concurrently.
///
/// Always F(omega) = |omega|/8pi + excess(omega), where the first term is
/// the inertial spectrum. excess() is the acceleration-induced part and is
/// computed directly, never as a difference.
class SpectralFunction {
public:
  /// |omega| / 8 pi.
  static SpectralFunction inertial();
  /// |omega|/8pi + (a A / 16 sqrt3 pi) exp(-2 sqrt3 B |omega| / a).
  static SpectralFunction circular_high_velocity(double acceleration, HighVelocityConstants ab);
  /// As above with a and (A, B) read off a circular worldline.
  static SpectralFunction circular_high_velocity(const Worldline& circular);
  /// (|omega|/8pi) coth(pi |omega| / a).
  static SpectralFunction uniform_acceleration(double acceleration);
  /// |omega|/8pi + int_0^inf cf_subtracted(u) cos(omega u) du by quadrature.
  static SpectralFunction numeric(const Worldline& w, NumericSpectralOptions options = {});
  /// The closed form matching the worldline kind.
  static SpectralFunction closed_form(const Worldline& w);
  /// A user-supplied total spectrum F(omega); used for fault injection and
  /// for plugging in spectra computed elsewhere.
  static SpectralFunction custom(std::string label, std::function<double(double)> total,
                                 double acceleration = 0.0);

  /// F(omega); throws DomainError for omega == 0 on the numeric method.
  double operator()(double omega) const { return value(omega); }
  double value(double omega) const;
  /// F(omega) - |omega|/8pi.
  double excess(double omega) const;

  SpectralMethod method() const { return method_; }
  double acceleration() const { return acceleration_; }
  const std::optional<HighVelocityConstants>& high_velocity() const { return constants_; }
  const std::optional<Worldline>& worldline() const { return worldline_; }
  std::string describe() const;

private:
  SpectralFunction() = default;

  SpectralMethod method_ = SpectralMethod::ClosedFormInertial;
  double acceleration_ = 0.0;
  std::optional<HighVelocityConstants> constants_;
  std::optional<Worldline> worldline_;
  NumericSpectralOptions numeric_;
  std::function<double(double)> custom_;
  std::string label_;
};

/// |omega| / 8 pi.
double inertial_spectrum(double omega);

/// Radiation-reaction contribution -(mu^2/4pi) omega^2 |M|^2 = -(mu^2/16pi) omega^2.
/// The same on every timelike worldline.
double gamma_rr(const AtomModel& atom, double omega);

/// Vacuum-fluctuation contribution -2 mu^2 omega |M|^2 F(|omega|), odd in omega.
double gamma_vf(const AtomModel& atom, const SpectralFunction& spectrum, double omega);

struct RateBreakdown {
  Level level = Level::Minus;
  double gamma_vf = 0.0;
  double gamma_rr = 0.0;
  /// gamma_vf + gamma_rr.
  double gamma_total = 0.0;
};

/// Rate of change of <H_A> for an atom prepared in `level`.
RateBreakdown total_rate(const AtomModel& atom, const SpectralFunction& spectrum, Level level);

} // namespace unruh
