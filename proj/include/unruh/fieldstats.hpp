#pragma once

#include <functional>
#include <span>
#include <vector>

#include "unruh/worldline.hpp"

namespace unruh {

/// Positive i-epsilon regulator, in units of proper time.
class Epsilon {
public:
  /// Throws DomainError unless value > 0 and finite.
  explicit Epsilon(double value);

  /// Default regulator for a problem with gap omega0 and acceleration a:
  /// 1e-3 * min(1/omega0, 1/a). a == 0 means no acceleration scale.
  static Epsilon for_scales(double omega0, double acceleration);

  /// Throws DomainError if this regulator exceeds 1e-3 * min(1/omega0, 1/a).
  void require_small_against(double omega0, double acceleration) const;

  double value() const { return value_; }

private:
  double value_;
};

/// Symmetric field correlation C^F(u; eps) along w:
/// -(1/4 pi^2) Re[1 / ((dt + i eps)^2 - |dx|^2)].
double cf_field(const Worldline& w, double u, Epsilon eps);

/// eps -> 0 limit of cf_field for u != 0: -1 / (4 pi^2 sigma^2(u)).
double cf_field_limit(const Worldline& w, double u);

/// C^F along an inertial worldline, sigma^2 = u^2.
double cf_inertial(double u, Epsilon eps);
double cf_inertial_limit(double u);

/// eps -> 0 limit of C^F - C^F_inert = (1/4 pi^2)(1/u^2 - 1/sigma^2(u)).
///
/// Regular everywhere; equals a^2 / (48 pi^2) at u = 0 and decays like
/// 1/u^2 for large u.
double cf_subtracted(const Worldline& w, double u);

/// Field susceptibility chi^F(u; eps) as the real coefficient of i:
/// (1/4 pi^2) Im[1 / ((dt + i eps)^2 - |dx|^2)], odd in u.
double chif_field(const Worldline& w, double u, Epsilon eps);

/// Smooth test profile with its derivative and the half-width outside
/// which it is negligible.
struct TestFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double center = 0.0;
  double support_halfwidth = 1.0;
  /// Scale of |f'|; used as the floor for relative comparisons.
  double derivative_scale = 1.0;

  /// amplitude * exp(-(t - center)^2 / (2 width^2)).
  static TestFunction gaussian(double center, double width, double amplitude = 1.0);
};

struct DistributionalCheck {
  /// eps -> 0 extrapolation of int f(tau') chi^F(tau - tau'; eps) dtau'.
  double lhs = 0.0;
  /// f'(tau) / (4 pi), the coefficient of i in (i/4pi) f'(tau).
  double rhs = 0.0;
  std::vector<double> epsilons;
  std::vector<double> raw;            // integral at each epsilon
  std::vector<double> extrapolations; // successive Richardson estimates
  bool used_three_point = false;
};

/// Applies chi^F along w to the test function f at time tau and
/// extrapolates eps -> 0. `eps_seq` must be strictly decreasing with at
/// least three entries; an empty span selects a default ladder.
///
/// Throws NonConvergence if neither the two-point nor the three-point
/// Richardson estimates settle to rel_tol.
DistributionalCheck chif_distributional_check(const Worldline& w, const TestFunction& f,
                                              double tau, std::span<const double> eps_seq = {},
                                              double rel_tol = 1e-3);

} // namespace unruh
