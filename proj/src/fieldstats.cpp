#include "unruh/fieldstats.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "unruh/constants.hpp"
#include "unruh/errors.hpp"
#include "unruh/quadrature.hpp"

namespace unruh {

namespace {

constexpr double kInvFourPiSq = 1.0 / (4.0 * pi * pi);

// 1 / ((dt + i eps)^2 - |dx|^2) written through sigma^2 = dt^2 - |dx|^2.
std::complex<double> regulated_inverse(double sigma_sq, double dt, double eps) {
  return 1.0 / std::complex<double>(sigma_sq - eps * eps, 2.0 * eps * dt);
}

double min_scale(double omega0, double acceleration) {
  double scale = 1.0 / omega0;
  if (acceleration > 0.0) scale = std::min(scale, 1.0 / acceleration);
  return scale;
}

} // namespace

Epsilon::Epsilon(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << "regulator epsilon must be positive, got " << value;
    throw DomainError(msg.str());
  }
}

Epsilon Epsilon::for_scales(double omega0, double acceleration) {
  if (!(omega0 > 0.0)) throw DomainError("omega0 must be positive");
  return Epsilon(1e-3 * min_scale(omega0, acceleration));
}

void Epsilon::require_small_against(double omega0, double acceleration) const {
  const double bound = 1e-3 * min_scale(omega0, acceleration);
  if (value_ > bound) {
    std::ostringstream msg;
    msg << "epsilon " << value_ << " exceeds 1e-3 of the shortest physical scale (" << bound
        << ")";
    throw DomainError(msg.str());
  }
}

double cf_field(const Worldline& w, double u, Epsilon eps) {
  const auto inv = regulated_inverse(w.geodesic_interval_sq(u), w.time_separation(u), eps.value());
  return -kInvFourPiSq * inv.real();
}

double cf_field_limit(const Worldline& w, double u) {
  return -kInvFourPiSq / w.geodesic_interval_sq(u);
}

double cf_inertial(double u, Epsilon eps) {
  const auto inv = regulated_inverse(u * u, u, eps.value());
  return -kInvFourPiSq * inv.real();
}

double cf_inertial_limit(double u) { return -kInvFourPiSq / (u * u); }

double cf_subtracted(const Worldline& w, double u) {
  // With q = (sigma^2 - u^2)/u^4:  1/u^2 - 1/sigma^2 = q / (1 + u^2 q).
  const double q = w.interval_excess_quartic(u);
  const double uq = u * u * q;
  if (uq <= 1.0) return kInvFourPiSq * q / (1.0 + uq);
  // Large separations: sigma^2 may overflow, so factor out 1/u^2.
  return kInvFourPiSq / (u * u) / (1.0 + 1.0 / uq);
}

double chif_field(const Worldline& w, double u, Epsilon eps) {
  const auto inv = regulated_inverse(w.geodesic_interval_sq(u), w.time_separation(u), eps.value());
  return kInvFourPiSq * inv.imag();
}

TestFunction TestFunction::gaussian(double center, double width, double amplitude) {
  if (!(width > 0.0)) throw DomainError("gaussian width must be positive");
  TestFunction f;
  f.value = [=](double t) {
    const double z = (t - center) / width;
    return amplitude * std::exp(-0.5 * z * z);
  };
  f.derivative = [=](double t) {
    const double z = (t - center) / width;
    return -amplitude * z / width * std::exp(-0.5 * z * z);
  };
  f.center = center;
  f.support_halfwidth = 12.0 * width;
  f.derivative_scale = std::abs(amplitude) / (width * std::sqrt(std::numbers::e));
  return f;
}

DistributionalCheck chif_distributional_check(const Worldline& w, const TestFunction& f,
                                              double tau, std::span<const double> eps_seq,
                                              double rel_tol) {
  DistributionalCheck out;
  const double a = w.proper_acceleration();
  double scale = f.support_halfwidth / 12.0;
  if (a > 0.0) scale = std::min(scale, 1.0 / a);

  if (eps_seq.empty()) {
    for (double factor : {4e-3, 2e-3, 1e-3, 5e-4}) out.epsilons.push_back(factor * scale);
  } else {
    out.epsilons.assign(eps_seq.begin(), eps_seq.end());
  }
  if (out.epsilons.size() < 3) throw DomainError("epsilon sequence needs at least three entries");
  for (std::size_t i = 0; i < out.epsilons.size(); ++i) {
    Epsilon check(out.epsilons[i]);
    if (i > 0 && !(out.epsilons[i] < out.epsilons[i - 1]))
      throw DomainError("epsilon sequence must be strictly decreasing");
  }

  // u = tau - tau' runs over the support of f shifted by tau.
  const double u_lo = std::min(tau - f.center - f.support_halfwidth, -scale);
  const double u_hi = std::max(tau - f.center + f.support_halfwidth, scale);

  const double floor = f.derivative_scale / (4.0 * pi);
  for (double eps_value : out.epsilons) {
    const Epsilon eps(eps_value);
    std::vector<double> points{u_lo, 0.0, u_hi};
    for (double step = eps_value; step < std::max(-u_lo, u_hi); step *= 4.0) {
      if (-step > u_lo) points.push_back(-step);
      if (step < u_hi) points.push_back(step);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto integrand = [&](double u) { return f.value(tau - u) * chif_field(w, u, eps); };
    const auto r = quad::integrate_breakpoints(integrand, points, 1e-12 * floor, 1e-11);
    if (!r.converged) throw QuadratureFailure("chi^F test-function integral did not converge");
    out.raw.push_back(r.value);
  }
  out.rhs = f.derivative(tau) / (4.0 * pi);

  const auto& e = out.epsilons;
  const auto& v = out.raw;
  const std::size_t n = e.size();
  auto close = [&](double x, double y) {
    return std::abs(x - y) <= rel_tol * std::max({std::abs(x), std::abs(y), floor});
  };

  // Two-point linear extrapolation to eps = 0.
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.extrapolations.push_back((e[i] * v[i + 1] - e[i + 1] * v[i]) / (e[i] - e[i + 1]));
  const std::size_t m = out.extrapolations.size();
  if (close(out.extrapolations[m - 1], out.extrapolations[m - 2])) {
    out.lhs = out.extrapolations[m - 1];
    return out;
  }

  // Fallback: quadratic through three consecutive points, evaluated at 0.
  auto quadratic_at_zero = [&](std::size_t i) {
    const double x0 = e[i], x1 = e[i + 1], x2 = e[i + 2];
    const double l0 = x1 * x2 / ((x0 - x1) * (x0 - x2));
    const double l1 = x0 * x2 / ((x1 - x0) * (x1 - x2));
    const double l2 = x0 * x1 / ((x2 - x0) * (x2 - x1));
    return l0 * v[i] + l1 * v[i + 1] + l2 * v[i + 2];
  };
  if (n >= 4) {
    const double q1 = quadratic_at_zero(n - 4);
    const double q2 = quadratic_at_zero(n - 3);
    out.extrapolations.push_back(q1);
    out.extrapolations.push_back(q2);
    if (close(q1, q2)) {
      out.lhs = q2;
      out.used_three_point = true;
      return out;
    }
  }
  std::ostringstream msg;
  msg.precision(10);
  msg << "epsilon extrapolation did not settle on " << w.describe() << ": last estimates "
      << out.extrapolations[m - 2] << ", " << out.extrapolations[m - 1];
  throw NonConvergence(msg.str());
}

} // namespace unruh
