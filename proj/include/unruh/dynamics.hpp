#pragma once

#include <vector>

#include "unruh/atom.hpp"
#include "unruh/spectral.hpp"

namespace unruh {

/// Spontaneous de-excitation (down) and excitation (up) rates.
struct EinsteinCoefficients {
  double down = 0.0;
  double up = 0.0;
};

/// down = (mu^2/2)[F(w0) + w0/8pi], up = (mu^2/2)[F(w0) - w0/8pi].
///
/// down - up = mu^2 w0 / 8pi on every worldline: the radiation-reaction
/// part is universal, only vacuum fluctuations feel the motion.
EinsteinCoefficients einstein_coefficients(const AtomModel& atom, const SpectralFunction& spectrum);

/// Gamma = down + up = mu^2 F(w0).
double decay_rate(const AtomModel& atom, const SpectralFunction& spectrum);

/// mu^2 w0 / 8pi, the decay rate of an atom at rest.
double inertial_decay_rate(const AtomModel& atom);

/// Stationary <H_A> = -(w0/2)(down - up)/(down + up).
double equilibrium_energy(const AtomModel& atom, const SpectralFunction& spectrum);

/// T_eff = w0 / ln(down/up). Throws InertialNoTemperature if up == 0.
double effective_temperature(const AtomModel& atom, const SpectralFunction& spectrum);

struct RelaxationCurve {
  double gamma = 0.0;
  double h_eq = 0.0;
  double h0 = 0.0;
  std::vector<double> tau;
  /// H_eq + (H0 - H_eq) exp(-Gamma tau).
  std::vector<double> analytic;
  /// Fixed-step RK4 integration of the rate equation, sampled on `tau`.
  std::vector<double> rk4;
};

/// Relaxation of <H_A> from h0 over [0, tau_max] at n_samples + 1 points.
///
/// The RK4 solution integrates
///   d<H>/dtau = -(w0/2)(down - up) - (down + up) <H>
/// with rk4_steps uniform steps and is independent of the closed form.
/// Throws DomainError if h0 is outside [-w0/2, w0/2].
RelaxationCurve relaxation_curve(const AtomModel& atom, const SpectralFunction& spectrum, double h0,
                                 double tau_max, int n_samples, int rk4_steps = 10000);

} // namespace unruh
