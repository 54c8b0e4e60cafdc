#include "unruh/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "unruh/constants.hpp"
#include "unruh/errors.hpp"

namespace unruh {

EinsteinCoefficients einstein_coefficients(const AtomModel& atom, const SpectralFunction& spectrum) {
  const double mu2 = atom.coupling * atom.coupling;
  const double w0 = atom.omega0;
  const double excess = spectrum.excess(w0);
  return {0.5 * mu2 * (2.0 * inertial_spectrum(w0) + excess), 0.5 * mu2 * excess};
}

double decay_rate(const AtomModel& atom, const SpectralFunction& spectrum) {
  const auto c = einstein_coefficients(atom, spectrum);
  return c.down + c.up;
}

double inertial_decay_rate(const AtomModel& atom) {
  return atom.coupling * atom.coupling * atom.omega0 / (8.0 * pi);
}

double equilibrium_energy(const AtomModel& atom, const SpectralFunction& spectrum) {
  const auto c = einstein_coefficients(atom, spectrum);
  return -0.5 * atom.omega0 * (c.down - c.up) / (c.down + c.up);
}

double effective_temperature(const AtomModel& atom, const SpectralFunction& spectrum) {
  const auto c = einstein_coefficients(atom, spectrum);
  if (!(c.up > 0.0))
    throw InertialNoTemperature("no spontaneous excitation (A_up = 0): temperature undefined");
  return atom.omega0 / std::log(c.down / c.up);
}

RelaxationCurve relaxation_curve(const AtomModel& atom, const SpectralFunction& spectrum, double h0,
                                 double tau_max, int n_samples, int rk4_steps) {
  const double w0 = atom.omega0;
  if (!(std::abs(h0) <= 0.5 * w0)) {
    std::ostringstream msg;
    msg << "initial energy " << h0 << " outside [-w0/2, w0/2]";
    throw DomainError(msg.str());
  }
  if (!(tau_max > 0.0) || n_samples < 1 || rk4_steps < n_samples)
    throw DomainError("relaxation curve needs tau_max > 0 and rk4_steps >= n_samples >= 1");

  const auto c = einstein_coefficients(atom, spectrum);
  RelaxationCurve out;
  out.gamma = c.down + c.up;
  out.h_eq = -0.5 * w0 * (c.down - c.up) / out.gamma;
  out.h0 = h0;

  const double drive = -0.5 * w0 * (c.down - c.up);
  auto rhs = [&](double h) { return drive - out.gamma * h; };

  const double step = tau_max / rk4_steps;
  double h = h0;
  int done = 0;
  for (int i = 0; i <= n_samples; ++i) {
    // Sample i sits at the RK4 step nearest to i * tau_max / n_samples.
    const int target = static_cast<int>(std::llround(static_cast<double>(i) * rk4_steps / n_samples));
    for (; done < target; ++done) {
      const double k1 = rhs(h);
      const double k2 = rhs(h + 0.5 * step * k1);
      const double k3 = rhs(h + 0.5 * step * k2);
      const double k4 = rhs(h + step * k3);
      h += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const double tau = target * step;
    out.tau.push_back(tau);
    out.analytic.push_back(out.h_eq + (h0 - out.h_eq) * std::exp(-out.gamma * tau));
    out.rk4.push_back(h);
  }
  return out;
}

} // namespace unruh
