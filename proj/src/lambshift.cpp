#include "unruh/lambshift.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "unruh/constants.hpp"
#include "unruh/dynamics.hpp"
#include "unruh/errors.hpp"
#include "unruh/expint.hpp"
#include "unruh/quadrature.hpp"

namespace unruh {

namespace {

void require_cutoff(const AtomModel& atom, double cutoff) {
  if (!(cutoff >= 10.0 * atom.omega0) || !std::isfinite(cutoff)) {
    std::ostringstream msg;
    msg << "cutoff " << cutoff << " must be at least 10 omega0 (" << 10.0 * atom.omega0 << ")";
    throw CutoffTooSmall(msg.str());
  }
}

} // namespace

double shift_rr_per_level(const AtomModel& atom, Level level, double cutoff) {
  atom.validate();
  require_cutoff(atom, cutoff);
  const double w_ab = atom.transition_frequency(level);
  // Gamma_rr(w)/w is linear in w; take its slope to stay finite at w = 0.
  const double slope = gamma_rr(atom, 1.0);
  auto integrand = [&](double w) {
    return -(1.0 / (4.0 * pi)) * slope * w * (1.0 / (w + w_ab) + 1.0 / (w - w_ab));
  };
  const double poles[] = {-atom.omega0, atom.omega0};
  const double scale = atom.coupling * atom.coupling * cutoff;
  const auto r = quad::principal_value(integrand, -cutoff, cutoff, poles, 1e-3 * atom.omega0,
                                       1e-15 * scale, 1e-13);
  if (!r.converged) throw QuadratureFailure("radiation-reaction shift quadrature did not converge");
  return r.value;
}

double shift_rr_per_level(const AtomModel& atom, Level level, const Worldline&, double cutoff) {
  return shift_rr_per_level(atom, level, cutoff);
}

double shift_rr_closed_form(const AtomModel& atom, double cutoff) {
  require_cutoff(atom, cutoff);
  const double mu2 = atom.coupling * atom.coupling;
  const double w0 = atom.omega0;
  return mu2 / (32.0 * pi * pi) * (2.0 * cutoff + w0 * std::log((cutoff - w0) / (cutoff + w0)));
}

double delta_inert(const AtomModel& atom, double cutoff) {
  require_cutoff(atom, cutoff);
  const double mu2 = atom.coupling * atom.coupling;
  const double w0 = atom.omega0;
  // log((L^2 - w0^2) / w0^2) without forming L^2.
  const double r = cutoff / w0;
  return -mu2 * w0 / (32.0 * pi * pi) * (std::log(r - 1.0) + std::log(r + 1.0));
}

ShiftResult relative_shift_vf(const AtomModel& atom, const SpectralFunction& spectrum,
                              ShiftOptions options) {
  atom.validate();
  const double w0 = atom.omega0;
  const double mu2 = atom.coupling * atom.coupling;
  // Normalized so that the circular closed-form spectrum reproduces
  // d_closed_form() exactly.
  const double prefactor = mu2 / (4.0 * pi);

  ShiftResult out;
  out.cutoff = options.cutoff_factor * w0;
  out.delta_inert = delta_inert(atom, out.cutoff);
  out.rr_plus = shift_rr_per_level(atom, Level::Plus, out.cutoff);
  out.rr_minus = shift_rr_per_level(atom, Level::Minus, out.cutoff);

  auto integrand = [&](double w) {
    return spectrum.excess(w) * (1.0 / (w + w0) - 1.0 / (w - w0));
  };
  const double abs_tol = options.abs_tol * w0;

  const double pole[] = {w0};
  const auto pv = quad::principal_value(integrand, 0.0, 2.0 * w0, pole, options.excision * w0,
                                        abs_tol, options.rel_tol);
  if (!pv.converged) throw QuadratureFailure("principal-value shift integral did not converge");
  out.pv_coarse = pv.coarse;
  out.pv_fine = pv.fine;

  double sum = pv.value;
  int quiet = 0;
  bool settled = false;
  for (int k = 1; k <= options.max_octaves; ++k) {
    const double lo = std::ldexp(w0, k);
    const auto part = quad::integrate(integrand, lo, 2.0 * lo, abs_tol, options.rel_tol);
    if (!part.converged) throw QuadratureFailure("shift octave integral did not converge");
    out.octave_contributions.push_back(part.value);
    sum += part.value;
    quiet = std::abs(part.value) <= std::max(abs_tol, 1e-15 * std::abs(sum)) ? quiet + 1 : 0;
    if (k >= 3 && quiet >= 2) {
      settled = true;
      break;
    }
  }
  if (!settled) throw QuadratureFailure("shift integral tail did not settle over octaves");

  out.correction = prefactor * sum;
  out.delta_total = out.delta_inert + out.correction;
  return out;
}

double d_closed_form(const AtomModel& atom, double acceleration, HighVelocityConstants ab) {
  atom.validate();
  if (!(acceleration > 0.0) || !std::isfinite(acceleration))
    throw DomainError("closed-form correction needs a positive acceleration");
  const double mu2 = atom.coupling * atom.coupling;
  const double x = 2.0 * sqrt3 * ab.B * atom.omega0 / acceleration;
  // e^{-x} Ei(x) - e^{x} Ei(-x) = e^{-x} Ei(x) + e^{x} E1(x)
  const double bracket = expint_ei_scaled(x) + expint_e1_scaled(x);
  return acceleration * ab.A * mu2 / (64.0 * sqrt3 * pi * pi) * bracket;
}

std::vector<SweepRow> sweep_correction(const AtomModel& atom, std::span<const double> a_over_omega0,
                                       std::optional<double> speed, unsigned threads) {
  atom.validate();
  for (double r : a_over_omega0)
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("sweep grid must be positive");
  const HighVelocityConstants ab =
      speed ? high_velocity_constants(*speed) : HighVelocityConstants::ultrarelativistic();
  const double gamma_inert = inertial_decay_rate(atom);

  std::vector<SweepRow> rows(a_over_omega0.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double a = a_over_omega0[i] * atom.omega0;
      rows[i] = {a_over_omega0[i], d_closed_form(atom, a, ab) / gamma_inert};
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, rows.size())));
  if (threads <= 1) {
    work(0, rows.size());
    return rows;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (rows.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(rows.size(), begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  pool.clear();
  return rows;
}

ElectronScenario electron_scenario(double field_tesla, double speed, double g_factor) {
  if (!(field_tesla > 0.0) || !std::isfinite(field_tesla))
    throw DomainError("magnetic field B0 must be positive");
  if (!(speed > 0.0 && speed < 1.0)) throw DomainError("electron speed must satisfy 0 < v < 1");
  if (g_factor == 0.0 || !std::isfinite(g_factor)) throw DomainError("g factor must be nonzero");

  ElectronScenario out;
  out.field_tesla = field_tesla;
  out.speed = speed;
  out.g_factor = g_factor;
  const double gamma = 1.0 / std::sqrt((1.0 - speed) * (1.0 + speed));
  out.comoving_field_tesla = gamma * field_tesla;
  out.omega0 = 0.5 * electron_charge_to_mass * std::abs(g_factor) * out.comoving_field_tesla;
  out.acceleration = speed * electron_charge_to_mass * out.comoving_field_tesla;
  out.a_over_omega0 = out.acceleration / out.omega0;
  out.constants = high_velocity_constants(speed);

  // D and Gamma_inert are both proportional to mu^2; work in units of omega0.
  const AtomModel unit{1.0, 1.0};
  out.d_over_gamma_inert =
      d_closed_form(unit, out.a_over_omega0, out.constants) / inertial_decay_rate(unit);
  return out;
}

} // namespace unruh
