#include "unruh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "unruh/constants.hpp"
#include "unruh/dynamics.hpp"
#include "unruh/fieldstats.hpp"
#include "unruh/lambshift.hpp"

namespace unruh {

namespace {

struct Check {
  std::string name;
  std::string statement;
  bool full_only = false;
  std::function<CheckResult(VerifyLevel, const SpectrumFactory&)> run;
};

CheckResult make(std::string name, std::string statement, double measured, double tolerance,
                 bool passed, std::string detail = {}) {
  return {std::move(name), std::move(statement), passed, measured, tolerance, std::move(detail)};
}

std::vector<Worldline> accelerated_samples(VerifyLevel level) {
  std::vector<Worldline> out{Worldline::uniform_acceleration(1.0),
                             Worldline::circular_with_acceleration(1.0, 0.9)};
  if (level == VerifyLevel::Full) {
    out.push_back(Worldline::uniform_acceleration(0.5));
    out.push_back(Worldline::circular_with_acceleration(1.0, 0.5));
    out.push_back(Worldline::circular_with_acceleration(2.0, 0.99));
  }
  return out;
}

CheckResult check_kinematics(VerifyLevel, const SpectrumFactory&) {
  double worst_norm = 0.0;
  double worst_stationary = 0.0;
  bool maximal = true;
  const std::vector<Worldline> lines{Worldline::inertial(0.3), Worldline::uniform_acceleration(0.7),
                                     Worldline::circular(1.3, 0.8)};
  for (const auto& w : lines) {
    for (int i = 0; i <= 1000; ++i) {
      const double tau = -5.0 + 0.01 * i;
      const auto u = w.four_velocity(tau);
      worst_norm = std::max(worst_norm, std::abs(minkowski_dot(u, u) - 1.0));
      const double tau2 = 0.37 * tau + 0.91;
      const auto e1 = w.event_at(tau);
      const auto e2 = w.event_at(tau2);
      const Event d{e1.t - e2.t, e1.x - e2.x, e1.y - e2.y, e1.z - e2.z};
      const double raw = minkowski_dot(d, d);
      const double s2 = w.geodesic_interval_sq(tau - tau2);
      worst_stationary = std::max(worst_stationary, std::abs(raw - s2) / std::max(1.0, s2));
      const double sep = tau - tau2;
      if (sep != 0.0 && !w.is_inertial() && !(s2 > sep * sep)) maximal = false;
    }
  }
  const bool ok = worst_norm <= 1e-12 && worst_stationary <= 1e-10 && maximal;
  std::ostringstream detail;
  detail << "|u.u-1| max " << worst_norm << ", stationarity " << worst_stationary
         << (maximal ? "" : ", sigma^2 <= u^2 seen");
  return make("worldline-kinematics", "u.u = 1, sigma^2(u) stationary and > u^2 off inertial",
              std::max(worst_norm, worst_stationary), 1e-10, ok, detail.str());
}

CheckResult check_theorem1(VerifyLevel level, const SpectrumFactory&) {
  const auto f = TestFunction::gaussian(0.0, 1.0);
  const double tau = 0.7;
  std::vector<Worldline> lines{Worldline::inertial(), Worldline::uniform_acceleration(1.0),
                               Worldline::circular_with_acceleration(1.0, 0.9)};
  if (level == VerifyLevel::Full) lines.push_back(Worldline::circular(2.0, 0.5));
  double worst = 0.0;
  double reference = 0.0;
  std::ostringstream detail;
  detail.precision(8);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto r = chif_distributional_check(lines[i], f, tau);
    if (i == 0) reference = r.lhs;
    worst = std::max({worst, std::abs(r.lhs - r.rhs) / std::abs(r.rhs),
                      std::abs(r.lhs - reference) / std::abs(reference)});
    detail << lines[i].name() << ":" << r.lhs << " ";
  }
  detail << "rhs " << f.derivative(tau) / (4.0 * pi);
  return make("theorem1-rr-universal",
              "chi^F acts as (i/4pi) delta' on every worldline (radiation reaction universal)",
              worst, 1e-3, worst <= 1e-3, detail.str());
}

CheckResult check_inertial_balance(VerifyLevel, const SpectrumFactory& factory) {
  const AtomModel atom{1.0, 1.0};
  const double closed = total_rate(atom, SpectralFunction::inertial(), Level::Minus).gamma_total;
  const double numeric = total_rate(atom, factory(Worldline::inertial(0.4)), Level::Minus).gamma_total;
  const double scale = atom.coupling * atom.coupling * atom.omega0 * atom.omega0;
  const bool ok = std::abs(closed) <= 1e-12 * scale && std::abs(numeric) <= 1e-6 * scale;
  std::ostringstream detail;
  detail << "closed " << closed << ", numeric " << numeric;
  return make("inertial-balance", "ground-state vf and rr cancel for inertial motion",
              std::max(std::abs(closed), std::abs(numeric)), 1e-6 * scale, ok, detail.str());
}

CheckResult check_theorem2(VerifyLevel level, const SpectrumFactory& factory) {
  // Inertial spectrum must be exactly w/8pi; every accelerated one must exceed it.
  double inertial_dev = 0.0;
  for (double w : {0.3, 1.0, 3.0}) {
    const double F = factory(Worldline::inertial(0.2)).value(w);
    inertial_dev = std::max(inertial_dev, std::abs(F / inertial_spectrum(w) - 1.0));
  }
  double min_margin = INFINITY;
  std::ostringstream detail;
  detail.precision(6);
  for (const auto& w : accelerated_samples(level)) {
    const auto spectrum = factory(w);
    for (double ratio : {0.5, 1.0, 2.0}) {
      const double w0 = ratio * w.proper_acceleration();
      const double margin = (spectrum.value(w0) - inertial_spectrum(w0)) / inertial_spectrum(w0);
      min_margin = std::min(min_margin, margin);
    }
  }
  detail << "inertial |F/(w/8pi)-1| " << inertial_dev << ", min relative excess " << min_margin;
  const bool ok = inertial_dev <= 1e-9 && min_margin > 0.0;
  return make("theorem2-vf-differs",
              "F = w/8pi exactly when inertial, F > w/8pi on every accelerated worldline",
              inertial_dev, 1e-9, ok, detail.str());
}

CheckResult check_einstein_universal(VerifyLevel level, const SpectrumFactory& factory) {
  const AtomModel atom{1.0, 0.7};
  const double target = inertial_decay_rate(atom);
  double worst = 0.0;
  for (const auto& w : accelerated_samples(level)) {
    const auto c = einstein_coefficients(atom, factory(w));
    worst = std::max(worst, std::abs((c.down - c.up) / target - 1.0));
    const auto cc = einstein_coefficients(atom, SpectralFunction::closed_form(w));
    worst = std::max(worst, std::abs((cc.down - cc.up) / target - 1.0));
  }
  return make("einstein-universal-rr", "A_down - A_up = mu^2 w0 / 8pi on every worldline", worst,
              1e-6, worst <= 1e-6);
}

CheckResult check_theorem3(VerifyLevel, const SpectrumFactory&) {
  const AtomModel atom{1.0, 1.0};
  double worst = 0.0;
  bool identical = true;
  for (double cutoff : {10.0, 100.0, 1000.0}) {
    const double plus = shift_rr_per_level(atom, Level::Plus, cutoff);
    const double minus = shift_rr_per_level(atom, Level::Minus, cutoff);
    identical = identical && plus == minus;
    const double closed = shift_rr_closed_form(atom, cutoff);
    worst = std::max(worst, std::abs(plus / closed - 1.0));
  }
  std::ostringstream detail;
  detail << (identical ? "plus == minus bitwise" : "plus != minus")
         << ", max deviation from closed form " << worst;
  return make("theorem3-rr-shift", "radiation-reaction shift equal for both levels", worst, 1e-9,
              identical && worst <= 1e-9, detail.str());
}

CheckResult check_theorem4(VerifyLevel level, const SpectrumFactory&) {
  const AtomModel atom{1.0, 1.0};
  double worst_tail = 0.0;
  std::vector<SpectralFunction> spectra{
      SpectralFunction::circular_high_velocity(1.0, HighVelocityConstants::ultrarelativistic()),
      SpectralFunction::uniform_acceleration(1.0)};
  if (level == VerifyLevel::Full) {
    spectra.push_back(SpectralFunction::circular_high_velocity(10.0, {1.0, 1.0, true}));
    spectra.push_back(SpectralFunction::uniform_acceleration(3.0));
  }
  for (const auto& s : spectra) {
    const auto r = relative_shift_vf(atom, s);
    const auto& oct = r.octave_contributions;
    worst_tail = std::max(worst_tail, std::abs(oct.back()));
  }
  return make("theorem4-finite-correction",
              "acceleration correction to the shift converges (octave tail)", worst_tail, 1e-8,
              worst_tail < 1e-8);
}

CheckResult check_theorem5(VerifyLevel level, const SpectrumFactory&) {
  const AtomModel atom{1.0, 1.0};
  double smallest = INFINITY;
  std::vector<double> ratios{0.1, 1.0, 10.0};
  if (level == VerifyLevel::Full) ratios = {0.1, 0.3, 1.0, 3.0, 10.0};
  for (double r : ratios) {
    for (const auto& s : {SpectralFunction::circular_high_velocity(r, {1.0, 1.0, true}),
                          SpectralFunction::uniform_acceleration(r)}) {
      smallest = std::min(smallest, std::abs(relative_shift_vf(atom, s).correction));
    }
  }
  return make("theorem5-correction-nonzero", "acceleration correction D != 0 on accelerated motion",
              smallest, 1e-12, smallest > 1e-12);
}

CheckResult check_relaxation(VerifyLevel, const SpectrumFactory&) {
  const AtomModel atom{1.0, 1.0};
  const auto s = SpectralFunction::circular_high_velocity(1.0, {1.0, 1.0, true});
  const double gamma = decay_rate(atom, s);
  const auto curve = relaxation_curve(atom, s, 0.5, 20.0 / gamma, 200, 10000);
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.tau.size(); ++i)
    worst = std::max(worst, std::abs(curve.rk4[i] - curve.analytic[i]));
  return make("relaxation-rk4", "RK4 solution of the rate equation matches the analytic curve",
              worst, 1e-8 * atom.omega0, worst <= 1e-8 * atom.omega0);
}

CheckResult check_thermality(VerifyLevel, const SpectrumFactory& factory) {
  const AtomModel atom{1.0, 1.0};
  double worst = 0.0;
  for (double ratio : {0.2, 0.5, 1.0, 2.0, 3.0}) {
    const double a = atom.omega0 / ratio;
    const auto c = einstein_coefficients(atom, factory(Worldline::uniform_acceleration(a)));
    const double expected = std::exp(-2.0 * pi * atom.omega0 / a);
    worst = std::max(worst, std::abs(c.up / c.down / expected - 1.0));
  }
  return make("thermality-oracle", "uniform acceleration: A_up/A_down = exp(-2 pi w0 / a)", worst,
              1e-3, worst <= 1e-3);
}

CheckResult check_shift_duality(VerifyLevel, const SpectrumFactory&) {
  const AtomModel atom{1.0, 1.0};
  double worst = 0.0;
  for (double ratio : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    const HighVelocityConstants ab{1.0, 1.0, true};
    const double quad =
        relative_shift_vf(atom, SpectralFunction::circular_high_velocity(ratio, ab)).correction;
    const double closed = d_closed_form(atom, ratio, ab);
    worst = std::max(worst, std::abs(quad / closed - 1.0));
  }
  return make("shift-duality", "PV quadrature of D equals the Ei closed form", worst, 1e-6,
              worst <= 1e-6);
}

CheckResult check_circular_closed_vs_numeric(VerifyLevel, const SpectrumFactory& factory) {
  double worst = 0.0;
  for (double v : {0.95, 0.99}) {
    const auto w = Worldline::circular_with_acceleration(1.0, v);
    const auto numeric = factory(w);
    const auto closed = SpectralFunction::closed_form(w);
    for (double omega : {0.2, 0.5, 1.0, 2.0, 5.0})
      worst = std::max(worst, std::abs(closed.value(omega) / numeric.value(omega) - 1.0));
  }
  return make("circular-closed-vs-numeric",
              "large-speed circular closed form within 5% of numeric F (v in {0.95, 0.99})", worst,
              0.05, worst <= 0.05);
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks{
      {"worldline-kinematics", "", false, check_kinematics},
      {"theorem1-rr-universal", "", false, check_theorem1},
      {"inertial-balance", "", false, check_inertial_balance},
      {"theorem2-vf-differs", "", false, check_theorem2},
      {"einstein-universal-rr", "", false, check_einstein_universal},
      {"theorem3-rr-shift", "", false, check_theorem3},
      {"theorem4-finite-correction", "", false, check_theorem4},
      {"theorem5-correction-nonzero", "", false, check_theorem5},
      {"relaxation-rk4", "", false, check_relaxation},
      {"thermality-oracle", "", true, check_thermality},
      {"shift-duality", "", true, check_shift_duality},
      {"circular-closed-vs-numeric", "", true, check_circular_closed_vs_numeric},
  };
  return checks;
}

} // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

SpectrumFactory default_spectrum_factory() {
  return [](const Worldline& w) { return SpectralFunction::numeric(w); };
}

std::vector<std::string> verification_manifest(VerifyLevel level) {
  std::vector<std::string> names;
  for (const auto& c : all_checks())
    if (level == VerifyLevel::Full || !c.full_only) names.push_back(c.name);
  return names;
}

VerifyReport run_verification(VerifyLevel level, const SpectrumFactory& factory) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.level = level;
  for (const auto& c : all_checks()) {
    if (level == VerifyLevel::Fast && c.full_only) continue;
    try {
      report.checks.push_back(c.run(level, factory));
    } catch (const std::exception& e) {
      report.checks.push_back(make(c.name, "raised an error", NAN, 0.0, false, e.what()));
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace unruh
