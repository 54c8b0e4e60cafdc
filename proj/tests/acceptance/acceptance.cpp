// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and runtime budgets are fixed here and must not
// be relaxed to turn a line green.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "unruh/dynamics.hpp"
#include "unruh/fieldstats.hpp"
#include "unruh/lambshift.hpp"

using namespace unruh;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("raised: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = secs < budget_seconds;
  const bool ok = o.passed && in_budget;
  if (!ok) ++failures;
  std::printf("CRITERION %2d %s: %s [%.3f s / %.0f s%s] %s\n", id, ok ? "PASS" : "FAIL", title, secs,
              budget_seconds, in_budget ? "" : ", over budget", o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

} // namespace

int main() {
  const AtomModel atom{1.0, 1.0};
  const double mu2w2 = atom.coupling * atom.coupling * atom.omega0 * atom.omega0;

  criterion(1, "inertial ground-state balance", 1.0, [&] {
    const double closed = total_rate(atom, SpectralFunction::inertial(), Level::Minus).gamma_total;
    double numeric = 0.0;
    for (double v : {0.0, 0.5, 0.9})
      numeric = std::max(numeric, std::abs(total_rate(atom, SpectralFunction::numeric(Worldline::inertial(v)),
                                                      Level::Minus).gamma_total));
    const bool ok = std::abs(closed) <= 1e-12 * mu2w2 && numeric <= 1e-6 * mu2w2;
    return Outcome{ok, "closed " + fmt("%.3g", closed) + ", numeric " + fmt("%.3g", numeric)};
  });

  criterion(2, "chi^F = (i/4pi) delta' on all worldlines", 30.0, [&] {
    const std::vector<Worldline> lines{Worldline::inertial(), Worldline::uniform_acceleration(1.0),
                                       Worldline::circular_with_acceleration(1.0, 0.9)};
    struct Probe { double center, width, tau; };
    const Probe probes[] = {{0.0, 1.0, 0.7}, {0.5, 0.5, 0.2}, {-1.0, 2.0, 0.3}};
    double worst_rhs = 0.0, worst_cross = 0.0;
    for (const auto& p : probes) {
      const auto f = TestFunction::gaussian(p.center, p.width);
      double first = 0.0;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto r = chif_distributional_check(lines[i], f, p.tau);
        worst_rhs = std::max(worst_rhs, std::abs(r.lhs - r.rhs) / std::abs(r.rhs));
        if (i == 0) first = r.lhs;
        worst_cross = std::max(worst_cross, std::abs(r.lhs - first) / std::abs(first));
      }
    }
    return Outcome{worst_rhs <= 1e-3 && worst_cross <= 1e-3,
                   "max rel vs f'/4pi " + fmt("%.3g", worst_rhs) + ", across worldlines " +
                       fmt("%.3g", worst_cross) + " (tol 1e-3)"};
  });

  criterion(3, "numeric F(w0) exceeds w0/8pi by > 1e-6 w0/8pi", 60.0, [&] {
    struct Sample { std::string name; Worldline w; };
    std::vector<Sample> samples;
    for (double v : {0.5, 0.9, 0.99})
      samples.push_back({"circular v=" + fmt("%g", v), Worldline::circular_with_acceleration(atom.omega0, v)});
    for (double r : {0.3, 1.0, 3.0})
      samples.push_back({"uniform a/w0=" + fmt("%g", r), Worldline::uniform_acceleration(r * atom.omega0)});
    const double margin = 1e-6 * inertial_spectrum(atom.omega0);
    bool ok = true;
    std::ostringstream detail;
    for (const auto& s : samples) {
      const double excess = SpectralFunction::numeric(s.w).excess(atom.omega0);
      const bool pass = excess > margin;
      ok = ok && pass;
      detail << s.name << ": " << fmt("%.3e", excess / inertial_spectrum(atom.omega0))
             << (pass ? "" : " (below margin)") << "; ";
    }
    detail << "relative excess required > 1e-6";
    return Outcome{ok, detail.str()};
  });

  criterion(4, "uniform acceleration A_up/A_down = exp(-2 pi w0/a)", 120.0, [&] {
    double worst = 0.0;
    for (int i = 0; i <= 28; ++i) {
      const double ratio = 0.2 + 0.1 * i;  // w0/a over [0.2, 3]
      const double a = atom.omega0 / ratio;
      const auto c = einstein_coefficients(atom, SpectralFunction::numeric(Worldline::uniform_acceleration(a)));
      worst = std::max(worst, std::abs(c.up / c.down / std::exp(-2.0 * pi * ratio) - 1.0));
    }
    return Outcome{worst <= 1e-3, "max rel error " + fmt("%.3g", worst) + " (tol 1e-3)"};
  });

  criterion(5, "circular closed form within 5% of numeric F, v >= 0.9", 120.0, [&] {
    std::ostringstream detail;
    double worst = 0.0;
    for (double v : {0.9, 0.95, 0.99}) {
      const auto w = Worldline::circular_with_acceleration(1.0, v);
      const auto numeric = SpectralFunction::numeric(w);
      const auto closed = SpectralFunction::closed_form(w);
      double worst_v = 0.0, at = 0.0;
      for (int i = 0; i <= 20; ++i) {
        const double omega = 0.2 * std::pow(25.0, i / 20.0);  // [0.2a, 5a]
        const double e = std::abs(closed.value(omega) / numeric.value(omega) - 1.0);
        if (e > worst_v) worst_v = e, at = omega;
      }
      worst = std::max(worst, worst_v);
      detail << "v=" << v << ": max " << fmt("%.3g", worst_v) << " at w=" << fmt("%.3g", at) << "a; ";
    }
    detail << "tol 0.05";
    return Outcome{worst <= 0.05, detail.str()};
  });

  criterion(6, "circular T_eff -> a/2sqrt3 for w0/a >= 10", 1.0, [&] {
    std::ostringstream detail;
    double worst = 0.0, worst_ratio = 0.0;
    for (double r : {10.0, 20.0, 50.0, 100.0}) {
      const double a = atom.omega0 / r;
      const auto s = SpectralFunction::circular_high_velocity(a, HighVelocityConstants::ultrarelativistic());
      const double t = effective_temperature(atom, s);
      const double dev = std::abs(t / (a / (2.0 * std::sqrt(3.0))) - 1.0);
      const double ratio_dev = std::abs(t / (a / (2.0 * pi)) / (pi / std::sqrt(3.0)) - 1.0);
      worst = std::max(worst, dev);
      worst_ratio = std::max(worst_ratio, ratio_dev);
      detail << "w0/a=" << r << ": T/(a/2sqrt3)=" << fmt("%.4f", t / (a / (2.0 * std::sqrt(3.0)))) << "; ";
    }
    detail << "ratio to a/2pi off pi/sqrt3 by " << fmt("%.3g", worst_ratio) << "; tol 0.02";
    return Outcome{worst <= 0.02 && worst_ratio <= 0.02, detail.str()};
  });

  criterion(7, "D/Gamma_inert = 0.015 +- 0.002 at a/w0 = 1; Ei vs PV within 1e-6", 60.0, [&] {
    const HighVelocityConstants ab = HighVelocityConstants::ultrarelativistic();
    const double ratio = d_closed_form(atom, 1.0, ab) / inertial_decay_rate(atom);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double r = 0.1 * std::pow(100.0, i / 20.0);
      const double quad = relative_shift_vf(atom, SpectralFunction::circular_high_velocity(r, ab)).correction;
      worst = std::max(worst, std::abs(quad / d_closed_form(atom, r, ab) - 1.0));
    }
    const bool ok = std::abs(ratio - 0.015) <= 0.002 && worst <= 1e-6;
    return Outcome{ok, "D/Gamma_inert " + fmt("%.6f", ratio) + ", max duality error " + fmt("%.3g", worst)};
  });

  criterion(8, "radiation-reaction shift equal for both levels and all worldlines", 10.0, [&] {
    bool exact = true;
    double spread = 0.0;
    const std::vector<Worldline> lines{Worldline::inertial(), Worldline::uniform_acceleration(1.0),
                                       Worldline::circular(1.0, 0.9)};
    for (double cutoff : {10.0, 100.0, 1000.0, 1e4}) {
      const double ref = shift_rr_per_level(atom, Level::Plus, lines[0], cutoff);
      for (const auto& w : lines) {
        const double plus = shift_rr_per_level(atom, Level::Plus, w, cutoff);
        const double minus = shift_rr_per_level(atom, Level::Minus, w, cutoff);
        exact = exact && (plus - minus == 0.0);
        spread = std::max(spread, std::abs(plus - ref) / std::abs(ref));
      }
    }
    return Outcome{exact && spread <= 1e-12,
                   std::string(exact ? "plus - minus == 0 exactly" : "plus != minus") +
                       ", worldline spread " + fmt("%.3g", spread)};
  });

  criterion(9, "finite, nonzero correction vanishing linearly as a -> 0", 60.0, [&] {
    std::vector<SpectralFunction> spectra;
    for (double r : {0.1, 0.3, 1.0, 3.0, 10.0}) {
      spectra.push_back(SpectralFunction::circular_high_velocity(r, HighVelocityConstants::ultrarelativistic()));
      spectra.push_back(SpectralFunction::uniform_acceleration(r));
    }
    spectra.push_back(SpectralFunction::numeric(Worldline::circular_with_acceleration(1.0, 0.9)));
    spectra.push_back(SpectralFunction::numeric(Worldline::uniform_acceleration(1.0)));
    double worst_tail = 0.0, smallest = INFINITY;
    for (const auto& s : spectra) {
      const auto r = relative_shift_vf(atom, s);
      worst_tail = std::max(worst_tail, std::abs(r.octave_contributions.back()));
      smallest = std::min(smallest, std::abs(r.correction));
    }
    double c_fit = 0.0;
    for (double r = 0.1; r >= 1e-3; r /= 1.5) {
      const double d = relative_shift_vf(
          atom, SpectralFunction::circular_high_velocity(r, HighVelocityConstants::ultrarelativistic())).correction;
      c_fit = std::max(c_fit, std::abs(d) / r);
    }
    const bool ok = worst_tail < 1e-8 && smallest > 1e-12 * atom.coupling * atom.coupling * atom.omega0 &&
                    c_fit > 0.0 && std::isfinite(c_fit);
    return Outcome{ok, "last octave " + fmt("%.3g", worst_tail) + ", min |D| " + fmt("%.3g", smallest) +
                           ", C = " + fmt("%.4g", c_fit)};
  });

  criterion(10, "RK4 relaxation matches the analytic curve and equilibrium", 10.0, [&] {
    double worst = 0.0, limit_err = 0.0;
    for (const auto& s : {SpectralFunction::circular_high_velocity(1.0, HighVelocityConstants::ultrarelativistic()),
                          SpectralFunction::uniform_acceleration(0.5), SpectralFunction::inertial()}) {
      const double gamma = decay_rate(atom, s);
      for (double h0 : {0.5, -0.5, 0.2}) {
        const auto c = relaxation_curve(atom, s, h0, 20.0 / gamma, 400, 20000);
        for (std::size_t i = 0; i < c.tau.size(); ++i)
          worst = std::max(worst, std::abs(c.rk4[i] - c.analytic[i]));
        // The long-time limit: integrate far enough that e^{-Gamma tau} is negligible.
        const auto tail = relaxation_curve(atom, s, h0, 40.0 / gamma, 10, 40000);
        limit_err = std::max(limit_err, std::abs(tail.rk4.back() - equilibrium_energy(atom, s)));
      }
    }
    return Outcome{worst <= 1e-8 * atom.omega0 && limit_err <= 1e-10,
                   "max |rk4 - analytic| " + fmt("%.3g", worst) + ", |limit - H_eq| " + fmt("%.3g", limit_err)};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
