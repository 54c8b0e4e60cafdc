#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unruh/atom.hpp"
#include "unruh/spectral.hpp"
#include "unruh/worldline.hpp"

namespace unruh {

/// Radiation-reaction shift of one level with a symmetric frequency cutoff:
///   -(1/4pi) PV int_{-L}^{L} (Gamma_rr(w)/w) [1/(w + w_ab) + 1/(w - w_ab)] dw
/// Depends on w_ab only through w_ab^2, so both levels get the same value
/// (bit for bit), and grows linearly with the cutoff.
/// Throws CutoffTooSmall if cutoff < 10 omega0.
double shift_rr_per_level(const AtomModel& atom, Level level, double cutoff);

/// Same quantity evaluated for an atom on `w`; radiation reaction does not
/// see the trajectory, so the result is independent of `w`.
double shift_rr_per_level(const AtomModel& atom, Level level, const Worldline& w, double cutoff);

/// (mu^2/32pi^2)[2L + w0 ln((L - w0)/(L + w0))], the closed form of the above.
double shift_rr_closed_form(const AtomModel& atom, double cutoff);

struct ShiftOptions {
  double cutoff_factor = 1e3;     // cutoff = cutoff_factor * omega0
  double excision = 1e-3;         // initial PV half-width, units of omega0
  double rel_tol = 1e-12;
  double abs_tol = 1e-16;         // units of mu^2 omega0
  int max_octaves = 64;
};

/// Relative level shift Delta = delta E_+ - delta E_-, split as
/// Delta_inert(cutoff) + D. Only D is cutoff independent.
struct ShiftResult {
  double cutoff = 0.0;
  /// Divergent inertial part at the cutoff (log divergent).
  double delta_inert = 0.0;
  /// Finite acceleration-induced correction D.
  double correction = 0.0;
  double delta_total = 0.0;
  /// Radiation-reaction shifts of each level; they cancel in Delta.
  double rr_plus = 0.0;
  double rr_minus = 0.0;
  /// D integrand on [0, 2 w0] (PV part) before the Richardson step.
  double pv_coarse = 0.0;
  double pv_fine = 0.0;
  /// D-integral contributions of the octaves [2^k w0, 2^{k+1} w0], k >= 1.
  std::vector<double> octave_contributions;
};

/// Vacuum-fluctuation relative shift for the given spectrum.
///
/// The correction is
///   D = (mu^2/4pi) PV int_0^inf [F(w) - w/8pi] [1/(w + w0) - 1/(w - w0)] dw,
/// which for the circular closed-form spectrum reduces to d_closed_form().
/// Throws QuadratureFailure if the octave sums fail to settle.
ShiftResult relative_shift_vf(const AtomModel& atom, const SpectralFunction& spectrum,
                              ShiftOptions options = {});

/// Cutoff-regularized inertial part -(mu^2 w0 / 32pi^2) ln((L^2 - w0^2)/w0^2).
double delta_inert(const AtomModel& atom, double cutoff);

/// Acceleration correction for circular motion in closed form:
///   (a A mu^2 / 64 sqrt3 pi^2) [e^{-x} Ei(x) - e^{x} Ei(-x)],  x = 2 sqrt3 B w0 / a.
/// Throws DomainError unless a > 0.
double d_closed_form(const AtomModel& atom, double acceleration, HighVelocityConstants ab);

struct SweepRow {
  double a_over_omega0 = 0.0;
  double d_over_gamma_inert = 0.0;
};

/// D / Gamma_inert along a grid of a/w0 for circular motion. With no speed
/// the ultrarelativistic A = B = 1 are used, otherwise A(v), B(v).
/// Grid points are independent and are spread over `threads` workers
/// (0 = one per hardware thread); row order follows the grid.
std::vector<SweepRow> sweep_correction(const AtomModel& atom, std::span<const double> a_over_omega0,
                                       std::optional<double> speed = std::nullopt,
                                       unsigned threads = 1);

/// Electron in a uniform magnetic field B0 [tesla], circulating with speed v.
struct ElectronScenario {
  double field_tesla = 0.0;
  double speed = 0.0;
  double g_factor = 2.0;
  double comoving_field_tesla = 0.0;  // gamma B0
  double omega0 = 0.0;                // spin splitting [1/s]
  double acceleration = 0.0;          // proper acceleration / c [1/s]
  double a_over_omega0 = 0.0;         // = 2 v / |g|
  HighVelocityConstants constants;
  double d_over_gamma_inert = 0.0;
};

/// Throws DomainError unless 0 < v < 1, B0 > 0 and g != 0.
ElectronScenario electron_scenario(double field_tesla, double speed, double g_factor = 2.0);

} // namespace unruh
