#pragma once

// Adaptive Gauss-Kronrod quadrature, half-period-locked cosine transforms
// with averaged tails, and principal-value integrals by symmetric excision.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <vector>

namespace unruh::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

} // namespace detail

/// One G7-K15 panel; the error is |K15 - G7|.
template <class F>
Result gauss_kronrod_15(F&& f, double a, double b) {
  using namespace detail;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss), 15, true};
}

/// Globally adaptive integration of f over [a, b]: the panel with the
/// largest error estimate is bisected until the summed error falls below
/// max(abs_tol, rel_tol * |I|).
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                 int max_panels = 4000) {
  if (a == b) return {};
  std::priority_queue<detail::Panel> heap;
  Result first = gauss_kronrod_15(f, a, b);
  heap.push({a, b, first.value, first.error});
  double total = first.value;
  double error = first.error;
  long evaluations = first.evaluations;
  int panels = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (panels >= max_panels) {
      return {total, error, evaluations, false};
    }
    detail::Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b ||
        (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.a), std::abs(worst.b))) {
      // Cannot bisect any further in double precision.
      return {total, error, evaluations, false};
    }
    heap.pop();
    Result left = gauss_kronrod_15(f, worst.a, mid);
    Result right = gauss_kronrod_15(f, mid, worst.b);
    evaluations += 30;
    ++panels;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.value, left.error});
    heap.push({mid, worst.b, right.value, right.error});
  }
  // Re-sum to shed the drift of the incremental updates.
  double sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, evaluations, true};
}

/// Integrate over consecutive intervals [p0,p1], [p1,p2], ... sharing the
/// error budget in proportion to their count.
template <class F>
Result integrate_breakpoints(F&& f, std::span<const double> points, double abs_tol,
                             double rel_tol) {
  Result out;
  if (points.size() < 2) return out;
  const double share = abs_tol / static_cast<double>(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Result part = integrate(f, points[i], points[i + 1], share, rel_tol);
    out.value += part.value;
    out.error += part.error;
    out.evaluations += part.evaluations;
    out.converged = out.converged && part.converged;
  }
  return out;
}

/// Limit of an oscillating sequence of partial sums by repeated averaging
/// of neighbours; `spread` receives the disagreement of the last level.
double averaged_limit(std::span<const double> partial_sums, double* spread = nullptr);

/// Two-point Richardson step for an error expansion led by h^order:
/// estimate from values at h and h/ratio.
double richardson(double coarse, double fine, double ratio, int order);

struct CosineTransformOptions {
  /// Integrate explicitly up to at least this u; rounded up to a whole
  /// number of half-periods.
  double upper = 0.0;
  /// Number of trailing partial sums fed to the averaging step.
  int window = 8;
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
};

struct CosineTransformResult {
  double value = 0.0;
  double panel_error = 0.0;
  double tail_spread = 0.0;
  int half_periods = 0;
  bool converged = true;
};

/// int_0^inf g(u) cos(omega u) du for g decaying at least like 1/u.
///
/// Panels are aligned to half-periods of cos(omega u), each integrated
/// adaptively; the tail beyond `upper` is estimated by repeated averaging
/// of the last `window` partial sums.
template <class G>
CosineTransformResult cosine_transform(G&& g, double omega, const CosineTransformOptions& opt) {
  CosineTransformResult out;
  const double w = std::abs(omega);
  const double half_period = std::numbers::pi / w;
  int n = static_cast<int>(std::ceil(opt.upper / half_period));
  n = std::max(n, 2 * opt.window);
  out.half_periods = n;
  auto integrand = [&](double u) { return g(u) * std::cos(w * u); };

  std::vector<double> partial;
  partial.reserve(static_cast<std::size_t>(n));
  double running = 0.0;
  const double share = opt.abs_tol / n;
  for (int k = 0; k < n; ++k) {
    const double lo = k * half_period;
    const double hi = (k + 1) * half_period;
    Result panel = integrate(integrand, lo, hi, share, opt.rel_tol);
    running += panel.value;
    out.panel_error += panel.error;
    out.converged = out.converged && panel.converged;
    partial.push_back(running);
  }
  const auto window = std::span<const double>(partial).last(static_cast<std::size_t>(opt.window));
  out.value = averaged_limit(window, &out.tail_spread);
  return out;
}

struct PrincipalValueResult {
  double value = 0.0;
  double coarse = 0.0;  // excision half-width delta
  double fine = 0.0;    // excision half-width delta / 2
  double error = 0.0;
  bool converged = true;
};

/// Principal value of int_a^b f(x) dx where f has simple poles at `poles`
/// (interior to [a, b], mutually further apart than 4 delta).
///
/// Symmetric intervals [p - d, p + d] are excised and the remainder is
/// integrated on a geometric breakpoint ladder towards each pole. The
/// excision error is O(d) for a pole with smooth residue, so the results
/// for d = delta and delta/2 are combined by a Richardson step.
template <class F>
PrincipalValueResult principal_value(F&& f, double a, double b, std::span<const double> poles,
                                     double delta, double abs_tol, double rel_tol) {
  std::vector<double> sorted(poles.begin(), poles.end());
  std::sort(sorted.begin(), sorted.end());

  auto excised = [&](double d) {
    Result total;
    double lo = a;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const double p = sorted[i];
      const double next_lo = (i + 1 < sorted.size()) ? 0.5 * (p + sorted[i + 1]) : b;
      // Left of the pole: ladder from lo up to p - d.
      std::vector<double> left{lo};
      std::vector<double> ladder;
      for (double step = d; p - step > lo; step *= 2.0) ladder.push_back(p - step);
      std::reverse(ladder.begin(), ladder.end());
      left.insert(left.end(), ladder.begin(), ladder.end());
      if (left.back() != p - d) left.push_back(p - d);
      // Right of the pole: ladder from p + d up to the midpoint to the next.
      std::vector<double> right{p + d};
      for (double step = 2.0 * d; p + step < next_lo; step *= 2.0) right.push_back(p + step);
      right.push_back(next_lo);
      for (const auto& pts : {left, right}) {
        Result part = integrate_breakpoints(f, pts, abs_tol, rel_tol);
        total.value += part.value;
        total.error += part.error;
        total.converged = total.converged && part.converged;
      }
      lo = next_lo;
    }
    if (sorted.empty()) total = integrate(f, a, b, abs_tol, rel_tol);
    return total;
  };

  const Result coarse = excised(delta);
  const Result fine = excised(0.5 * delta);
  PrincipalValueResult out;
  out.coarse = coarse.value;
  out.fine = fine.value;
  out.value = richardson(coarse.value, fine.value, 2.0, 1);
  out.error = coarse.error + fine.error;
  out.converged = coarse.converged && fine.converged;
  return out;
}

} // namespace unruh::quad
