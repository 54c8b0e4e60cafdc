#include "unruh/expint.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "unruh/errors.hpp"

namespace unruh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Beyond this the asymptotic series of Ei(x) reaches full precision
// before its terms start to grow.
constexpr double kAsymptoticFrom = 40.0;

// sum_{k>=1} x^k / (k k!)
double ei_power_sum(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum)) break;
  }
  return sum;
}

// e^{-x} Ei(x) ~ (1/x) sum_k k!/x^k, truncated before the smallest term.
double ei_asymptotic_scaled(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < kEps * sum) break;
  }
  return sum / x;
}

// e^{x} E1(x) for x > 1 by the modified Lentz continued fraction.
double e1_continued_fraction_scaled(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

} // namespace

double expint_e1(double x) {
  if (!(x > 0.0)) throw DomainError("E1 needs a positive argument");
  if (x <= 1.0) return -std::numbers::egamma_v<double> - std::log(x) - ei_power_sum(-x);
  return std::exp(-x) * e1_continued_fraction_scaled(x);
}

double expint_e1_scaled(double x) {
  if (!(x > 0.0)) throw DomainError("E1 needs a positive argument");
  if (x <= 1.0) return std::exp(x) * expint_e1(x);
  return e1_continued_fraction_scaled(x);
}

double expint_ei(double x) {
  if (x == 0.0 || std::isnan(x)) throw DomainError("Ei is singular at x = 0");
  if (x < 0.0) return -expint_e1(-x);
  if (x <= kAsymptoticFrom) return std::numbers::egamma_v<double> + std::log(x) + ei_power_sum(x);
  return std::exp(x) * ei_asymptotic_scaled(x);
}

double expint_ei_scaled(double x) {
  if (!(x > 0.0)) throw DomainError("scaled Ei needs a positive argument");
  if (x <= kAsymptoticFrom) return std::exp(-x) * expint_ei(x);
  return ei_asymptotic_scaled(x);
}

} // namespace unruh
