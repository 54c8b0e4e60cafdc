#pragma once

namespace unruh {

/// Principal-value exponential integral Ei(x) = -PV int_{-x}^inf e^{-t}/t dt.
///
/// Ei(-x) = -E1(x) for x > 0. Throws DomainError at x = 0.
double expint_ei(double x);

/// E1(x) for x > 0.
double expint_e1(double x);

/// e^{-x} Ei(x) for x > 0, finite for arguments where Ei overflows.
double expint_ei_scaled(double x);

/// e^{x} E1(x) = -e^{x} Ei(-x) for x > 0.
double expint_e1_scaled(double x);

} // namespace unruh
