#pragma once

#include <string_view>

namespace unruh {

enum class Level { Plus, Minus };

std::string_view to_string(Level level);
Level other(Level level);

/// Two-level atom with gap omega0 and field coupling mu (both > 0).
///
/// Only the R2 matrix element between different levels is nonzero and
/// |<a|R2|b>|^2 = 1/4. The multi-level generalization would sum the atom
/// statistical functions over all b with their own gaps and weights; the
/// two-level reduction below collapses that sum to a single term.
struct AtomModel {
  double omega0 = 1.0;
  double coupling = 1.0;

  /// Throws DomainError if either parameter is not positive and finite.
  void validate() const;

  double energy(Level level) const;
  /// omega_ab = omega_a - omega_b for the single partner b != a.
  double transition_frequency(Level level) const;
};

/// |<a|R2(0)|b>|^2 for the two-level model.
constexpr double matrix_element_sq(Level a, Level b) { return a == b ? 0.0 : 0.25; }

/// Symmetric correlation C^A(u) of the atom in `level`: (1/4) cos(omega0 u).
double ca_atom(const AtomModel& atom, Level level, double u);

/// Susceptibility chi^A(u) as the real coefficient of i:
/// +(1/4) sin(omega0 u) for Plus, -(1/4) sin(omega0 u) for Minus.
double chia_atom(const AtomModel& atom, Level level, double u);

} // namespace unruh
