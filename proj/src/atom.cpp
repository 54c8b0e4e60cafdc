#include "unruh/atom.hpp"

#include <cmath>
#include <sstream>

#include "unruh/errors.hpp"

namespace unruh {

std::string_view to_string(Level level) { return level == Level::Plus ? "plus" : "minus"; }

Level other(Level level) { return level == Level::Plus ? Level::Minus : Level::Plus; }

void AtomModel::validate() const {
  if (!std::isfinite(omega0) || omega0 <= 0.0) {
    std::ostringstream msg;
    msg << "omega0 must be positive, got " << omega0;
    throw DomainError(msg.str());
  }
  if (!std::isfinite(coupling) || coupling <= 0.0) {
    std::ostringstream msg;
    msg << "coupling mu must be positive, got " << coupling;
    throw DomainError(msg.str());
  }
}

double AtomModel::energy(Level level) const {
  return level == Level::Plus ? 0.5 * omega0 : -0.5 * omega0;
}

double AtomModel::transition_frequency(Level level) const {
  return energy(level) - energy(other(level));
}

double ca_atom(const AtomModel& atom, Level level, double u) {
  // (1/2) |M|^2 (e^{i w u} + e^{-i w u}) with w = +-omega0.
  const double w = atom.transition_frequency(level);
  return matrix_element_sq(level, other(level)) * std::cos(w * u);
}

double chia_atom(const AtomModel& atom, Level level, double u) {
  // (1/2) |M|^2 (e^{i w u} - e^{-i w u}) = i |M|^2 sin(w u).
  const double w = atom.transition_frequency(level);
  return matrix_element_sq(level, other(level)) * std::sin(w * u);
}

} // namespace unruh
