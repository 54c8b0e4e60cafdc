#pragma once

#include <numbers>

namespace unruh {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt3 = std::numbers::sqrt3;

// Natural units: hbar = c = k_B = 1.

// Electron charge-to-mass ratio e/m_e [C/kg], CODATA 2018.
inline constexpr double electron_charge_to_mass = 1.75882001076e11;

} // namespace unruh
