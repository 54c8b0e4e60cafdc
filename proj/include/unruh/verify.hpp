#pragma once

#include <functional>
#include <string>
#include <vector>

#include "unruh/spectral.hpp"
#include "unruh/worldline.hpp"

namespace unruh {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
  std::string name;
  std::string statement;
  bool passed = false;
  /// Worst measured deviation (or smallest margin) over the samples.
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::Fast;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

/// Builds the numerically computed spectrum for a worldline. Replaceable so
/// that a corrupted spectrum can be fed through the checks.
using SpectrumFactory = std::function<SpectralFunction(const Worldline&)>;

SpectrumFactory default_spectrum_factory();

/// Names of the checks run at the given level, in execution order.
std::vector<std::string> verification_manifest(VerifyLevel level);

/// Runs the numerical checks of radiation-reaction universality,
/// vacuum-fluctuation sensitivity, the shift theorems and the supporting
/// invariants. A check that throws is recorded as failed.
VerifyReport run_verification(VerifyLevel level,
                              const SpectrumFactory& factory = default_spectrum_factory());

} // namespace unruh
