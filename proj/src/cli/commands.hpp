#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruh/verify.hpp"

namespace unruh::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadConfig = 2,
  kNumericFailure = 3,
  kIoFailure = 4,
};

/// Test seams. Empty factories keep the normal behaviour.
struct CliHooks {
  /// Spectrum used by the verify checks.
  SpectrumFactory verify_factory;
  /// Replaces the configured spectrum in rates, evolve and lambshift.
  SpectrumFactory spectrum_override;
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// when the output path is "-", diagnostics always go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

/// Worker count for sweeps: UNRUH_THREADS if set (must be a positive
/// integer), else the hardware concurrency. Throws ConfigError.
unsigned thread_budget();

} // namespace unruh::cli
