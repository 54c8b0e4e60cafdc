#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "unruh/atom.hpp"
#include "unruh/spectral.hpp"
#include "unruh/worldline.hpp"

namespace unruh::cli {

/// Bad configuration: unknown key, wrong type or violated precondition.
/// Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Everything a command needs, after merging the JSON file and the flags.
/// Unset optionals mean "use the command's default".
struct ScenarioConfig {
  std::string worldline = "circular";
  std::optional<double> radius;
  std::optional<double> speed;
  std::optional<double> accel;
  double omega0 = 1.0;
  double mu = 1.0;
  std::string method = "closed";
  double tol = 1e-12;
  std::string format = "csv";
  std::string out = "-";

  // evolve
  std::optional<double> h0;
  std::optional<double> tau_max;
  int samples = 200;
  // lambshift
  std::optional<double> cutoff;
  bool ultrarelativistic = false;
  // sweep
  double grid_min = 0.1;
  double grid_max = 10.0;
  int grid_points = 41;
  std::string grid_scale = "log";
  // electron
  double b0 = 1.0;
  double g = 2.0;
  // verify
  std::string level = "fast";
};

/// Overwrites fields present in `j`. Throws ConfigError on unknown keys or
/// values of the wrong type.
void apply_json(ScenarioConfig& cfg, const nlohmann::json& j);

ScenarioConfig load_config_file(const std::string& path);

/// Resolved configuration as embedded in every output.
nlohmann::json to_json(const ScenarioConfig& cfg);

/// Checks everything that does not depend on the subcommand.
void validate(const ScenarioConfig& cfg);

AtomModel make_atom(const ScenarioConfig& cfg);

/// circular: `speed` plus exactly one of `radius` / `accel` (accel = 1 if
/// neither); uniform: `accel` (default 1); inertial: `speed` (default 0).
Worldline make_worldline(const ScenarioConfig& cfg);

/// Closed-form or numeric spectrum for the worldline. With
/// `ultrarelativistic` the circular closed form uses A = B = 1.
SpectralFunction make_spectrum(const ScenarioConfig& cfg, const Worldline& w);

} // namespace unruh::cli
