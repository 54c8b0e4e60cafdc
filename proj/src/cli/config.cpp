#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "unruh/errors.hpp"

namespace unruh::cli {

using nlohmann::json;

namespace {

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be true or false");
  return v.get<bool>();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void require_positive(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0, std::string(name) + " must be positive and finite");
}

} // namespace

void apply_json(ScenarioConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "worldline") cfg.worldline = as_string(v, key);
    else if (key == "radius") cfg.radius = as_number(v, key);
    else if (key == "speed") cfg.speed = as_number(v, key);
    else if (key == "accel") cfg.accel = as_number(v, key);
    else if (key == "omega0") cfg.omega0 = as_number(v, key);
    else if (key == "mu") cfg.mu = as_number(v, key);
    else if (key == "method") cfg.method = as_string(v, key);
    else if (key == "tol") cfg.tol = as_number(v, key);
    else if (key == "format") cfg.format = as_string(v, key);
    else if (key == "out") cfg.out = as_string(v, key);
    else if (key == "h0") cfg.h0 = as_number(v, key);
    else if (key == "tau_max") cfg.tau_max = as_number(v, key);
    else if (key == "samples") cfg.samples = as_int(v, key);
    else if (key == "cutoff") cfg.cutoff = as_number(v, key);
    else if (key == "ultrarelativistic") cfg.ultrarelativistic = as_bool(v, key);
    else if (key == "grid_min") cfg.grid_min = as_number(v, key);
    else if (key == "grid_max") cfg.grid_max = as_number(v, key);
    else if (key == "grid_points") cfg.grid_points = as_int(v, key);
    else if (key == "grid_scale") cfg.grid_scale = as_string(v, key);
    else if (key == "b0") cfg.b0 = as_number(v, key);
    else if (key == "g") cfg.g = as_number(v, key);
    else if (key == "level") cfg.level = as_string(v, key);
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  ScenarioConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

json to_json(const ScenarioConfig& cfg) {
  json j;
  j["worldline"] = cfg.worldline;
  j["radius"] = cfg.radius ? json(*cfg.radius) : json(nullptr);
  j["speed"] = cfg.speed ? json(*cfg.speed) : json(nullptr);
  j["accel"] = cfg.accel ? json(*cfg.accel) : json(nullptr);
  j["omega0"] = cfg.omega0;
  j["mu"] = cfg.mu;
  j["method"] = cfg.method;
  j["tol"] = cfg.tol;
  j["format"] = cfg.format;
  j["out"] = cfg.out;
  j["h0"] = cfg.h0 ? json(*cfg.h0) : json(nullptr);
  j["tau_max"] = cfg.tau_max ? json(*cfg.tau_max) : json(nullptr);
  j["samples"] = cfg.samples;
  j["cutoff"] = cfg.cutoff ? json(*cfg.cutoff) : json(nullptr);
  j["ultrarelativistic"] = cfg.ultrarelativistic;
  j["grid_min"] = cfg.grid_min;
  j["grid_max"] = cfg.grid_max;
  j["grid_points"] = cfg.grid_points;
  j["grid_scale"] = cfg.grid_scale;
  j["b0"] = cfg.b0;
  j["g"] = cfg.g;
  j["level"] = cfg.level;
  return j;
}

void validate(const ScenarioConfig& cfg) {
  static const std::set<std::string> worldlines{"inertial", "uniform", "circular"};
  require(worldlines.count(cfg.worldline) == 1,
          "worldline must be one of inertial, uniform, circular (got '" + cfg.worldline + "')");
  require(cfg.method == "closed" || cfg.method == "numeric",
          "method must be 'closed' or 'numeric' (got '" + cfg.method + "')");
  require(cfg.format == "csv" || cfg.format == "json",
          "format must be 'csv' or 'json' (got '" + cfg.format + "')");
  require(cfg.level == "fast" || cfg.level == "full",
          "level must be 'fast' or 'full' (got '" + cfg.level + "')");
  require(cfg.grid_scale == "log" || cfg.grid_scale == "linear",
          "grid_scale must be 'log' or 'linear' (got '" + cfg.grid_scale + "')");
  require_positive(cfg.omega0, "omega0");
  require_positive(cfg.mu, "mu");
  require(std::isfinite(cfg.tol) && cfg.tol > 0.0 && cfg.tol <= 1e-3,
          "tol must lie in (0, 1e-3]");
  if (cfg.radius) require_positive(*cfg.radius, "radius");
  if (cfg.accel) require_positive(*cfg.accel, "accel");
  if (cfg.speed)
    require(std::isfinite(*cfg.speed) && *cfg.speed >= 0.0 && *cfg.speed < 1.0,
            "speed must satisfy 0 <= v < 1");
  require(cfg.samples >= 1 && cfg.samples <= 10000000, "samples must lie in [1, 1e7]");
  if (cfg.tau_max) require_positive(*cfg.tau_max, "tau_max");
  if (cfg.h0)
    require(std::isfinite(*cfg.h0) && std::abs(*cfg.h0) <= 0.5 * cfg.omega0,
            "h0 must satisfy |h0| <= omega0/2");
  if (cfg.cutoff)
    require(std::isfinite(*cfg.cutoff) && *cfg.cutoff >= 10.0 * cfg.omega0,
            "cutoff must be at least 10 omega0");
  require_positive(cfg.grid_min, "grid_min");
  require_positive(cfg.grid_max, "grid_max");
  require(cfg.grid_max >= cfg.grid_min, "grid_max must not be below grid_min");
  require(cfg.grid_points >= 1 && cfg.grid_points <= 1000000, "grid_points must lie in [1, 1e6]");
  require_positive(cfg.b0, "b0");
  require(std::isfinite(cfg.g) && cfg.g != 0.0, "g must be nonzero");
}

AtomModel make_atom(const ScenarioConfig& cfg) {
  AtomModel atom{cfg.omega0, cfg.mu};
  try {
    atom.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return atom;
}

Worldline make_worldline(const ScenarioConfig& cfg) {
  try {
    if (cfg.worldline == "inertial") {
      require(!cfg.radius && !cfg.accel, "inertial worldline takes no radius or accel");
      return Worldline::inertial(cfg.speed.value_or(0.0));
    }
    if (cfg.worldline == "uniform") {
      require(!cfg.radius && !cfg.speed, "uniform worldline takes only accel");
      return Worldline::uniform_acceleration(cfg.accel.value_or(1.0));
    }
    require(!(cfg.radius && cfg.accel), "circular worldline takes radius or accel, not both");
    const double v = cfg.speed.value_or(0.9);
    require(v > 0.0, "circular worldline needs speed > 0");
    if (cfg.radius) return Worldline::circular(*cfg.radius, v);
    return Worldline::circular_with_acceleration(cfg.accel.value_or(1.0), v);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

SpectralFunction make_spectrum(const ScenarioConfig& cfg, const Worldline& w) {
  if (cfg.method == "numeric") {
    NumericSpectralOptions opt;
    opt.rel_tol = cfg.tol;
    return SpectralFunction::numeric(w, opt);
  }
  if (cfg.ultrarelativistic && std::holds_alternative<Circular>(w.kind()))
    return SpectralFunction::circular_high_velocity(w.proper_acceleration(),
                                                    HighVelocityConstants::ultrarelativistic());
  return SpectralFunction::closed_form(w);
}

} // namespace unruh::cli
