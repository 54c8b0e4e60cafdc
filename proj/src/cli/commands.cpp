#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "config.hpp"
#include "output.hpp"
#include "unruh/constants.hpp"
#include "unruh/dynamics.hpp"
#include "unruh/errors.hpp"
#include "unruh/lambshift.hpp"

namespace unruh::cli {

namespace {

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> worldline;
  std::optional<double> radius, speed, accel, omega0, mu, tol;
  std::optional<std::string> method, format, out;
  std::optional<double> h0, tau_max, cutoff, grid_min, grid_max, b0, g;
  std::optional<int> samples, grid_points;
  std::optional<std::string> grid_scale, level;
  bool ultrarelativistic = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file; flags override its values");
  sub->add_option("--worldline", f.worldline, "inertial | uniform | circular");
  sub->add_option("--radius", f.radius, "circular orbit radius");
  sub->add_option("--speed", f.speed, "orbital (or inertial) speed, 0 <= v < 1");
  sub->add_option("--accel", f.accel, "proper acceleration");
  sub->add_option("--omega0", f.omega0, "atomic level spacing");
  sub->add_option("--mu", f.mu, "coupling constant");
  sub->add_option("--method", f.method, "closed | numeric spectral function");
  sub->add_option("--tol", f.tol, "relative quadrature tolerance");
  sub->add_option("--format", f.format, "csv | json");
  sub->add_option("--out", f.out, "output path, '-' for stdout");
}

ScenarioConfig resolve(const Flags& f) {
  ScenarioConfig cfg = f.config ? load_config_file(*f.config) : ScenarioConfig{};
  if (f.worldline) cfg.worldline = *f.worldline;
  if (f.radius) cfg.radius = f.radius;
  if (f.speed) cfg.speed = f.speed;
  if (f.accel) cfg.accel = f.accel;
  if (f.omega0) cfg.omega0 = *f.omega0;
  if (f.mu) cfg.mu = *f.mu;
  if (f.tol) cfg.tol = *f.tol;
  if (f.method) cfg.method = *f.method;
  if (f.format) cfg.format = *f.format;
  if (f.out) cfg.out = *f.out;
  if (f.h0) cfg.h0 = f.h0;
  if (f.tau_max) cfg.tau_max = f.tau_max;
  if (f.samples) cfg.samples = *f.samples;
  if (f.cutoff) cfg.cutoff = f.cutoff;
  if (f.ultrarelativistic) cfg.ultrarelativistic = true;
  if (f.grid_min) cfg.grid_min = *f.grid_min;
  if (f.grid_max) cfg.grid_max = *f.grid_max;
  if (f.grid_points) cfg.grid_points = *f.grid_points;
  if (f.grid_scale) cfg.grid_scale = *f.grid_scale;
  if (f.b0) cfg.b0 = *f.b0;
  if (f.g) cfg.g = *f.g;
  if (f.level) cfg.level = *f.level;
  validate(cfg);
  return cfg;
}

Table start_table(const std::string& command, const ScenarioConfig& cfg) {
  Table t;
  t.command = command;
  t.config = to_json(cfg);
  return t;
}

SpectralFunction pick_spectrum(const ScenarioConfig& cfg, const Worldline& w, const CliHooks& hooks) {
  return hooks.spectrum_override ? hooks.spectrum_override(w) : make_spectrum(cfg, w);
}

Table cmd_rates(const ScenarioConfig& cfg, const CliHooks& hooks) {
  const auto atom = make_atom(cfg);
  const auto w = make_worldline(cfg);
  const auto spectrum = pick_spectrum(cfg, w, hooks);
  Table t = start_table("rates", cfg);
  t.columns = {"level", "omega_ab", "gamma_vf", "gamma_rr", "gamma_total"};
  for (Level level : {Level::Plus, Level::Minus}) {
    const auto r = total_rate(atom, spectrum, level);
    t.rows.push_back({std::string(to_string(level)), atom.transition_frequency(level), r.gamma_vf,
                      r.gamma_rr, r.gamma_total});
  }
  const auto c = einstein_coefficients(atom, spectrum);
  t.summary.emplace_back("worldline", w.describe());
  t.summary.emplace_back("spectrum", spectrum.describe());
  t.summary.emplace_back("acceleration", w.proper_acceleration());
  t.summary.emplace_back("F_omega0", spectrum.value(atom.omega0));
  t.summary.emplace_back("A_down", c.down);
  t.summary.emplace_back("A_up", c.up);
  t.summary.emplace_back("gamma", decay_rate(atom, spectrum));
  t.summary.emplace_back("h_eq", equilibrium_energy(atom, spectrum));
  if (c.up > 0.0) {
    const double temp = effective_temperature(atom, spectrum);
    t.summary.emplace_back("t_eff", temp);
    if (w.proper_acceleration() > 0.0)
      t.summary.emplace_back("t_eff_over_a", temp / w.proper_acceleration());
  }
  return t;
}

Table cmd_evolve(const ScenarioConfig& cfg, const CliHooks& hooks) {
  const auto atom = make_atom(cfg);
  const auto w = make_worldline(cfg);
  const auto spectrum = pick_spectrum(cfg, w, hooks);
  const double gamma = decay_rate(atom, spectrum);
  const double h0 = cfg.h0.value_or(0.5 * atom.omega0);
  const double tau_max = cfg.tau_max.value_or(20.0 / gamma);
  const auto curve = relaxation_curve(atom, spectrum, h0, tau_max, cfg.samples);
  Table t = start_table("evolve", cfg);
  t.summary.emplace_back("worldline", w.describe());
  t.summary.emplace_back("spectrum", spectrum.describe());
  t.summary.emplace_back("gamma", curve.gamma);
  t.summary.emplace_back("h_eq", curve.h_eq);
  t.summary.emplace_back("h0", curve.h0);
  t.columns = {"tau", "h_analytic", "h_rk4"};
  for (std::size_t i = 0; i < curve.tau.size(); ++i)
    t.rows.push_back({curve.tau[i], curve.analytic[i], curve.rk4[i]});
  return t;
}

Table cmd_lambshift(const ScenarioConfig& cfg, const CliHooks& hooks) {
  const auto atom = make_atom(cfg);
  const auto w = make_worldline(cfg);
  const auto spectrum = pick_spectrum(cfg, w, hooks);
  ShiftOptions opt;
  if (cfg.cutoff) opt.cutoff_factor = *cfg.cutoff / atom.omega0;
  opt.rel_tol = cfg.tol;
  const auto r = relative_shift_vf(atom, spectrum, opt);
  const double gamma_inert = inertial_decay_rate(atom);
  Table t = start_table("lambshift", cfg);
  t.summary.emplace_back("worldline", w.describe());
  t.summary.emplace_back("spectrum", spectrum.describe());
  t.columns = {"quantity", "value"};
  t.rows.push_back({std::string("D"), r.correction});
  t.rows.push_back({std::string("D_over_gamma_inert"), r.correction / gamma_inert});
  t.rows.push_back({std::string("delta_inert"), r.delta_inert});
  t.rows.push_back({std::string("cutoff"), r.cutoff});
  t.rows.push_back({std::string("delta_total"), r.delta_total});
  t.rows.push_back({std::string("rr_plus"), r.rr_plus});
  t.rows.push_back({std::string("rr_minus"), r.rr_minus});
  t.rows.push_back({std::string("gamma_inert"), gamma_inert});
  if (const auto& ab = spectrum.high_velocity()) {
    const double closed = d_closed_form(atom, spectrum.acceleration(), *ab);
    t.rows.push_back({std::string("D_closed_form"), closed});
    t.rows.push_back({std::string("A"), ab->A});
    t.rows.push_back({std::string("B"), ab->B});
  }
  return t;
}

std::vector<double> make_grid(const ScenarioConfig& cfg) {
  const int n = cfg.grid_points;
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    grid[static_cast<std::size_t>(i)] =
        cfg.grid_scale == "log"
            ? cfg.grid_min * std::pow(cfg.grid_max / cfg.grid_min, s)
            : cfg.grid_min + (cfg.grid_max - cfg.grid_min) * s;
  }
  grid.back() = cfg.grid_max;
  return grid;
}

Table cmd_sweep(const ScenarioConfig& cfg) {
  const auto atom = make_atom(cfg);
  const auto grid = make_grid(cfg);
  std::optional<double> speed;
  if (!cfg.ultrarelativistic && cfg.speed) {
    if (!(*cfg.speed > 0.0)) throw ConfigError("sweep speed must be positive");
    speed = cfg.speed;
  }
  const auto ab = speed ? high_velocity_constants(*speed) : HighVelocityConstants::ultrarelativistic();
  const auto rows = sweep_correction(atom, grid, speed, thread_budget());
  Table t = start_table("sweep", cfg);
  t.summary.emplace_back("A", ab.A);
  t.summary.emplace_back("B", ab.B);
  t.summary.emplace_back("constants", std::string(speed ? "speed" : "ultrarelativistic"));
  t.columns = {"a_over_omega0", "D_over_gamma_inert"};
  for (const auto& r : rows) t.rows.push_back({r.a_over_omega0, r.d_over_gamma_inert});
  return t;
}

Table cmd_electron(const ScenarioConfig& cfg) {
  const double v = cfg.speed.value_or(0.999);
  if (!(v > 0.0)) throw ConfigError("electron speed must satisfy 0 < v < 1");
  const auto e = electron_scenario(cfg.b0, v, cfg.g);
  Table t = start_table("electron", cfg);
  t.summary.emplace_back("charge_to_mass_C_per_kg", electron_charge_to_mass);
  t.columns = {"quantity", "value"};
  t.rows.push_back({std::string("b0_tesla"), e.field_tesla});
  t.rows.push_back({std::string("speed"), e.speed});
  t.rows.push_back({std::string("g"), e.g_factor});
  t.rows.push_back({std::string("comoving_field_tesla"), e.comoving_field_tesla});
  t.rows.push_back({std::string("omega0_per_s"), e.omega0});
  t.rows.push_back({std::string("acceleration_per_s"), e.acceleration});
  t.rows.push_back({std::string("a_over_omega0"), e.a_over_omega0});
  t.rows.push_back({std::string("A"), e.constants.A});
  t.rows.push_back({std::string("B"), e.constants.B});
  t.rows.push_back({std::string("constants_valid"), e.constants.valid});
  t.rows.push_back({std::string("D_over_gamma_inert"), e.d_over_gamma_inert});
  return t;
}

Table cmd_verify(const ScenarioConfig& cfg, const CliHooks& hooks, bool& passed,
                 std::ostream& err) {
  const auto level = cfg.level == "full" ? VerifyLevel::Full : VerifyLevel::Fast;
  const auto report = run_verification(
      level, hooks.verify_factory ? hooks.verify_factory : default_spectrum_factory());
  Table t = start_table("verify", cfg);
  t.summary.emplace_back("level", cfg.level);
  t.summary.emplace_back("passed", report.passed());
  t.columns = {"check", "passed", "measured", "tolerance", "statement", "detail"};
  for (const auto& c : report.checks) {
    t.rows.push_back({c.name, c.passed, c.measured, c.tolerance, c.statement, c.detail});
    if (!c.passed) err << "verify: FAILED " << c.name << ": " << c.detail << "\n";
  }
  err << "verify: " << std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const auto& c) { return c.passed; })
      << "/" << report.checks.size() << " checks passed in " << report.seconds << " s\n";
  passed = report.passed();
  return t;
}

} // namespace

unsigned thread_budget() {
  const char* env = std::getenv("UNRUH_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  unsigned n = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto r = std::from_chars(env, end, n);
  if (r.ec != std::errc{} || r.ptr != end || n == 0)
    throw ConfigError(std::string("UNRUH_THREADS must be a positive integer (got '") + env + "')");
  return n;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Transition rates, level shifts and effective temperatures of an accelerated "
               "two-level atom",
               "unruh"};
  app.require_subcommand(1);
  Flags f;

  auto* rates = app.add_subcommand("rates", "per-level vf/rr rates and Einstein coefficients");
  auto* evolve = app.add_subcommand("evolve", "relaxation of <H_A> towards equilibrium");
  auto* lamb = app.add_subcommand("lambshift", "relative level shift and its acceleration part D");
  auto* sweep = app.add_subcommand("sweep", "D / Gamma_inert along a grid of a/omega0");
  auto* electron = app.add_subcommand("electron", "electron in a storage-ring magnetic field");
  auto* verify = app.add_subcommand("verify", "numerical checks of the model's theorems");
  for (auto* sub : {rates, evolve, lamb, sweep, electron, verify}) add_common(sub, f);

  evolve->add_option("--h0", f.h0, "initial <H_A>, default omega0/2");
  evolve->add_option("--tau-max", f.tau_max, "final proper time, default 20/Gamma");
  evolve->add_option("--samples", f.samples, "number of intervals sampled");
  lamb->add_option("--cutoff", f.cutoff, "frequency cutoff, default 1000 omega0");
  lamb->add_flag("--ultrarelativistic", f.ultrarelativistic, "circular closed form with A = B = 1");
  sweep->add_option("--grid-min", f.grid_min, "smallest a/omega0");
  sweep->add_option("--grid-max", f.grid_max, "largest a/omega0");
  sweep->add_option("--points", f.grid_points, "number of grid points");
  sweep->add_option("--scale", f.grid_scale, "log | linear");
  sweep->add_flag("--ultrarelativistic", f.ultrarelativistic, "A = B = 1 even if --speed is set");
  electron->add_option("--b0", f.b0, "lab magnetic field in tesla");
  electron->add_option("--g", f.g, "gyromagnetic factor");
  verify->add_option("--level", f.level, "fast | full");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    const ScenarioConfig cfg = resolve(f);
    Table table;
    bool passed = true;
    if (rates->parsed()) table = cmd_rates(cfg, hooks);
    else if (evolve->parsed()) table = cmd_evolve(cfg, hooks);
    else if (lamb->parsed()) table = cmd_lambshift(cfg, hooks);
    else if (sweep->parsed()) table = cmd_sweep(cfg);
    else if (electron->parsed()) table = cmd_electron(cfg);
    else table = cmd_verify(cfg, hooks, passed, err);

    const std::string text = render(table, cfg.format);
    if (cfg.out == "-") {
      out << text;
    } else {
      try {
        write_atomically(cfg.out, text);
      } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
      }
    }
    return passed ? kOk : kVerifyFailed;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }
}

} // namespace unruh::cli
