#include "unruh/spectral.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "unruh/constants.hpp"
#include "unruh/errors.hpp"
#include "unruh/fieldstats.hpp"
#include "unruh/quadrature.hpp"

namespace unruh {

HighVelocityConstants high_velocity_constants(double speed) {
  if (!std::isfinite(speed) || speed <= 0.0 || speed >= 1.0) {
    std::ostringstream msg;
    msg << "high-velocity constants need 0 < v < 1, got " << speed;
    throw DomainError(msg.str());
  }
  // (v gamma)^-2 = (1 - v^2) / v^2
  const double inv = (1.0 - speed) * (1.0 + speed) / (speed * speed);
  return {1.0 + 0.6 * inv, 1.0 - 0.2 * inv, speed >= kHighVelocityThreshold};
}

std::string_view to_string(SpectralMethod method) {
  switch (method) {
  case SpectralMethod::ClosedFormInertial: return "closed-form-inertial";
  case SpectralMethod::ClosedFormCircularHighV: return "closed-form-circular-high-v";
  case SpectralMethod::ClosedFormUniformAccel: return "closed-form-uniform-accel";
  case SpectralMethod::NumericSubtracted: return "numeric-subtracted";
  case SpectralMethod::Custom: return "custom";
  }
  return "unknown";
}

double inertial_spectrum(double omega) { return std::abs(omega) / (8.0 * pi); }

SpectralFunction SpectralFunction::inertial() {
  SpectralFunction s;
  s.method_ = SpectralMethod::ClosedFormInertial;
  return s;
}

SpectralFunction SpectralFunction::circular_high_velocity(double acceleration,
                                                          HighVelocityConstants ab) {
  if (!(acceleration > 0.0) || !std::isfinite(acceleration))
    throw DomainError("circular spectrum needs a positive acceleration");
  SpectralFunction s;
  s.method_ = SpectralMethod::ClosedFormCircularHighV;
  s.acceleration_ = acceleration;
  s.constants_ = ab;
  return s;
}

SpectralFunction SpectralFunction::circular_high_velocity(const Worldline& circular) {
  const auto* c = std::get_if<Circular>(&circular.kind());
  if (c == nullptr) throw DomainError("circular closed form needs a circular worldline");
  SpectralFunction s = circular_high_velocity(c->proper_acceleration(),
                                              high_velocity_constants(c->speed));
  s.worldline_ = circular;
  return s;
}

SpectralFunction SpectralFunction::uniform_acceleration(double acceleration) {
  if (!(acceleration > 0.0) || !std::isfinite(acceleration))
    throw DomainError("uniform-acceleration spectrum needs a positive acceleration");
  SpectralFunction s;
  s.method_ = SpectralMethod::ClosedFormUniformAccel;
  s.acceleration_ = acceleration;
  return s;
}

SpectralFunction SpectralFunction::numeric(const Worldline& w, NumericSpectralOptions options) {
  SpectralFunction s;
  s.method_ = SpectralMethod::NumericSubtracted;
  s.acceleration_ = w.proper_acceleration();
  s.worldline_ = w;
  s.numeric_ = options;
  return s;
}

SpectralFunction SpectralFunction::closed_form(const Worldline& w) {
  struct Visitor {
    const Worldline& w;
    SpectralFunction operator()(const Inertial&) const { return inertial(); }
    SpectralFunction operator()(const UniformAcceleration& u) const {
      SpectralFunction s = uniform_acceleration(u.acceleration);
      s.worldline_ = w;
      return s;
    }
    SpectralFunction operator()(const Circular&) const { return circular_high_velocity(w); }
  };
  SpectralFunction s = std::visit(Visitor{w}, w.kind());
  if (!s.worldline_) s.worldline_ = w;
  return s;
}

SpectralFunction SpectralFunction::custom(std::string label, std::function<double(double)> total,
                                          double acceleration) {
  SpectralFunction s;
  s.method_ = SpectralMethod::Custom;
  s.custom_ = std::move(total);
  s.label_ = std::move(label);
  s.acceleration_ = acceleration;
  return s;
}

double SpectralFunction::value(double omega) const {
  if (method_ == SpectralMethod::Custom) return custom_(omega);
  return inertial_spectrum(omega) + excess(omega);
}

double SpectralFunction::excess(double omega) const {
  const double w = std::abs(omega);
  switch (method_) {
  case SpectralMethod::ClosedFormInertial:
    return 0.0;
  case SpectralMethod::ClosedFormCircularHighV: {
    const double a = acceleration_;
    const auto& ab = *constants_;
    return a * ab.A / (16.0 * sqrt3 * pi) * std::exp(-2.0 * sqrt3 * ab.B * w / a);
  }
  case SpectralMethod::ClosedFormUniformAccel: {
    const double a = acceleration_;
    if (w == 0.0) return a / (8.0 * pi * pi);
    // (w/8pi)(coth(x) - 1) = (w/8pi) * 2 / (e^{2x} - 1), x = pi w / a.
    return w / (8.0 * pi) * 2.0 / std::expm1(2.0 * pi * w / a);
  }
  case SpectralMethod::NumericSubtracted: {
    if (w == 0.0) throw DomainError("numeric spectral function is not evaluated at omega = 0");
    const Worldline& line = *worldline_;
    const double a = acceleration_;
    const double scale = a > 0.0 ? std::min(w, a) : w;
    quad::CosineTransformOptions opt;
    opt.upper = numeric_.tail_factor / scale;
    opt.window = numeric_.tail_window;
    opt.rel_tol = numeric_.rel_tol;
    opt.abs_tol = numeric_.abs_tol * std::max(a, w);
    const auto r = quad::cosine_transform([&](double u) { return cf_subtracted(line, u); }, w, opt);
    if (!r.converged || r.tail_spread > numeric_.max_tail_spread * inertial_spectrum(w)) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "spectral quadrature failed at omega=" << omega << " on " << line.describe()
          << " (tail spread " << r.tail_spread << ", panel error " << r.panel_error << ")";
      throw QuadratureFailure(msg.str());
    }
    return r.value;
  }
  case SpectralMethod::Custom:
    return custom_(omega) - inertial_spectrum(omega);
  }
  return 0.0;
}

std::string SpectralFunction::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << to_string(method_);
  if (method_ == SpectralMethod::Custom) out << "(" << label_ << ")";
  if (acceleration_ > 0.0) out << " a=" << acceleration_;
  if (constants_) out << " A=" << constants_->A << " B=" << constants_->B;
  if (worldline_) out << " on " << worldline_->describe();
  return out.str();
}

double gamma_rr(const AtomModel& atom, double omega) {
  const double mu = atom.coupling;
  return -(mu * mu / (4.0 * pi)) * omega * omega * matrix_element_sq(Level::Plus, Level::Minus);
}

double gamma_vf(const AtomModel& atom, const SpectralFunction& spectrum, double omega) {
  const double mu = atom.coupling;
  return -2.0 * mu * mu * omega * matrix_element_sq(Level::Plus, Level::Minus) *
         spectrum.value(std::abs(omega));
}

RateBreakdown total_rate(const AtomModel& atom, const SpectralFunction& spectrum, Level level) {
  // Only the partner b != a contributes in the two-level model.
  const double w = atom.transition_frequency(level);
  RateBreakdown out;
  out.level = level;
  out.gamma_vf = gamma_vf(atom, spectrum, w);
  out.gamma_rr = gamma_rr(atom, w);
  out.gamma_total = out.gamma_vf + out.gamma_rr;
  return out;
}

} // namespace unruh
