#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unruh/dynamics.hpp"
#include "unruh/errors.hpp"
#include "unruh/expint.hpp"
#include "unruh/lambshift.hpp"
#include "unruh/verify.hpp"

namespace py = pybind11;
using namespace unruh;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rates, shifts and temperatures of a two-level atom on stationary worldlines";

  auto base = py::register_exception<Error>(m, "UnruhError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", base.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", base.ptr());

  py::enum_<Level>(m, "Level").value("PLUS", Level::Plus).value("MINUS", Level::Minus);

  py::class_<AtomModel>(m, "AtomModel")
      .def(py::init([](double omega0, double mu) {
             AtomModel a{omega0, mu};
             a.validate();
             return a;
           }),
           py::arg("omega0") = 1.0, py::arg("mu") = 1.0)
      .def_readonly("omega0", &AtomModel::omega0)
      .def_readonly("mu", &AtomModel::coupling)
      .def("transition_frequency", &AtomModel::transition_frequency);

  py::class_<Worldline>(m, "Worldline")
      .def_static("inertial", &Worldline::inertial, py::arg("speed") = 0.0)
      .def_static("uniform_acceleration", &Worldline::uniform_acceleration, py::arg("acceleration"))
      .def_static("circular", &Worldline::circular, py::arg("radius"), py::arg("speed"))
      .def_static("circular_with_acceleration", &Worldline::circular_with_acceleration,
                  py::arg("acceleration"), py::arg("speed"))
      .def_property_readonly("name", &Worldline::name)
      .def_property_readonly("proper_acceleration", &Worldline::proper_acceleration)
      .def("geodesic_interval_sq", &Worldline::geodesic_interval_sq)
      .def("__repr__", &Worldline::describe);

  py::class_<HighVelocityConstants>(m, "HighVelocityConstants")
      .def(py::init([](double A, double B) { return HighVelocityConstants{A, B, true}; }),
           py::arg("A") = 1.0, py::arg("B") = 1.0)
      .def_readonly("A", &HighVelocityConstants::A)
      .def_readonly("B", &HighVelocityConstants::B)
      .def_readonly("valid", &HighVelocityConstants::valid);
  m.def("high_velocity_constants", &high_velocity_constants, py::arg("speed"));

  py::class_<SpectralFunction>(m, "SpectralFunction")
      .def_static("inertial", &SpectralFunction::inertial)
      .def_static("uniform_acceleration", &SpectralFunction::uniform_acceleration)
      .def_static("circular_high_velocity",
                  py::overload_cast<double, HighVelocityConstants>(&SpectralFunction::circular_high_velocity),
                  py::arg("acceleration"), py::arg("constants") = HighVelocityConstants{})
      .def_static("numeric", [](const Worldline& w) { return SpectralFunction::numeric(w); })
      .def_static("closed_form", &SpectralFunction::closed_form)
      .def("__call__", &SpectralFunction::value)
      .def("excess", &SpectralFunction::excess)
      .def("__repr__", &SpectralFunction::describe);

  m.def("inertial_spectrum", &inertial_spectrum);
  m.def("total_rate", [](const AtomModel& a, const SpectralFunction& s, Level lv) {
    const auto r = total_rate(a, s, lv);
    return py::dict(py::arg("gamma_vf") = r.gamma_vf, py::arg("gamma_rr") = r.gamma_rr,
                    py::arg("gamma_total") = r.gamma_total);
  });
  m.def("einstein_coefficients", [](const AtomModel& a, const SpectralFunction& s) {
    const auto c = einstein_coefficients(a, s);
    return py::make_tuple(c.down, c.up);
  });
  m.def("decay_rate", &decay_rate);
  m.def("inertial_decay_rate", &inertial_decay_rate);
  m.def("equilibrium_energy", &equilibrium_energy);
  m.def("effective_temperature", &effective_temperature);
  m.def("relaxation_curve",
        [](const AtomModel& a, const SpectralFunction& s, double h0, double tau_max, int n) {
          const auto c = relaxation_curve(a, s, h0, tau_max, n);
          return py::dict(py::arg("gamma") = c.gamma, py::arg("h_eq") = c.h_eq,
                          py::arg("tau") = c.tau, py::arg("analytic") = c.analytic,
                          py::arg("rk4") = c.rk4);
        },
        py::arg("atom"), py::arg("spectrum"), py::arg("h0"), py::arg("tau_max"),
        py::arg("samples") = 200);

  m.def("expint_ei", &expint_ei);
  m.def("d_closed_form", &d_closed_form, py::arg("atom"), py::arg("acceleration"),
        py::arg("constants") = HighVelocityConstants{});
  m.def("relative_shift_vf", [](const AtomModel& a, const SpectralFunction& s) {
    const auto r = relative_shift_vf(a, s);
    return py::dict(py::arg("correction") = r.correction, py::arg("delta_inert") = r.delta_inert,
                    py::arg("cutoff") = r.cutoff, py::arg("rr_plus") = r.rr_plus,
                    py::arg("rr_minus") = r.rr_minus);
  });
  m.def("shift_rr_per_level",
        py::overload_cast<const AtomModel&, Level, double>(&shift_rr_per_level));
  m.def("sweep_correction",
        [](const AtomModel& a, const std::vector<double>& grid, std::optional<double> speed,
           unsigned threads) {
          std::vector<std::pair<double, double>> out;
          for (const auto& r : sweep_correction(a, grid, speed, threads))
            out.emplace_back(r.a_over_omega0, r.d_over_gamma_inert);
          return out;
        },
        py::arg("atom"), py::arg("grid"), py::arg("speed") = std::nullopt, py::arg("threads") = 1);
  m.def("electron_scenario",
        [](double b0, double v, double g) {
          const auto e = electron_scenario(b0, v, g);
          return py::dict(py::arg("omega0") = e.omega0, py::arg("acceleration") = e.acceleration,
                          py::arg("a_over_omega0") = e.a_over_omega0,
                          py::arg("d_over_gamma_inert") = e.d_over_gamma_inert);
        },
        py::arg("b0"), py::arg("speed"), py::arg("g") = 2.0);
  m.def("verify",
        [](const std::string& level) {
          const auto rep = run_verification(level == "full" ? VerifyLevel::Full : VerifyLevel::Fast);
          py::list checks;
          for (const auto& c : rep.checks)
            checks.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                                   py::arg("measured") = c.measured,
                                   py::arg("tolerance") = c.tolerance));
          return py::make_tuple(rep.passed(), checks);
        },
        py::arg("level") = "fast");
}
