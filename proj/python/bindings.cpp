#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecs/closed_form.hpp"
#include "ecs/fock_oracle.hpp"
#include "ecs/moments.hpp"
#include "ecs/quadrature.hpp"
#include "ecs/special_functions.hpp"
#include "ecs/types.hpp"
#include "ecs/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "Excited coherent states of the harmonic oscillator: closed-form "
        "wave functions and moments, a truncated Fock-space reference "
        "computation, quadrature utilities and the cross-validation suite.";

    py::register_exception<ecs::TruncationError>(mod, "TruncationError");
    py::register_exception<ecs::PhaseError>(mod, "PhaseError");
    py::register_exception<ecs::OrderError>(mod, "OrderError");
    py::register_exception<ecs::DomainError>(mod, "DomainError");
    py::register_exception<ecs::ConvergenceError>(mod, "ConvergenceError");

    py::class_<ecs::OscillatorConfig>(mod, "OscillatorConfig")
        .def(py::init<>())
        .def(py::init([](double omega, double mass, double hbar) {
                 ecs::OscillatorConfig c{omega, mass, hbar};
                 c.validate();
                 return c;
             }),
             py::arg("omega") = 1.0, py::arg("mass") = 1.0,
             py::arg("hbar") = 1.0)
        .def_readwrite("omega", &ecs::OscillatorConfig::omega)
        .def_readwrite("mass", &ecs::OscillatorConfig::mass)
        .def_readwrite("hbar", &ecs::OscillatorConfig::hbar)
        .def("gamma", &ecs::OscillatorConfig::gamma)
        .def("x_scale", &ecs::OscillatorConfig::x_scale)
        .def("p_scale", &ecs::OscillatorConfig::p_scale)
        .def("period", &ecs::OscillatorConfig::period)
        .def("validate", &ecs::OscillatorConfig::validate)
        .def("__repr__", [](const ecs::OscillatorConfig& c) {
            return "OscillatorConfig(omega=" + std::to_string(c.omega) +
                   ", mass=" + std::to_string(c.mass) +
                   ", hbar=" + std::to_string(c.hbar) + ")";
        });

    py::class_<ecs::ECSParams>(mod, "ECSParams")
        .def(py::init<>())
        .def(py::init([](int m, double alpha_mag, double phase) {
                 ecs::ECSParams p;
                 p.m = m;
                 p.alpha_mag = alpha_mag;
                 p.phase = phase;
                 p.validate();
                 return p;
             }),
             py::arg("m"), py::arg("alpha_mag"), py::arg("phase") = 0.0)
        .def_readwrite("m", &ecs::ECSParams::m)
        .def_readwrite("alpha_mag", &ecs::ECSParams::alpha_mag)
        .def_readwrite("phase", &ecs::ECSParams::phase)
        .def("beta", &ecs::ECSParams::beta)
        .def("eps0", &ecs::ECSParams::eps0)
        .def_static("from_beta", &ecs::ECSParams::from_beta, py::arg("m"),
                    py::arg("beta"), py::arg("phase") = 0.0)
        .def("validate", &ecs::ECSParams::validate)
        .def("__repr__", [](const ecs::ECSParams& p) {
            return "ECSParams(m=" + std::to_string(p.m) +
                   ", alpha_mag=" + std::to_string(p.alpha_mag) +
                   ", phase=" + std::to_string(p.phase) + ")";
        });

    py::class_<ecs::GridSpec>(mod, "GridSpec")
        .def(py::init<>())
        .def(py::init([](double eps_min, double eps_max, int points) {
                 ecs::GridSpec g{eps_min, eps_max, points};
                 g.validate();
                 return g;
             }),
             py::arg("eps_min") = -6.0, py::arg("eps_max") = 6.0,
             py::arg("points") = 241)
        .def_readwrite("eps_min", &ecs::GridSpec::eps_min)
        .def_readwrite("eps_max", &ecs::GridSpec::eps_max)
        .def_readwrite("points", &ecs::GridSpec::points)
        .def("eps_at", &ecs::GridSpec::eps_at, py::arg("i"))
        .def("validate", &ecs::GridSpec::validate);

    // -- special functions ------------------------------------------------
    mod.def("hermite",
            py::overload_cast<int, double>(&ecs::hermite), py::arg("n"),
            py::arg("x"), "Physicists' Hermite polynomial H_n(x).");
    mod.def("hermite_complex",
            py::overload_cast<int, std::complex<double>>(&ecs::hermite),
            py::arg("n"), py::arg("z"), "H_n at a complex argument.");
    mod.def("ecs_norm_poly", &ecs::ecs_norm_poly, py::arg("m"),
            py::arg("beta"),
            "Normalization polynomial N_m(beta) of the excited coherent "
            "state (equals the Laguerre value L_m(-beta)).");

    py::class_<ecs::SeriesResult>(mod, "SeriesResult")
        .def_readonly("value", &ecs::SeriesResult::value)
        .def_readonly("converged", &ecs::SeriesResult::converged)
        .def_readonly("terms_used", &ecs::SeriesResult::terms_used)
        .def("__repr__", [](const ecs::SeriesResult& r) {
            return "SeriesResult(value=(" + std::to_string(r.value.real()) +
                   "+" + std::to_string(r.value.imag()) + "j), converged=" +
                   (r.converged ? "True" : "False") +
                   ", terms_used=" + std::to_string(r.terms_used) + ")";
        });
    mod.def("shifted_hermite_sum", &ecs::shifted_hermite_sum, py::arg("m"),
            py::arg("s"), py::arg("eps"), py::arg("terms"),
            py::arg("rel_tol") = 1e-14,
            "Partial sum of sum_n s^n H_{n+m}(eps) / n!.");
    mod.def("shifted_hermite_closed", &ecs::shifted_hermite_closed,
            py::arg("m"), py::arg("s"), py::arg("eps"),
            "Closed form exp(-s^2 + 2 s eps) H_m(eps - s) of the same sum.");

    // -- truncated Fock-space route --------------------------------------
    py::class_<ecs::TruncatedState>(mod, "TruncatedState")
        .def_readonly("amps", &ecs::TruncatedState::amps)
        .def("dim", &ecs::TruncatedState::dim);
    mod.def("default_dim", &ecs::default_dim, py::arg("params"));
    mod.def("build_coherent", &ecs::build_coherent, py::arg("params"),
            py::arg("dim") = 0, py::arg("tail_bound") = 1e-14);
    mod.def("build_ecs", &ecs::build_ecs, py::arg("params"),
            py::arg("dim") = 0, py::arg("tail_bound") = 1e-14);
    mod.def("evolve", &ecs::evolve, py::arg("state"), py::arg("osc"),
            py::arg("t"));
    mod.def("moment_x", &ecs::moment_x, py::arg("state"), py::arg("osc"),
            py::arg("power"));
    mod.def("moment_p", &ecs::moment_p, py::arg("state"), py::arg("osc"),
            py::arg("power"));
    mod.def("mean_n", &ecs::mean_n, py::arg("state"));

    // -- closed-form wave functions --------------------------------------
    mod.def("psi_fock", &ecs::psi_fock, py::arg("n"), py::arg("eps"),
            py::arg("osc"));
    mod.def("psi_coherent", &ecs::psi_coherent, py::arg("params"),
            py::arg("eps"), py::arg("osc"));
    mod.def("psi_ecs", &ecs::psi_ecs, py::arg("params"), py::arg("eps"),
            py::arg("osc"));
    mod.def("psi_ecs_t", &ecs::psi_ecs_t, py::arg("params"), py::arg("eps"),
            py::arg("t"), py::arg("osc"));
    mod.def("density_m1", &ecs::density_m1, py::arg("params"), py::arg("eps"),
            py::arg("t"), py::arg("osc"),
            "Closed-form |psi(eps,t)|^2 for one added quantum.");
    mod.def("synthesize", &ecs::synthesize, py::arg("state"), py::arg("eps"),
            py::arg("osc"),
            "Wave function built by summing the truncated Fock expansion.");

    // -- moments and squeezing -------------------------------------------
    py::enum_<ecs::ConstantsMode>(mod, "ConstantsMode")
        .value("Corrected", ecs::ConstantsMode::Corrected)
        .value("PaperLiteral", ecs::ConstantsMode::PaperLiteral);

    py::class_<ecs::MomentConstants>(mod, "MomentConstants")
        .def_readonly("m", &ecs::MomentConstants::m)
        .def_readonly("beta", &ecs::MomentConstants::beta)
        .def_readonly("N", &ecs::MomentConstants::N)
        .def_readonly("S1", &ecs::MomentConstants::S1)
        .def_readonly("S2", &ecs::MomentConstants::S2)
        .def_readonly("S3", &ecs::MomentConstants::S3)
        .def_readonly("S4", &ecs::MomentConstants::S4)
        .def_readonly("C1", &ecs::MomentConstants::C1)
        .def_readonly("C2", &ecs::MomentConstants::C2);
    mod.def("moment_constants", &ecs::moment_constants, py::arg("m"),
            py::arg("beta"),
            py::arg("mode") = ecs::ConstantsMode::Corrected);
    mod.def("mean_x", &ecs::mean_x, py::arg("mc"), py::arg("params"),
            py::arg("osc"), py::arg("t"));
    mod.def("delta_x", &ecs::delta_x, py::arg("mc"), py::arg("osc"),
            py::arg("t"), py::arg("phase") = 0.0);
    mod.def("delta_p", &ecs::delta_p, py::arg("mc"), py::arg("osc"),
            py::arg("t"), py::arg("phase") = 0.0);
    mod.def("uncertainty_product", &ecs::uncertainty_product, py::arg("mc"),
            py::arg("osc"), py::arg("t"), py::arg("phase") = 0.0);
    mod.def("squeeze_ratio_bounds", &ecs::squeeze_ratio_bounds, py::arg("mc"));
    mod.def("min_width_ratio", &ecs::min_width_ratio, py::arg("mc"));
    mod.def("is_squeezed", &ecs::is_squeezed, py::arg("mc"));
    mod.def("constants_residual", &ecs::constants_residual, py::arg("mc"),
            py::arg("osc"));

    py::class_<ecs::MomentReport>(mod, "MomentReport")
        .def_readonly("t", &ecs::MomentReport::t)
        .def_readonly("mean_x", &ecs::MomentReport::mean_x)
        .def_readonly("delta_x", &ecs::MomentReport::delta_x)
        .def_readonly("delta_p", &ecs::MomentReport::delta_p)
        .def_readonly("product", &ecs::MomentReport::product);
    mod.def("width_series", &ecs::width_series, py::arg("params"),
            py::arg("osc"), py::arg("t_min"), py::arg("t_max"),
            py::arg("steps"),
            py::arg("mode") = ecs::ConstantsMode::Corrected);

    // -- quadrature -------------------------------------------------------
    py::enum_<ecs::QuadMethod>(mod, "QuadMethod")
        .value("FixedNodeGaussian", ecs::QuadMethod::FixedNodeGaussian)
        .value("AdaptiveInterval", ecs::QuadMethod::AdaptiveInterval);
    py::class_<ecs::QuadratureSpec>(mod, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("method", &ecs::QuadratureSpec::method)
        .def_readwrite("eps_span", &ecs::QuadratureSpec::eps_span)
        .def_readwrite("rel_tol", &ecs::QuadratureSpec::rel_tol)
        .def_readwrite("max_subdivisions",
                       &ecs::QuadratureSpec::max_subdivisions);
    mod.def("default_quadrature_spec", &ecs::default_quadrature_spec,
            py::arg("params"));
    mod.def("integrate_density", &ecs::integrate_density, py::arg("f"),
            py::arg("spec"), py::arg("osc"), py::arg("weight_power"),
            "Integral of x^weight_power * f(eps(x)) dx over the real line.");
    py::class_<ecs::GaussHermiteRule>(mod, "GaussHermiteRule")
        .def_readonly("nodes", &ecs::GaussHermiteRule::nodes)
        .def_readonly("weights", &ecs::GaussHermiteRule::weights);
    mod.def("gauss_hermite", &ecs::gauss_hermite, py::arg("n"));
    mod.def("node_count_for_span", &ecs::node_count_for_span, py::arg("span"));

    // -- cross-validation -------------------------------------------------
    py::class_<ecs::CheckResult>(mod, "CheckResult")
        .def_readonly("name", &ecs::CheckResult::name)
        .def_readonly("residual", &ecs::CheckResult::residual)
        .def_readonly("tolerance", &ecs::CheckResult::tolerance)
        .def_readonly("pass_", &ecs::CheckResult::pass)
        .def_readonly("note", &ecs::CheckResult::note)
        .def("__repr__", [](const ecs::CheckResult& c) {
            return "CheckResult(name='" + c.name +
                   "', residual=" + std::to_string(c.residual) +
                   ", pass=" + (c.pass ? "True" : "False") + ")";
        });
    py::class_<ecs::VerifyOptions>(mod, "VerifyOptions")
        .def(py::init<>())
        .def_readwrite("paper_literal", &ecs::VerifyOptions::paper_literal)
        .def_readwrite("trunc_dim", &ecs::VerifyOptions::trunc_dim)
        .def_readwrite("osc", &ecs::VerifyOptions::osc);
    mod.def(
        "run_verification",
        [](const ecs::VerifyOptions& opts) { return ecs::run_verification(opts); },
        py::arg("opts") = ecs::VerifyOptions{},
        py::call_guard<py::gil_scoped_release>());
    mod.def("all_pass", &ecs::all_pass, py::arg("checks"));
}
