#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "udw/evolution.hpp"
#include "udw/gzk.hpp"
#include "udw/landauer.hpp"
#include "udw/observables.hpp"

namespace py = pybind11;
using namespace udw;

PYBIND11_MODULE(_udw, m) {
    m.doc() = "finite-time two-level detector response in a thermal bath";

    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", err.ptr());
    py::register_exception<NonConvergence>(m, "NonConvergence", err.ptr());
    py::register_exception<InfiniteMeasurement>(m, "InfiniteMeasurement",
                                                err.ptr());
    py::register_exception<GridTooCoarse>(m, "GridTooCoarse", err.ptr());

    py::class_<BathParams>(m, "BathParams")
        .def(py::init([](double beta, double epsilon) {
                 BathParams b{beta, epsilon};
                 b.validate();
                 return b;
             }),
             py::arg("beta"), py::arg("epsilon") = 0.0)
        .def_static("vacuum", &BathParams::vacuum, py::arg("epsilon") = 0.0)
        .def_readonly("beta", &BathParams::beta)
        .def_readonly("epsilon", &BathParams::epsilon)
        .def("is_vacuum", &BathParams::is_vacuum);

    py::class_<DetectorParams>(m, "DetectorParams")
        .def(py::init([](double omega, double gbar, double tau_s) {
                 DetectorParams d{omega, gbar, tau_s};
                 d.validate();
                 return d;
             }),
             py::arg("omega"), py::arg("gbar"), py::arg("tau_s"))
        .def_readonly("omega", &DetectorParams::omega)
        .def_readonly("gbar", &DetectorParams::gbar)
        .def_readonly("tau_s", &DetectorParams::tau_s);

    py::class_<SwitchingProfile>(m, "SwitchingProfile")
        .def_static("gaussian", &SwitchingProfile::gaussian, py::arg("tau0"),
                    py::arg("tau_bar") = 0.0)
        .def_static("lorentz", &SwitchingProfile::lorentz, py::arg("tau0"),
                    py::arg("tau_bar") = 0.0)
        .def_static("exponential", &SwitchingProfile::exponential,
                    py::arg("tau0"), py::arg("tau_bar") = 0.0)
        .def_static("tanh_window", &SwitchingProfile::tanh_window,
                    py::arg("tau1"), py::arg("tau2"), py::arg("lambda"))
        .def_static("tanh_switch_off", &SwitchingProfile::tanh_switch_off,
                    py::arg("lambda"), py::arg("tau_bar") = 0.0)
        .def_static("tabulated", &SwitchingProfile::tabulated, py::arg("tau"),
                    py::arg("chi"))
        .def_static("constant_on", &SwitchingProfile::constant_on)
        .def_static("from_csv", &SwitchingProfile::from_csv, py::arg("path"))
        .def("chi", &SwitchingProfile::chi, py::arg("tau"))
        .def("chi_prime", &SwitchingProfile::chi_prime, py::arg("tau"))
        .def("chi_second", &SwitchingProfile::chi_second, py::arg("tau"))
        .def("effective_support", &SwitchingProfile::effective_support)
        .def_property_readonly("kind", [](const SwitchingProfile& p) {
            return to_string(p.kind());
        });

    m.def("spectral_f", &spectral_f, py::arg("omega"), py::arg("bath"));
    m.def("tilde_g_difference", &tilde_g_difference, py::arg("s"),
          py::arg("beta"));

    m.def(
        "measurement_time",
        [](const SwitchingProfile& p) { return measurement_time(p); },
        py::arg("profile"));
    m.def(
        "effective_time",
        [](const SwitchingProfile& p) { return effective_time(p); },
        py::arg("profile"));
    m.def(
        "d_chi",
        [](const SwitchingProfile& p, double s) { return d_chi_numeric(p, s); },
        py::arg("profile"), py::arg("s"));
    m.def("d_chi_closed", &d_chi_closed, py::arg("profile"), py::arg("s"));
    m.def(
        "apply_window_to_spectrum",
        [](const SwitchingProfile& p, double omega, const BathParams& bath) {
            return apply_window_to_spectrum(p, omega, bath);
        },
        py::arg("profile"), py::arg("omega"), py::arg("bath"));
    m.def("optimal_profile", &optimal_profile, py::arg("tau0"));

    py::class_<WindowDiagnostics>(m, "WindowDiagnostics")
        .def_readonly("tau_m", &WindowDiagnostics::tau_m)
        .def_readonly("tau_eff", &WindowDiagnostics::tau_eff)
        .def_readonly("ratio", &WindowDiagnostics::ratio);
    m.def(
        "window_diagnostics",
        [](const SwitchingProfile& p) { return window_diagnostics(p); },
        py::arg("profile"));

    m.def("zeta_renormalized", &zeta_renormalized, py::arg("omega"),
          py::arg("tau_s"));
    m.def(
        "coefficient",
        [](double t, double omega_signed, const SwitchingProfile& profile,
           const BathParams& bath, const DetectorParams& det) {
            return coefficient(t, omega_signed, profile, bath, det);
        },
        py::arg("t"), py::arg("omega_signed"), py::arg("profile"),
        py::arg("bath"), py::arg("detector"));

    py::class_<CoefficientGrid>(m, "CoefficientGrid")
        .def_readonly("t_grid", &CoefficientGrid::t_grid)
        .def_readonly("c_plus", &CoefficientGrid::c_plus)
        .def_readonly("c_minus", &CoefficientGrid::c_minus)
        .def_readonly("cumulative", &CoefficientGrid::cumulative)
        .def_readonly("negative_rate_flag", &CoefficientGrid::negative_rate_flag)
        .def_readonly("sharp_switch_warning",
                      &CoefficientGrid::sharp_switch_warning);
    m.def(
        "coefficient_grid",
        [](const SwitchingProfile& profile, const BathParams& bath,
           const DetectorParams& det, double t0, double t1, std::size_t n) {
            return coefficient_grid(profile, bath, det, t0, t1, n);
        },
        py::arg("profile"), py::arg("bath"), py::arg("detector"), py::arg("t0"),
        py::arg("t1"), py::arg("n"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("t_grid", &Trajectory::t_grid)
        .def_readonly("p", &Trajectory::p)
        .def_readonly("memory", &Trajectory::memory)
        .def_readonly("beta_star", &Trajectory::beta_star)
        .def_readonly("clamp_events", &Trajectory::clamp_events);
    py::class_<TransitionReport>(m, "TransitionReport")
        .def_readonly("p01", &TransitionReport::p01)
        .def_readonly("p10", &TransitionReport::p10)
        .def_readonly("p00", &TransitionReport::p00)
        .def_readonly("p11", &TransitionReport::p11)
        .def_readonly("xi", &TransitionReport::xi)
        .def_readonly("xi_undefined", &TransitionReport::xi_undefined);
    m.def("evolve", &evolve, py::arg("grid"), py::arg("p_initial"),
          py::arg("detector"));
    m.def("closed_form_ground_start", &closed_form_ground_start,
          py::arg("grid"), py::arg("detector"));
    m.def("memory_factor", &memory_factor, py::arg("grid"), py::arg("t"));
    m.def("transitions", &transitions, py::arg("grid"), py::arg("detector"));

    m.def(
        "leading_order_p01",
        [](const SwitchingProfile& profile, const BathParams& bath,
           const DetectorParams& det) {
            return leading_order_p01(profile, bath, det);
        },
        py::arg("profile"), py::arg("bath"), py::arg("detector"));
    m.def("kappa", &kappa, py::arg("x"));
    m.def(
        "xi_large_time",
        [](double tau_eff, const BathParams& bath, const DetectorParams& det) {
            return xi_large_time(tau_eff, bath, det);
        },
        py::arg("tau_eff"), py::arg("bath"), py::arg("detector"));
    m.def("effective_temperature", &effective_temperature, py::arg("bath"),
          py::arg("tau_eff"));
    m.def("entropy_shift", &entropy_shift, py::arg("bath"), py::arg("detector"),
          py::arg("tau_eff"));

    py::class_<SwitchOffReport>(m, "SwitchOffReport")
        .def_readonly("i_beta", &SwitchOffReport::i_beta)
        .def_readonly("i_p", &SwitchOffReport::i_p)
        .def_readonly("zeta_r", &SwitchOffReport::zeta_r)
        .def_readonly("delta_p", &SwitchOffReport::delta_p)
        .def_readonly("p_f", &SwitchOffReport::p_f)
        .def_readonly("asymptotic_rhs", &SwitchOffReport::asymptotic_rhs)
        .def_readonly("abrupt_limit_guard", &SwitchOffReport::abrupt_limit_guard);
    m.def(
        "switch_off_shift",
        [](double lambda, const BathParams& bath, const DetectorParams& det,
           double p_initial) {
            return switch_off_shift(lambda, bath, det, p_initial);
        },
        py::arg("lambda"), py::arg("bath"), py::arg("detector"),
        py::arg("p_initial"));

    m.def("binary_entropy", &binary_entropy, py::arg("p"));
    m.def("landauer_f", &landauer_f, py::arg("z"), py::arg("beta"),
          py::arg("omega"));
    m.def("occupancy", &occupancy, py::arg("z"), py::arg("omega"));
    m.def("inverse_temperature_of", &inverse_temperature_of, py::arg("p"),
          py::arg("omega"));
    m.def("work_bound", &work_bound, py::arg("beta"), py::arg("omega"),
          py::arg("p_initial"), py::arg("p_final"));
    m.def(
        "critical_beta_star",
        [](double beta, double omega) { return critical_beta_star(beta, omega); },
        py::arg("beta"), py::arg("omega"));
    m.def("p_critical_closed", &p_critical_closed, py::arg("beta"),
          py::arg("omega"));
    m.def("p_critical_exact", &p_critical_exact, py::arg("beta"),
          py::arg("omega"));
    m.def("tau_eff_critical", &tau_eff_critical, py::arg("beta"),
          py::arg("omega"));

    auto gz = m.def_submodule("gzk", "boosted-detector excitation estimates");
    py::class_<gzk::ResonanceLevel>(gz, "ResonanceLevel")
        .def(py::init([](double gbar, double omega_ev) {
                 gzk::ResonanceLevel l{gbar, omega_ev};
                 l.validate();
                 return l;
             }),
             py::arg("gbar"), py::arg("omega_ev"))
        .def_readonly("gbar", &gzk::ResonanceLevel::gbar)
        .def_readonly("omega_ev", &gzk::ResonanceLevel::omega_ev);
    py::class_<gzk::Scenario>(gz, "Scenario")
        .def(py::init<>())
        .def_static("with_default_level", &gzk::Scenario::with_default_level)
        .def_readwrite("mass_ev", &gzk::Scenario::mass_ev)
        .def_readwrite("energy_ev", &gzk::Scenario::energy_ev)
        .def_readwrite("temperature_k", &gzk::Scenario::temperature_k)
        .def_readwrite("levels", &gzk::Scenario::levels)
        .def_readwrite("t_m_seconds", &gzk::Scenario::t_m_seconds)
        .def("gamma", &gzk::Scenario::gamma)
        .def("set_path_length_mpc", &gzk::Scenario::set_path_length_mpc)
        .def("path_length_mpc", &gzk::Scenario::path_length_mpc)
        .def("boost_warning", &gzk::Scenario::boost_warning);
    gz.def("excitation_probability", &gzk::excitation_probability,
           py::arg("scenario"));
    gz.def("excitation_rate", &gzk::excitation_rate, py::arg("scenario"));
    gz.def("critical_energy", &gzk::critical_energy, py::arg("mass_ev"),
           py::arg("e_thr_ev"), py::arg("temperature_k"));
    gz.def("horizon_length_mpc", &gzk::horizon_length_mpc, py::arg("scenario"),
           py::arg("p_target"));

    py::class_<HeatingProfileResult>(m, "HeatingProfileResult")
        .def_readonly("profile", &HeatingProfileResult::profile)
        .def_readonly("tau_m", &HeatingProfileResult::tau_m)
        .def_readonly("curvature_defect", &HeatingProfileResult::curvature_defect)
        .def_readonly("defect_flag", &HeatingProfileResult::defect_flag);
    m.def(
        "heating_profile",
        [](double bar_beta, const std::vector<double>& omega_grid) {
            return heating_profile(bar_beta, omega_grid);
        },
        py::arg("bar_beta"), py::arg("omega_grid"));
}
