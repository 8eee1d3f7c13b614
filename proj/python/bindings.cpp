#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dressedpair/acceptance.hpp"
#include "dressedpair/entanglement.hpp"
#include "dressedpair/errors.hpp"
#include "dressedpair/io.hpp"
#include "dressedpair/liouville.hpp"

namespace py = pybind11;
using namespace dressedpair;

namespace {

DensityMatrix make_state(const Matrix4c& rho, const std::string& basis) {
    DensityMatrix d;
    d.rho = rho;
    if (basis == "dressed") {
        d.basis = Basis::dressed;
    } else if (basis == "computational") {
        d.basis = Basis::computational;
    } else {
        throw UsageError("basis must be 'dressed' or 'computational'");
    }
    return d;
}

std::string basis_name(Basis b) {
    return b == Basis::dressed ? "dressed" : "computational";
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dressed-state Lindblad dynamics of two dipole-coupled atoms";

    py::class_<SystemParams>(m, "SystemParams")
        .def_static("from_occupations", &SystemParams::from_occupations,
                    py::arg("omega_over_gamma"), py::arg("chi"), py::arg("n1"),
                    py::arg("n2"))
        .def_static("from_temperature", &SystemParams::from_temperature,
                    py::arg("omega_over_gamma"), py::arg("chi"),
                    py::arg("hbar_omega_over_kT"))
        .def_readonly("omega_over_gamma", &SystemParams::omega_over_gamma)
        .def_readonly("chi", &SystemParams::chi)
        .def_readonly("n1", &SystemParams::n1)
        .def_readonly("n2", &SystemParams::n2);

    py::class_<RateSet>(m, "RateSet")
        .def_readonly("g", &RateSet::g)
        .def_readonly("omega1", &RateSet::omega1)
        .def_readonly("omega2", &RateSet::omega2)
        .def_readonly("omega3", &RateSet::omega3)
        .def_readonly("gamma1_plus", &RateSet::gamma1_plus)
        .def_readonly("gamma1_minus", &RateSet::gamma1_minus)
        .def_readonly("gamma2_plus", &RateSet::gamma2_plus)
        .def_readonly("gamma2_minus", &RateSet::gamma2_minus);

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("chi_lo", &ValidityReport::chi_lo)
        .def_readonly("chi_hi", &ValidityReport::chi_hi)
        .def_readonly("g_over_omega", &ValidityReport::g_over_omega)
        .def_readonly("rwa_ok", &ValidityReport::rwa_ok)
        .def_readonly("chi_candidate_fifth_root",
                      &ValidityReport::chi_candidate_fifth_root)
        .def_readonly("chi_candidate_cube_root",
                      &ValidityReport::chi_candidate_cube_root)
        .def_readonly("warnings", &ValidityReport::warnings)
        .def("chi_mid", &ValidityReport::chi_mid);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const Matrix4c& rho, const std::string& basis) {
                 return make_state(rho, basis);
             }),
             py::arg("rho"), py::arg("basis") = "dressed")
        .def_property_readonly("rho",
                               [](const DensityMatrix& d) { return d.rho; })
        .def_property_readonly(
            "basis", [](const DensityMatrix& d) { return basis_name(d.basis); })
        .def("check", &DensityMatrix::check, py::arg("herm_tol") = 1e-12,
             py::arg("trace_tol") = 1e-10, py::arg("pos_tol") = 1e-10)
        .def("min_eigenvalue", &DensityMatrix::min_eigenvalue);

    m.def("geometry_factor_parallel", &geometry_factor_parallel, py::arg("chi"));
    m.def("geometry_factor_axial", &geometry_factor_axial, py::arg("chi"));
    m.def("coupling_g", &coupling_g, py::arg("chi"));
    m.def("thermal_occupation", &thermal_occupation, py::arg("hbar_omega_over_kT"));
    m.def("dressed_rates", &dressed_rates, py::arg("params"));
    m.def("validity_window", &validity_window, py::arg("omega_over_gamma"));

    m.def("build_dressed_generator", &build_dressed_generator, py::arg("rates"),
          py::arg("n1"), py::arg("n2"), py::arg("omega_over_gamma"));
    m.def("build_phenomenological_generator", &build_phenomenological_generator,
          py::arg("omega_over_gamma"), py::arg("g"), py::arg("n1") = 0.0,
          py::arg("n2") = 0.0);

    m.def("analytic_eigenvalues",
          [](const RateSet& rates, double omega_over_gamma) {
              const auto sys = analytic_eigensystem_zero_temperature(
                  rates, complex_frequencies(rates, omega_over_gamma));
              std::vector<Complex> out;
              for (const auto& mode : sys.modes) out.push_back(mode.lambda);
              return out;
          },
          py::arg("rates"), py::arg("omega_over_gamma"));
    m.def("analytic_modes",
          [](const RateSet& rates, double omega_over_gamma) {
              const auto sys = analytic_eigensystem_zero_temperature(
                  rates, complex_frequencies(rates, omega_over_gamma));
              std::vector<std::tuple<Complex, Matrix4c, Matrix4c>> out;
              for (const auto& mode : sys.modes) {
                  out.emplace_back(mode.lambda, mode.right, mode.left);
              }
              return out;
          },
          py::arg("rates"), py::arg("omega_over_gamma"));

    m.def("spectral_evolve",
          [](const RateSet& rates, double omega_over_gamma,
             const DensityMatrix& rho0, double t) {
              const auto sys = analytic_eigensystem_zero_temperature(
                  rates, complex_frequencies(rates, omega_over_gamma));
              return spectral_evolve(sys, rho0, t);
          },
          py::arg("rates"), py::arg("omega_over_gamma"), py::arg("rho0"),
          py::arg("t"));
    m.def("evolve_closed_form_zero_temperature",
          [](const Matrix4c& P, const RateSet& rates, double omega_over_gamma,
             double t) {
              return evolve_closed_form_zero_temperature(
                  P, rates, complex_frequencies(rates, omega_over_gamma), t);
          },
          py::arg("P"), py::arg("rates"), py::arg("omega_over_gamma"), py::arg("t"));
    m.def("integrate_linear_ode",
          [](const Superoperator& L, const DensityMatrix& rho0,
             const std::vector<double>& t_grid, double max_step) {
              IntegrateOptions opts;
              if (max_step > 0.0) opts.max_step = max_step;
              return integrate_linear_ode(L, rho0, t_grid, opts);
          },
          py::arg("generator"), py::arg("rho0"), py::arg("t_grid"),
          py::arg("max_step") = 0.0);
    m.def("evolve_rotating_frame",
          [](const RateSet& rates, double n1, double n2, const DensityMatrix& rho0,
             const std::vector<double>& t_grid) {
              return evolve_rotating_frame(rates, n1, n2, rho0, t_grid);
          },
          py::arg("rates"), py::arg("n1"), py::arg("n2"), py::arg("rho0"),
          py::arg("t_grid"));
    m.def("evolve_eig", &evolve_eig, py::arg("generator"), py::arg("rho0"),
          py::arg("t_grid"));

    m.def("reduced_generator_finite_temperature",
          &reduced_generator_finite_temperature, py::arg("rates"), py::arg("n1"),
          py::arg("n2"));
    m.def("transient_steady_state", &transient_steady_state, py::arg("n1"),
          py::arg("n2"));
    m.def("evolve_phenomenological_diagonal", &evolve_phenomenological_diagonal,
          py::arg("P"), py::arg("t"));

    m.def("dressed_to_computational", &dressed_to_computational, py::arg("rho"));
    m.def("computational_to_dressed", &computational_to_dressed, py::arg("rho"));
    m.def("concurrence_general", &concurrence_general, py::arg("rho_comp"));
    m.def("concurrence_x_state", &concurrence_x_state, py::arg("rho_comp"));
    m.def("concurrence_single_excitation", &concurrence_single_excitation,
          py::arg("rho11"), py::arg("rho22"), py::arg("rho12"));
    m.def("concurrence_excited_atom_zero_T", &concurrence_excited_atom_zero_T,
          py::arg("rates"), py::arg("t"));
    m.def("concurrence_transient_steady", &concurrence_transient_steady,
          py::arg("P11"), py::arg("n1"), py::arg("n2"));

    m.def("run_acceptance", [](const std::string& corrupt) {
        AcceptanceOptions opts;
        opts.corrupt_tolerance_for = corrupt;
        std::vector<py::dict> out;
        for (const auto& r : run_acceptance(opts)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["residual"] = r.residual;
            d["tolerance"] = r.tolerance;
            d["detail"] = r.detail;
            out.push_back(std::move(d));
        }
        return out;
    }, py::arg("corrupt_tolerance_for") = std::string());

    m.def("parse_initial_state", &parse_initial_state, py::arg("spec"));
}
