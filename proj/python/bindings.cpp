#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qhe/commands.hpp"
#include "qhe/config.hpp"
#include "qhe/cutoff.hpp"
#include "qhe/eigensolve.hpp"
#include "qhe/errors.hpp"
#include "qhe/hamiltonians.hpp"
#include "qhe/meanfield.hpp"
#include "qhe/stirling.hpp"
#include "qhe/thermo.hpp"
#include "qhe/toymodel.hpp"

namespace py = pybind11;
using namespace qhe;

namespace {

ModelParams make_params(const std::string& model, int n, double omega0, double omega, double gamma, double lambda,
                        int cutoff) {
    ModelParams p;
    p.model = model_from_string(model);
    p.n_particles = n;
    p.omega0 = omega0;
    p.omega = omega;
    p.gamma = gamma;
    p.lambda = lambda;
    p.boson_cutoff = cutoff;
    return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stirling-cycle quantum heat engines on the LMG and Dicke models";

    auto base = py::register_exception<Error>(m, "QheError", PyExc_RuntimeError);
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<ContractError>(m, "ContractError", base.ptr());
    py::register_exception<SolverError>(m, "SolverError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init(&make_params), py::arg("model") = "lmg", py::arg("n_particles") = 1, py::arg("omega0") = 1.0,
             py::arg("omega") = 1.0, py::arg("gamma") = 0.0, py::arg("lam") = 0.0, py::arg("boson_cutoff") = 1)
        .def_property_readonly("model", [](const ModelParams& p) { return std::string(to_string(p.model)); })
        .def_readwrite("n_particles", &ModelParams::n_particles)
        .def_readwrite("omega0", &ModelParams::omega0)
        .def_readwrite("omega", &ModelParams::omega)
        .def_readwrite("gamma", &ModelParams::gamma)
        .def_readwrite("lam", &ModelParams::lambda)
        .def_readwrite("boson_cutoff", &ModelParams::boson_cutoff)
        .def("validate", &ModelParams::validate)
        .def("with_lambda", &ModelParams::with_lambda)
        .def("__repr__", &describe);

    m.def("hamiltonian", [](const ModelParams& p) { return build_hamiltonian(p).entries(); },
          "Dense Hamiltonian matrix (Dicke: boson-major ordering)");
    m.def("parity", [](const ModelParams& p) { return build_parity(p).entries(); });
    m.def("excitation_number", [](const ModelParams& p) { return build_excitation_number(p).entries(); });
    m.def("critical_coupling", [](const ModelParams& p) { return critical_coupling(p).lambda_c; });

    m.def("eigvalsh", [](const Eigen::MatrixXd& h) { return eigh(OperatorMatrix(h)).eigenvalues; },
          "Ascending eigenvalues of an exactly symmetric matrix");
    m.def("eigh", [](const Eigen::MatrixXd& h) {
        auto s = eigh(OperatorMatrix(h), EigenvectorMode::Compute);
        return py::make_tuple(s.eigenvalues, *s.eigenvectors);
    });
    m.def("spectrum", [](const ModelParams& p) { return model_spectrum(p).eigenvalues; });

    py::class_<ThermalState>(m, "ThermalState")
        .def_readonly("beta", &ThermalState::beta)
        .def_readonly("log_z", &ThermalState::log_z)
        .def_readonly("internal_energy", &ThermalState::internal_energy)
        .def_readonly("entropy", &ThermalState::entropy)
        .def_readonly("free_energy", &ThermalState::free_energy);
    m.def("thermal_state", [](const std::vector<double>& e, double beta) { return thermal_state(e, beta); },
          py::arg("energies"), py::arg("beta"));

    py::class_<Baths>(m, "Baths")
        .def(py::init([](double beta_hot, double beta_cold) {
                 Baths b{beta_hot, beta_cold};
                 b.validate();
                 return b;
             }),
             py::arg("beta_hot"), py::arg("beta_cold"))
        .def_static("from_temperatures", &Baths::from_temperatures, py::arg("t_hot"), py::arg("t_cold"))
        .def_readonly("beta_hot", &Baths::beta_hot)
        .def_readonly("beta_cold", &Baths::beta_cold)
        .def_property_readonly("carnot", &Baths::carnot);

    py::class_<CycleResult>(m, "CycleResult")
        .def_readonly("q_ab", &CycleResult::q_ab)
        .def_readonly("q_bc", &CycleResult::q_bc)
        .def_readonly("q_cd", &CycleResult::q_cd)
        .def_readonly("q_da", &CycleResult::q_da)
        .def_readonly("work", &CycleResult::work)
        .def_readonly("efficiency", &CycleResult::efficiency)
        .def_readonly("carnot", &CycleResult::carnot)
        .def_readonly("absorbed_heat", &CycleResult::absorbed_heat)
        .def_property_readonly("status", [](const CycleResult& r) { return std::string(to_string(r.status)); })
        .def_readonly("message", &CycleResult::message);

    auto spec = [](const ModelParams& base, double l1, double l2, const Baths& baths) {
        return CycleSpec{base, l1, l2, baths};
    };
    m.def("run_cycle",
          [spec](const ModelParams& base, double lambda1, double lambda2, const Baths& baths) {
              return run_cycle(spec(base, lambda1, lambda2, baths));
          },
          py::arg("base"), py::arg("lambda1"), py::arg("lambda2"), py::arg("baths"));
    m.def("efficiency_sweep",
          [spec](const ModelParams& base, double lambda1, const std::vector<double>& grid, const Baths& baths,
                 int workers) {
              py::gil_scoped_release release;
              return efficiency_sweep(spec(base, lambda1, 0.0, baths), grid, workers);
          },
          py::arg("base"), py::arg("lambda1"), py::arg("lambda2_grid"), py::arg("baths"), py::arg("workers") = 1);
    m.def("converge_cutoff",
          [spec](const ModelParams& base, double lambda1, double lambda2, const Baths& baths, int initial,
                 double growth, double tolerance, int max_cutoff, int confirmations) {
              CutoffPolicy policy;
              policy.initial = initial;
              policy.growth = growth;
              policy.tolerance = tolerance;
              policy.max_cutoff = max_cutoff;
              policy.confirmations = confirmations;
              const auto c = converge_cutoff(spec(base, lambda1, lambda2, baths), policy);
              return py::make_tuple(c.cutoff, c.result);
          },
          py::arg("base"), py::arg("lambda1"), py::arg("lambda2"), py::arg("baths"), py::arg("initial") = 8,
          py::arg("growth") = 2.0, py::arg("tolerance") = 1e-6, py::arg("max_cutoff") = 512,
          py::arg("confirmations") = CutoffPolicy{}.confirmations);

    m.def("meanfield_energy",
          [](const std::string& model, double lambda, double omega0, double omega) {
              const Model mdl = model_from_string(model);
              const auto r = meanfield_energy(mdl, omega, omega0, lambda);
              py::dict d;
              d["energy_per_particle"] = r.energy_per_particle;
              d["entropy_per_particle"] = r.entropy_per_particle;
              d["phase"] = std::string(phase_name(mdl, r.phase));
              d["lambda_c"] = r.lambda_c;
              d["d2u"] = meanfield_second_derivative(mdl, omega, omega0, lambda);
              return d;
          },
          py::arg("model"), py::arg("lam"), py::arg("omega0") = 1.0, py::arg("omega") = 1.0);
    m.def("second_derivative_jump",
          [](const std::string& model, double omega0, double omega) {
              return second_derivative_jump(model_from_string(model), omega, omega0);
          },
          py::arg("model"), py::arg("omega0") = 1.0, py::arg("omega") = 1.0);

    m.def("toy_levels", &toy_levels, py::arg("lam"));
    m.def("toy_cycle", &toy_cycle, py::arg("lambda1"), py::arg("lambda2"), py::arg("baths"));
    m.def("toy_sweep",
          [](double lambda1, const std::vector<double>& grid, const Baths& baths, int workers) {
              py::gil_scoped_release release;
              return toy_sweep(lambda1, grid, baths, workers);
          },
          py::arg("lambda1"), py::arg("lambda2_grid"), py::arg("baths"), py::arg("workers") = 1);

    m.def("preset_names", &preset_names);
    m.def("preset_text", [](const std::string& name) { return preset_text(name); });
    m.def("run",
          [](const std::string& command, const std::string& config_json, const std::string& format, int workers) {
              const SweepConfig cfg = parse_config(config_json);
              RunOptions options;
              options.format = output_format_from_string(format);
              options.workers = workers;
              std::ostringstream out;
              {
                  py::gil_scoped_release release;
                  run_command(command_from_string(command), cfg, out, options);
              }
              return out.str();
          },
          py::arg("command"), py::arg("config_json"), py::arg("format") = "csv", py::arg("workers") = 1,
          "Run a CLI subcommand on a JSON config and return the table text");
}
