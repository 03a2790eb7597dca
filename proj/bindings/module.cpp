#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wqpe/bounds.hpp"
#include "wqpe/emulator.hpp"
#include "wqpe/errors.hpp"
#include "wqpe/qpe.hpp"
#include "wqpe/resources.hpp"
#include "wqpe/verify.hpp"
#include "wqpe/walk.hpp"
#include "wqpe/windows.hpp"

namespace py = pybind11;
using namespace wqpe;

namespace {

WindowSpec spec_of(const std::string& kind, double beta) {
    if (kind == "rect" || kind == "rectangular") return WindowSpec::rectangular();
    if (kind == "kaiser") return WindowSpec::kaiser(beta);
    throw ConfigError("window kind must be 'rect' or 'kaiser'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "window-assisted coherent phase-estimation laboratory (C++ core)";

    py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
    py::register_exception<GapError>(mod, "GapError", PyExc_RuntimeError);
    py::register_exception<InfeasibleError>(mod, "InfeasibleError", PyExc_RuntimeError);

    // windows
    mod.def("bessel_i0", &bessel_i0, py::arg("x"));
    mod.def("optimal_beta", &optimal_beta, py::arg("m"));
    mod.def("capped_beta", &capped_beta, py::arg("m"), py::arg("beta_max") = kDefaultBetaMax);
    mod.def(
        "make_window",
        [](const std::string& kind, double beta, int n) {
            return make_window(spec_of(kind, beta), n).amplitudes;
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"));

    // phase-register statistics
    mod.def(
        "phase_distribution",
        [](const std::string& kind, double beta, int n, double phi) {
            return phase_distribution(make_window(spec_of(kind, beta), n), phi).mass;
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"), py::arg("phi"));
    mod.def(
        "overlap",
        [](const std::string& kind, double beta, int n, double y) {
            return overlap(make_window(spec_of(kind, beta), n), y);
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"), py::arg("y"));
    mod.def(
        "worst_case_failure",
        [](const std::string& kind, double beta, int n, int band) {
            return worst_case_failure(make_window(spec_of(kind, beta), n), band);
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"), py::arg("band"));
    mod.def(
        "max_contamination_overlap",
        [](const std::string& kind, double beta, int n, int l) {
            return max_contamination_overlap(spec_of(kind, beta), n, l);
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"), py::arg("l"));
    mod.def(
        "half_bin_overlap",
        [](const std::string& kind, double beta, int n) {
            return half_bin_overlap(spec_of(kind, beta), n);
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"));

    // bounds
    mod.def(
        "error_bound",
        [](double p, double max_contam, int n_o, double c) {
            return error_bound({p, max_contam, n_o, c});
        },
        py::arg("p"), py::arg("max_contam"), py::arg("n_o"), py::arg("c"));
    mod.def(
        "success_bound",
        [](double p, double max_contam, int n_o, double c) {
            return success_bound({p, max_contam, n_o, c});
        },
        py::arg("p"), py::arg("max_contam"), py::arg("n_o"), py::arg("c"));
    mod.def("nu", &nu, py::arg("p"), py::arg("max_contam"));
    mod.def("default_c", &default_c, py::arg("p"), py::arg("max_contam"));

    // emulation
    py::class_<EmulationReport>(mod, "EmulationReport")
        .def_readonly("estimate", &EmulationReport::estimate)
        .def_readonly("truth", &EmulationReport::truth)
        .def_readonly("realized_error", &EmulationReport::realized_error)
        .def_readonly("p_learned", &EmulationReport::p_learned)
        .def_readonly("p_true", &EmulationReport::p_true)
        .def_readonly("theta_measured", &EmulationReport::theta_measured)
        .def_readonly("bound", &EmulationReport::bound)
        .def_readonly("success_flag", &EmulationReport::success_flag);
    mod.def(
        "run_algorithm",
        [](const Mat& H, const Mat& F, const std::string& kind, double beta, int n,
           int n_outer, double c) {
            const WindowVector w = make_window(spec_of(kind, beta), n);
            return run_algorithm(w, HermitianSystem::make(H), HermitianSystem::make(F),
                                 n_outer, c);
        },
        py::arg("hamiltonian"), py::arg("observable"), py::arg("kind"), py::arg("beta"),
        py::arg("n"), py::arg("n_outer"), py::arg("c") = -1.0);

    // resource model
    mod.def("baseline_qubits", &baseline_qubits, py::arg("lambda_h"), py::arg("gap"));
    mod.def("outer_qubits", &outer_qubits, py::arg("lambda_f"), py::arg("p_floor"),
            py::arg("eps_outer"));
    mod.def(
        "total_toffoli",
        [](int n, int n_o, bool unit_costs) {
            return total_toffoli(n, n_o, unit_costs ? CostModel::unit() : CostModel{});
        },
        py::arg("n"), py::arg("n_o"), py::arg("unit_costs") = true);
    mod.def(
        "estimate_case",
        [](const std::string& system, const std::string& observable,
           const std::string& kind, double beta, double epsilon) {
            const Observable obs = parse_observable(observable);
            const SystemCase* sys = reference_tables().find(system, obs);
            if (!sys) throw ConfigError("unknown system '" + system + "'");
            const double target = epsilon > 0.0 ? epsilon : sys->epsilon_target;
            const ResourceCase rc = estimate_case(*sys, obs, ErrorBudget::thirds(target),
                                                  spec_of(kind, beta), CostModel::unit());
            py::dict out;
            out["system"] = rc.sys.name;
            out["observable"] = observable_name(rc.observable);
            out["l"] = rc.l;
            out["m"] = rc.m;
            out["n"] = rc.n;
            out["beta"] = rc.beta;
            out["n_o"] = rc.n_o;
            out["p_floor"] = rc.p_floor;
            out["total_toffoli"] = rc.total_toffoli;
            out["qubit_estimate"] = rc.qubit_estimate;
            return out;
        },
        py::arg("system"), py::arg("observable"), py::arg("kind") = "kaiser",
        py::arg("beta") = 0.0, py::arg("epsilon") = 0.0);

    // verification suites
    mod.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, int count) {
            const SuiteResult res = run_suite(name, seed, count);
            py::dict out;
            out["suite"] = res.suite;
            out["count"] = res.count;
            out["violations"] = res.violations;
            out["skipped"] = res.skipped;
            out["worst"] = res.worst;
            out["ok"] = res.ok();
            return out;
        },
        py::arg("name"), py::arg("seed"), py::arg("count"));
    mod.def("suite_names", &suite_names);
}
