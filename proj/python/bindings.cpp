#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <vector>

#include "powermin/analysis.hpp"
#include "powermin/configuration.hpp"
#include "powermin/energy.hpp"
#include "powermin/errors.hpp"
#include "powermin/io.hpp"
#include "powermin/optimizer.hpp"
#include "powermin/potential.hpp"
#include "powermin/verify.hpp"

namespace py = pybind11;
using namespace powermin;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// A 1-D array is n points on the line; a 2-D array is n x dim.
Configuration to_configuration(const Array& a) {
    if (a.ndim() == 1) return Configuration(1, std::vector<double>(a.data(), a.data() + a.size()));
    if (a.ndim() != 2) throw py::value_error("points must be a 1-D or 2-D array");
    return Configuration(static_cast<std::size_t>(a.shape(1)), std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(std::span<const double> values, std::size_t rows, std::size_t cols) {
    Array out({rows, cols});
    std::memcpy(out.mutable_data(), values.data(), values.size() * sizeof(double));
    return out;
}

Array points_of(const Configuration& c) { return to_array(c.coords(), c.size(), c.dim()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Global minimizers of repulsive-attractive power-law interaction energies";

    py::register_exception<CoincidentPoints>(m, "CoincidentPoints", PyExc_ValueError);
    py::register_exception<WrongPotentialClass>(m, "WrongPotentialClass", PyExc_ValueError);
    py::register_exception<BracketFailure>(m, "BracketFailure", PyExc_RuntimeError);

    py::enum_<PotentialClass>(m, "PotentialClass")
        .value("BothPositive", PotentialClass::BothPositive)
        .value("Mixed", PotentialClass::Mixed)
        .value("BothNegative", PotentialClass::BothNegative);

    py::class_<Potential>(m, "Potential")
        .def(py::init<double, double>(), py::arg("gamma"), py::arg("alpha"))
        .def_property_readonly("gamma", &Potential::gamma)
        .def_property_readonly("alpha", &Potential::alpha)
        .def_property_readonly("singular", &Potential::singular)
        .def_property_readonly("min_value", &Potential::min_value)
        .def("classify", &Potential::classify)
        .def("__call__", [](const Potential& p, double r) { return eval_w(p, r); }, py::arg("r"))
        .def("derivative", [](const Potential& p, double r) { return eval_w_prime(p, r); }, py::arg("r"))
        .def("__eq__", [](const Potential& a, const Potential& b) { return a == b; })
        .def("__repr__", [](const Potential& p) {
            return "Potential(gamma=" + format_double(p.gamma()) + ", alpha=" + format_double(p.alpha()) + ")";
        });

    py::class_<Configuration>(m, "Configuration")
        .def(py::init(&to_configuration), py::arg("points"))
        .def_property_readonly("dim", &Configuration::dim)
        .def_property_readonly("points", &points_of)
        .def("__len__", &Configuration::size)
        .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
        .def("to_json", [](const Configuration& c, int indent) { return configuration_to_json(c, indent); },
             py::arg("indent") = -1)
        .def_static("from_json", &configuration_from_json, py::arg("text"));
    py::implicitly_convertible<py::array, Configuration>();
    py::implicitly_convertible<py::list, Configuration>();
    py::implicitly_convertible<py::tuple, Configuration>();

    m.def("diameter", &diameter, py::arg("config"));
    m.def("min_gap", &min_gap, py::arg("config"));
    m.def("canonicalize", [](const Configuration& c) { return canonicalize(c); }, py::arg("config"));

    m.def("eval_energy", [](const Potential& p, const Configuration& c) { return eval_energy(p, c).total; },
          py::arg("potential"), py::arg("config"));
    m.def("eval_energy_continuum", &eval_energy_continuum, py::arg("potential"), py::arg("config"));
    m.def("eval_gradient", [](const Potential& p, const Configuration& c) {
        const auto g = eval_gradient(p, c);
        return to_array(g, c.size(), c.dim());
    }, py::arg("potential"), py::arg("config"));

    py::enum_<InitStrategy>(m, "InitStrategy")
        .value("UniformBox", InitStrategy::UniformBox)
        .value("PerturbedGrid", InitStrategy::PerturbedGrid);

    py::class_<OptimizerOptions>(m, "OptimizerOptions")
        .def(py::init<>())
        .def_readwrite("tol_grad", &OptimizerOptions::tol_grad)
        .def_readwrite("max_iter", &OptimizerOptions::max_iter)
        .def_readwrite("armijo_c", &OptimizerOptions::armijo_c)
        .def_readwrite("backtrack_factor", &OptimizerOptions::backtrack_factor)
        .def_readwrite("initial_step", &OptimizerOptions::initial_step)
        .def_readwrite("gap_guard", &OptimizerOptions::gap_guard)
        .def_readwrite("history", &OptimizerOptions::history);

    py::class_<MinimizeResult>(m, "MinimizeResult")
        .def_readonly("config", &MinimizeResult::config)
        .def_readonly("energy", &MinimizeResult::energy)
        .def_readonly("grad_inf_norm", &MinimizeResult::grad_inf_norm)
        .def_readonly("iterations", &MinimizeResult::iterations)
        .def_readonly("restarts_used", &MinimizeResult::restarts_used)
        .def_readonly("converged", &MinimizeResult::converged)
        .def("to_json", [](const MinimizeResult& r, int indent) { return minimize_result_to_json(r, indent); },
             py::arg("indent") = -1);

    m.def("local_minimize", [](const Potential& p, const Configuration& start, const OptimizerOptions& o) {
        py::gil_scoped_release release;
        return local_minimize(p, start, o);
    }, py::arg("potential"), py::arg("start"), py::arg("options") = OptimizerOptions{});

    m.def("global_minimize", [](const Potential& p, std::size_t n, std::size_t dim, std::size_t restarts,
                                std::uint64_t seed, InitStrategy init, const OptimizerOptions& o) {
        GlobalOptions g;
        g.restarts = restarts;
        g.seed = seed;
        g.init_strategy = init;
        g.optimizer = o;
        py::gil_scoped_release release;
        return global_minimize(p, n, dim, g);
    }, py::arg("potential"), py::arg("n"), py::arg("dim") = 1, py::arg("restarts") = 16, py::arg("seed") = 42,
       py::arg("init") = InitStrategy::PerturbedGrid, py::arg("options") = OptimizerOptions{});

    m.def("bound_diameter_case1", &bound_diameter_case1, py::arg("n"), py::arg("potential"));
    m.def("solve_min_gap", &solve_min_gap, py::arg("n"), py::arg("potential"));
    m.def("spreading_lower_bound", &spreading_lower_bound, py::arg("n"), py::arg("potential"));
    m.def("quadratic_newtonian_minimizer", &quadratic_newtonian_minimizer, py::arg("n"));
    m.def("wasserstein1_to_uniform", &wasserstein1_to_uniform, py::arg("config"), py::arg("half_width") = 1.0);

    py::class_<PowerLawFit>(m, "PowerLawFit")
        .def_readonly("exponent", &PowerLawFit::exponent)
        .def_readonly("prefactor", &PowerLawFit::prefactor)
        .def_readonly("r_squared", &PowerLawFit::r_squared)
        .def_readonly("sample_count", &PowerLawFit::sample_count);
    m.def("fit_power_law", [](const std::vector<std::pair<double, double>>& samples) { return fit_power_law(samples); },
          py::arg("samples"));

    m.def("verify_suite_names", [] {
        std::vector<std::string> out;
        for (auto name : verify_suite_names()) out.emplace_back(name);
        return out;
    });
    m.def("run_verify_suite", [](const std::string& name) {
        VerifyReport report;
        {
            py::gil_scoped_release release;
            report = run_verify_suite(name);
        }
        return report.to_json(-1);
    }, py::arg("name"), "Runs a suite and returns its report as a JSON string.");

    m.def("parse_sweep_csv", [](const std::string& text) {
        py::list rows;
        for (const auto& r : parse_sweep_csv(text)) {
            py::dict d;
            d["n"] = r.n;
            d["gamma"] = r.gamma;
            d["alpha"] = r.alpha;
            d["dim"] = r.dim;
            d["seed"] = r.seed;
            d["restarts"] = r.restarts;
            d["energy"] = r.energy;
            d["diameter"] = r.diameter;
            d["min_gap"] = r.min_gap;
            d["grad_inf_norm"] = r.grad_inf_norm;
            d["iterations"] = r.iterations;
            d["converged"] = r.converged;
            d["wall_ms"] = r.wall_ms;
            rows.append(std::move(d));
        }
        return rows;
    }, py::arg("text"));
}
