#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hgf/errors.hpp"
#include "hgf/ineq.hpp"
#include "hgf/metrics.hpp"
#include "hgf/registry.hpp"
#include "hgf/scan.hpp"
#include "hgf/specfun.hpp"
#include "hgf/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::dict params_dict(const hgf::ineq::IneqCase& c) {
    py::dict d;
    for (const auto& p : c.params) d[py::str(p.name)] = p.value;
    return d;
}

hgf::scan::Report run(const std::string& suite, const std::map<std::string, std::string>& grids,
                      std::optional<long> samples, std::uint64_t seed, std::optional<double> tol, int jobs,
                      bool search) {
    hgf::scan::ScanSpec spec;
    spec.suite = suite;
    for (const auto& [name, text] : grids) spec.grids[name] = hgf::scan::Grid::parse(text);
    spec.samples = samples;
    spec.seed = seed;
    spec.tol = tol;
    spec.jobs = jobs;
    return search ? hgf::scan::run_search(spec) : hgf::scan::run_suite(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperbolic-type metrics, quasiconformal special functions and inequality checks";
    m.attr("__version__") = hgf::kVersion;

    py::register_exception<hgf::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<hgf::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<hgf::OverflowError>(m, "HgfOverflowError", PyExc_OverflowError);

    // special functions
    m.def("ellint_K", [](double r) { return hgf::specfun::ellint_K(r); }, "r"_a);
    m.def("mu", [](double r) { return hgf::specfun::mu(r); }, "r"_a);
    m.def("mu_inv", [](double y) { return hgf::specfun::mu_inv(y); }, "y"_a);
    m.def("gamma2", [](double s) { return hgf::specfun::gamma2(s); }, "s"_a);
    m.def("phi_K", [](double K, double r) { return hgf::specfun::phi_K(K, r); }, "K"_a, "r"_a);
    m.def("lambda_K", [](double K) { return hgf::specfun::lambda_K(K); }, "K"_a);
    m.def("eta_K", [](double K, double t) { return hgf::specfun::eta_K(K, t); }, "K"_a, "t"_a);

    // metrics
    using hgf::metrics::DiskPoint;
    using hgf::metrics::HalfPlanePoint;
    py::enum_<hgf::metrics::Domain>(m, "Domain")
        .value("HalfPlane", hgf::metrics::Domain::HalfPlane)
        .value("Disk", hgf::metrics::Domain::Disk);

    py::class_<HalfPlanePoint>(m, "HalfPlanePoint")
        .def(py::init<double, double>(), "re"_a, "im"_a)
        .def_property_readonly("re", &HalfPlanePoint::re)
        .def_property_readonly("im", &HalfPlanePoint::im)
        .def("__repr__", [](const HalfPlanePoint& p) {
            std::ostringstream os;
            os << "HalfPlanePoint(" << p.re() << ", " << p.im() << ")";
            return os.str();
        });

    py::class_<DiskPoint>(m, "DiskPoint")
        .def(py::init<double, double>(), "re"_a, "im"_a)
        .def_property_readonly("re", &DiskPoint::re)
        .def_property_readonly("im", &DiskPoint::im);

    py::class_<hgf::metrics::MobiusH>(m, "MobiusH")
        .def(py::init([](double a, double b, double c, double d) {
                 hgf::metrics::MobiusH mob{a, b, c, d};
                 mob.validate();
                 return mob;
             }),
             "a"_a, "b"_a, "c"_a, "d"_a)
        .def_readonly("a", &hgf::metrics::MobiusH::a)
        .def_readonly("b", &hgf::metrics::MobiusH::b)
        .def_readonly("c", &hgf::metrics::MobiusH::c)
        .def_readonly("d", &hgf::metrics::MobiusH::d);

    m.def("rho_half_plane", &hgf::metrics::rho_half_plane, "x"_a, "y"_a);
    m.def("rho_disk", &hgf::metrics::rho_disk, "a"_a, "b"_a);
    m.def("h_metric", py::overload_cast<double, const HalfPlanePoint&, const HalfPlanePoint&>(&hgf::metrics::h_metric),
          "c"_a, "p"_a, "q"_a);
    m.def("h_metric", py::overload_cast<double, const DiskPoint&, const DiskPoint&>(&hgf::metrics::h_metric), "c"_a,
          "p"_a, "q"_a);
    m.def("h_from_rho", &hgf::metrics::h_from_rho, "c"_a, "rho"_a);
    m.def("mobius_apply", &hgf::metrics::mobius_apply, "m"_a, "p"_a);
    m.def("stretch_map", &hgf::metrics::stretch_map, "K"_a, "p"_a);

    // inequality cases
    using hgf::ineq::IneqCase;
    py::class_<IneqCase>(m, "IneqCase")
        .def_readonly("name", &IneqCase::name)
        .def_property_readonly("params", &params_dict)
        .def_readonly("lhs", &IneqCase::lhs)
        .def_readonly("rhs", &IneqCase::rhs)
        .def_readonly("margin", &IneqCase::margin)
        .def_readonly("passed", &IneqCase::pass)
        .def("__repr__", [](const IneqCase& c) {
            std::ostringstream os;
            os.precision(17);
            os << "IneqCase(" << c.name << ", lhs=" << c.lhs << ", rhs=" << c.rhs << ", margin=" << c.margin
               << ", pass=" << (c.pass ? "True" : "False") << ")";
            return os.str();
        });

    const double tol = hgf::ineq::kDefaultTol;
    m.def("fuji_case", &hgf::ineq::fuji_case, "c"_a, "K"_a, "t"_a, "tol"_a = tol);
    m.def("remark310_case", &hgf::ineq::remark310_case, "tol"_a = tol);
    m.def("comp_rho_case", &hgf::ineq::comp_rho_case, "c"_a, "x"_a, "y"_a, "tol"_a = tol);
    m.def("bernoulli_pair", &hgf::ineq::bernoulli_pair, "c1"_a, "c2"_a, "t"_a, "tol"_a = tol);
    m.def("F_mfprop", &hgf::ineq::F_mfprop, "c"_a, "t"_a);
    m.def("distortion_rhs", py::overload_cast<double, double, double>(&hgf::ineq::distortion_rhs), "c"_a, "K"_a,
          "h"_a);
    m.def("schwarz_chain_case", py::overload_cast<double, double, double, double>(&hgf::ineq::schwarz_chain_case),
          "c"_a, "K"_a, "rho"_a, "tol"_a = tol);
    m.def("empirical_stretch_case", &hgf::ineq::empirical_stretch_case, "c"_a, "K"_a, "x"_a, "y"_a, "tol"_a = tol);

    // suites
    py::class_<hgf::scan::Report>(m, "Report")
        .def_readonly("suite", &hgf::scan::Report::suite)
        .def_readonly("seed", &hgf::scan::Report::seed)
        .def_readonly("tol", &hgf::scan::Report::tol)
        .def_readonly("rows", &hgf::scan::Report::rows)
        .def_readonly("expectation_met", &hgf::scan::Report::expectation_met)
        .def_property_readonly("violations", [](const hgf::scan::Report& r) { return r.summary.violations; })
        .def_property_readonly("min_margin", [](const hgf::scan::Report& r) { return r.summary.min_margin; })
        .def("to_csv", [](const hgf::scan::Report& r) {
            std::ostringstream os;
            hgf::scan::write_csv(os, r);
            return os.str();
        });

    m.def(
        "run_suite",
        [](const std::string& suite, const std::map<std::string, std::string>& grids, std::optional<long> samples,
           std::uint64_t seed, std::optional<double> tol, int jobs) {
            py::gil_scoped_release release;
            return run(suite, grids, samples, seed, tol, jobs, false);
        },
        "suite"_a, "grids"_a = std::map<std::string, std::string>{}, "samples"_a = py::none(), "seed"_a = 42,
        "tol"_a = py::none(), "jobs"_a = 0);
    m.def(
        "run_search",
        [](const std::string& target, const std::map<std::string, std::string>& grids, std::optional<long> samples,
           std::uint64_t seed, std::optional<double> tol, int jobs) {
            py::gil_scoped_release release;
            return run(target, grids, samples, seed, tol, jobs, true);
        },
        "target"_a, "grids"_a = std::map<std::string, std::string>{}, "samples"_a = py::none(), "seed"_a = 42,
        "tol"_a = py::none(), "jobs"_a = 0);
    m.def("suites", [] {
        std::vector<std::string> names;
        for (const auto& s : hgf::scan::suites()) names.push_back(s.name);
        return names;
    });

    m.def(
        "evaluate",
        [](const std::string& name, const py::kwargs& kwargs) {
            hgf::registry::Args args;
            for (const auto& [key, value] : kwargs) args[py::str(key)] = py::str(value);
            return hgf::registry::call(name, args);
        },
        "name"_a);
}
