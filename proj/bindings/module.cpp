// pybind11 bindings exposing the main operations to Python.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xdiscord/explorer.hpp"
#include "xdiscord/povm.hpp"
#include "xdiscord/version.hpp"

namespace py = pybind11;
using namespace xdiscord;

namespace {

std::string repr_params(const BlochParams& p) {
  std::ostringstream os;
  os << "BlochParams(x=" << p.x << ", y=" << p.y << ", t=" << p.t << ", s=" << p.s
     << ", u=" << p.u << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_xdiscord, m) {
  m.doc() = "Quantum discord of two-qubit X-states";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidState>(m, "InvalidStateError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainErrorError", PyExc_ValueError);
  py::register_exception<InvalidPovm>(m, "InvalidPovmError", PyExc_ValueError);
  py::register_exception<NoRoot>(m, "NoRootError", PyExc_RuntimeError);

  py::class_<BlochParams>(m, "BlochParams")
      .def(py::init([](double x, double y, double t, double s, double u) {
             return BlochParams{x, y, t, s, u};
           }),
           py::arg("x"), py::arg("y"), py::arg("t"), py::arg("s"), py::arg("u"))
      .def_readwrite("x", &BlochParams::x)
      .def_readwrite("y", &BlochParams::y)
      .def_readwrite("t", &BlochParams::t)
      .def_readwrite("s", &BlochParams::s)
      .def_readwrite("u", &BlochParams::u)
      .def("__repr__", &repr_params);

  py::class_<RawXState>(m, "RawXState")
      .def(py::init([](double r00, double r11, double r22, double r33,
                       std::complex<double> r03, std::complex<double> r12) {
             return RawXState{r00, r11, r22, r33, r03, r12};
           }),
           py::arg("rho00"), py::arg("rho11"), py::arg("rho22"), py::arg("rho33"),
           py::arg("rho03") = std::complex<double>(0.0, 0.0),
           py::arg("rho12") = std::complex<double>(0.0, 0.0))
      .def_readwrite("rho00", &RawXState::rho00)
      .def_readwrite("rho11", &RawXState::rho11)
      .def_readwrite("rho22", &RawXState::rho22)
      .def_readwrite("rho33", &RawXState::rho33)
      .def_readwrite("rho03", &RawXState::rho03)
      .def_readwrite("rho12", &RawXState::rho12);

  py::class_<CanonicalXState>(m, "CanonicalXState")
      .def(py::init([](double r00, double r11, double r22, double r33, double r03,
                       double r12) {
             CanonicalXState st{r00, r11, r22, r33, r03, r12};
             validate(st);
             return st;
           }),
           py::arg("rho00"), py::arg("rho11"), py::arg("rho22"), py::arg("rho33"),
           py::arg("rho03") = 0.0, py::arg("rho12") = 0.0)
      .def_readonly("rho00", &CanonicalXState::rho00)
      .def_readonly("rho11", &CanonicalXState::rho11)
      .def_readonly("rho22", &CanonicalXState::rho22)
      .def_readonly("rho33", &CanonicalXState::rho33)
      .def_readonly("rho03", &CanonicalXState::rho03)
      .def_readonly("rho12", &CanonicalXState::rho12)
      .def("__repr__", [](const CanonicalXState& st) {
        std::ostringstream os;
        os << "CanonicalXState(rho00=" << st.rho00 << ", rho11=" << st.rho11
           << ", rho22=" << st.rho22 << ", rho33=" << st.rho33 << ", rho03=" << st.rho03
           << ", rho12=" << st.rho12 << ")";
        return os.str();
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def("__getitem__", [](const Spectrum& s, std::size_t i) {
        if (i >= 4) throw py::index_error();
        return s[i];
      })
      .def("__len__", [](const Spectrum&) { return 4; })
      .def("__iter__",
           [](const Spectrum& s) { return py::make_iterator(s.begin(), s.end()); },
           py::keep_alive<0, 1>());

  py::enum_<AnalyticClass>(m, "AnalyticClass")
      .value("SIGMA_Z", AnalyticClass::SigmaZ)
      .value("SIGMA_X", AnalyticClass::SigmaX)
      .value("BOTH", AnalyticClass::Both)
      .value("UNKNOWN", AnalyticClass::Unknown);

  py::enum_<DiscordMethod>(m, "DiscordMethod")
      .value("ANALYTIC_Z", DiscordMethod::AnalyticZ)
      .value("ANALYTIC_X", DiscordMethod::AnalyticX)
      .value("NUMERIC_SCAN", DiscordMethod::NumericScan)
      .value("POVM_UPPER", DiscordMethod::PovmUpper);

  py::enum_<SampleConstraint>(m, "SampleConstraint")
      .value("NONE", SampleConstraint::None)
      .value("S_EQUALS_U", SampleConstraint::SEqualsU);

  py::class_<MinimizeOptions>(m, "MinimizeOptions")
      .def(py::init([](int grid_points, double refine_tol, bool fast_path) {
             MinimizeOptions o;
             o.grid_points = grid_points;
             o.refine_tol = refine_tol;
             o.fast_path = fast_path;
             return o;
           }),
           py::arg("grid_points") = 201, py::arg("refine_tol") = 1e-12,
           py::arg("fast_path") = true)
      .def_readwrite("grid_points", &MinimizeOptions::grid_points)
      .def_readwrite("refine_tol", &MinimizeOptions::refine_tol)
      .def_readwrite("fast_path", &MinimizeOptions::fast_path);

  py::class_<DiscordResult>(m, "DiscordResult")
      .def_readonly("discord", &DiscordResult::discord)
      .def_readonly("classical_correlation", &DiscordResult::classical_correlation)
      .def_readonly("mutual_information", &DiscordResult::mutual_information)
      .def_readonly("optimal_nz", &DiscordResult::optimal_nz)
      .def_readonly("method", &DiscordResult::method)
      .def_property_readonly("optimal_theta", &DiscordResult::optimal_theta)
      .def("__repr__", [](const DiscordResult& r) {
        std::ostringstream os;
        os << "DiscordResult(discord=" << r.discord << ", method=" << to_string(r.method)
           << ", optimal_nz=" << r.optimal_nz << ")";
        return os.str();
      });

  py::class_<PovmElement>(m, "PovmElement")
      .def(py::init([](double mu, std::array<double, 3> n) {
             return PovmElement{mu, n};
           }),
           py::arg("mu"), py::arg("n"))
      .def_readwrite("mu", &PovmElement::mu)
      .def_readwrite("n", &PovmElement::n);

  py::class_<Povm>(m, "Povm")
      .def(py::init<std::vector<PovmElement>>(), py::arg("elements"))
      .def_property_readonly("elements", &Povm::elements)
      .def("__len__", &Povm::size)
      .def("in_plane", &Povm::in_plane, py::arg("tol") = 1e-12);

  py::class_<XmPoint>(m, "XmPoint")
      .def_readonly("m", &XmPoint::m)
      .def_readonly("eps", &XmPoint::eps)
      .def_readonly("theta_opt", &XmPoint::theta_opt)
      .def_readonly("delta", &XmPoint::delta)
      .def_readonly("delta_tilde", &XmPoint::delta_tilde)
      .def("__repr__", [](const XmPoint& p) {
        std::ostringstream os;
        os << "XmPoint(m=" << p.m << ", eps=" << p.eps << ", theta_opt=" << p.theta_opt
           << ", delta=" << p.delta << ", delta_tilde=" << p.delta_tilde << ")";
        return os.str();
      });

  py::class_<RegionCell>(m, "RegionCell")
      .def_readonly("m", &RegionCell::m)
      .def_readonly("eps", &RegionCell::eps)
      .def_readonly("cls", &RegionCell::cls)
      .def_readonly("theta_opt", &RegionCell::theta_opt)
      .def_readonly("delta", &RegionCell::delta);

  py::class_<JdPoint>(m, "JdPoint")
      .def_readonly("m", &JdPoint::m)
      .def_readonly("eps", &JdPoint::eps)
      .def_readonly("j0", &JdPoint::j0)
      .def_readonly("d0", &JdPoint::d0)
      .def_readonly("j_vn", &JdPoint::j_vn)
      .def_readonly("d_vn", &JdPoint::d_vn)
      .def_readonly("j_povm_lower", &JdPoint::j_povm_lower)
      .def_readonly("d_povm_upper", &JdPoint::d_povm_upper);

  py::class_<SearchReport>(m, "SearchReport")
      .def_readonly("samples", &SearchReport::samples)
      .def_readonly("violations", &SearchReport::violations)
      .def_readonly("violation_rate", &SearchReport::violation_rate)
      .def_readonly("max_gap", &SearchReport::max_gap)
      .def_readonly("max_gap_params", &SearchReport::max_gap_params)
      .def_readonly("seed", &SearchReport::seed)
      .def_readonly("constraint", &SearchReport::constraint)
      .def_readonly("sampling_law", &SearchReport::sampling_law)
      .def_readonly("gap_tol", &SearchReport::gap_tol)
      .def_readonly("acceptance_rate", &SearchReport::acceptance_rate)
      .def_readonly("probe_params", &SearchReport::probe_params)
      .def_readonly("probe_gap", &SearchReport::probe_gap);

  // xstate operations
  // qualified: glibc's math.h also declares a ::canonicalize
  m.def("canonicalize", &xdiscord::canonicalize, py::arg("raw"), py::arg("tol") = kStateTol);
  m.def("bloch_params", &bloch_params, py::arg("state"));
  m.def("from_bloch_params", &from_bloch_params, py::arg("params"),
        py::arg("tol") = kStateTol);
  m.def("binary_entropy", &binary_entropy, py::arg("w"));
  m.def("spectrum", &spectrum, py::arg("state"));
  m.def("entropy", &entropy, py::arg("state"));
  m.def("entropy_a", &entropy_a, py::arg("state"));
  m.def("entropy_b", &entropy_b, py::arg("state"));
  m.def("mutual_information", &mutual_information, py::arg("state"));

  // discord operations (VnMeasurement is exposed as a plain nz float)
  m.def(
      "conditional_entropy_vn",
      [](const BlochParams& p, double nz) {
        return conditional_entropy_vn(p, VnMeasurement(nz));
      },
      py::arg("params"), py::arg("nz"));
  m.def(
      "discord_given_measurement",
      [](const BlochParams& p, double nz) {
        return discord_given_measurement(p, VnMeasurement(nz));
      },
      py::arg("params"), py::arg("nz"));
  m.def("classify_analytic", &classify_analytic, py::arg("state"));
  m.def("discord_sigma_z", &discord_sigma_z, py::arg("params"));
  m.def("discord_sigma_x", &discord_sigma_x, py::arg("params"));
  m.def("minimize_discord_vn", &minimize_discord_vn, py::arg("params"),
        py::arg("options") = MinimizeOptions{});
  m.def("classical_correlation", &classical_correlation, py::arg("params"),
        py::arg("options") = MinimizeOptions{});

  // povm operations
  m.def("three_outcome_povm", &three_outcome_povm, py::arg("theta"));
  m.def("conditional_entropy_povm", &conditional_entropy_povm, py::arg("params"),
        py::arg("povm"));
  m.def("discord_upper_povm", &discord_upper_povm, py::arg("params"),
        py::arg("options") = MinimizeOptions{});

  // families
  m.def(
      "x3_state", [](double mm, double eps) { return x3_state({mm, eps}); }, py::arg("m"),
      py::arg("eps"));
  m.def("boundary_bx", &boundary_bx, py::arg("m"), py::arg("eps"));
  m.def("boundary_bz", &boundary_bz, py::arg("m"), py::arg("eps"));
  m.def("bell_diagonal", &bell_diagonal, py::arg("t"), py::arg("s"), py::arg("u"));
  m.def("solve_xm", &solve_xm, py::arg("m"), py::arg("scan_options") = MinimizeOptions{},
        py::arg("theta_hint") = py::none());

  // explorer
  m.def("region_map", &region_map, py::arg("m_lo"), py::arg("m_hi"), py::arg("eps_lo"),
        py::arg("eps_hi"), py::arg("nm"), py::arg("neps"),
        py::arg("options") = MinimizeOptions{});
  m.def("xm_default_grid", &xm_default_grid, py::arg("points"));
  m.def("scan_xm_curve", &scan_xm_curve, py::arg("m_grid"),
        py::arg("options") = MinimizeOptions{});
  m.def("jd_diagram", &jd_diagram, py::arg("points"));
  m.def(
      "random_search",
      [](std::uint64_t n, SampleConstraint constraint, double gap_tol, std::uint64_t seed,
         int threads) {
        SearchOptions o;
        o.constraint = constraint;
        o.gap_tol = gap_tol;
        o.seed = seed;
        o.threads = threads;
        return random_search(n, o);
      },
      py::arg("n"), py::arg("constraint") = SampleConstraint::SEqualsU,
      py::arg("gap_tol") = 1e-6, py::arg("seed") = 20120515, py::arg("threads") = 0);
}
