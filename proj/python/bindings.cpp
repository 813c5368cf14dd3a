#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqbif/bessel.hpp"
#include "eqbif/bifurcation.hpp"
#include "eqbif/errors.hpp"
#include "eqbif/morse_degree.hpp"
#include "eqbif/report.hpp"
#include "eqbif/serialization.hpp"

namespace py = pybind11;
using namespace eqbif;

namespace {

// Arbitrary-precision integers cross the boundary as decimal strings.
py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& v) {
  return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(v))).cast<std::string>());
}

// Plain Python containers travel through the json module.
json to_json_doc(const py::handle& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return json::parse(text);
}

py::object from_json_doc(const json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Interval window_from(const std::pair<double, double>& w) {
  Interval i{w.first, w.second};
  i.validate();
  return i;
}

Tolerances tolerances(double root, double merge) {
  Tolerances t;
  t.root = root;
  t.merge = merge;
  t.validate();
  return t;
}

// Owned by the module for the life of the interpreter.
PyObject* g_error = nullptr;
PyObject* g_computational = nullptr;

Spectrum spectrum_for(const SystemSpec& spec, const Interval& window, const Tolerances& tol) {
  return resolve_spectrum(spec, required_eigenvalue_bound(spec, window), tol);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant bifurcation analysis for Neumann elliptic systems";

  g_error = PyErr_NewException("eqbif._core.Error", PyExc_ValueError, nullptr);
  g_computational = PyErr_NewException("eqbif._core.ComputationalError", g_error, nullptr);
  m.add_object("Error", py::reinterpret_borrow<py::object>(g_error));
  m.add_object("ComputationalError", py::reinterpret_borrow<py::object>(g_computational));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(e.kind()) + ": " + e.what();
      PyErr_SetString(e.category() == ErrorCategory::Computational ? g_computational : g_error,
                      msg.c_str());
    }
  });

  py::class_<EulerSO2>(m, "EulerSO2")
      .def(py::init([](const py::object& unit, const py::dict& cyclic) {
             EulerSO2::CyclicMap c;
             for (const auto& [k, v] : cyclic) c[k.cast<std::int64_t>()] = from_py(v);
             return EulerSO2(from_py(unit), std::move(c));
           }),
           py::arg("unit") = 0, py::arg("cyclic") = py::dict())
      .def_static("unit_element", &EulerSO2::unit)
      .def_static(
          "chi", [](std::int64_t k, const py::object& c) { return EulerSO2::cyclic(k, from_py(c)); },
          py::arg("k"), py::arg("coeff") = 1)
      .def_property_readonly("unit", [](const EulerSO2& a) { return to_py(a.unit_coeff()); })
      .def_property_readonly("cyclic", [](const EulerSO2& a) {
        py::dict d;
        for (const auto& [k, v] : a.cyclic_coeffs()) d[py::int_(k)] = to_py(v);
        return d;
      })
      .def("is_zero", &EulerSO2::is_zero)
      .def("invert", [](const EulerSO2& a) { return invert(a); })
      .def("__pow__", [](const EulerSO2& a, std::int64_t n) { return pow(a, n); })
      .def("__add__", [](const EulerSO2& a, const EulerSO2& b) { return a + b; })
      .def("__sub__", [](const EulerSO2& a, const EulerSO2& b) { return a - b; })
      .def("__mul__", [](const EulerSO2& a, const EulerSO2& b) { return a * b; })
      .def("__mul__", [](const EulerSO2& a, const py::int_& s) { return from_py(s) * a; })
      .def("__rmul__", [](const EulerSO2& a, const py::int_& s) { return from_py(s) * a; })
      .def("__neg__", [](const EulerSO2& a) { return -a; })
      .def("__eq__", [](const EulerSO2& a, const EulerSO2& b) { return a == b; })
      .def("__hash__", [](const EulerSO2& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &EulerSO2::to_string)
      .def("__repr__", [](const EulerSO2& a) { return "EulerSO2(" + a.to_string() + ")"; });

  m.def("deg_minus_id",
        [](std::int64_t trivial_dim, const std::map<std::int64_t, std::int64_t>& rotations) {
          SO2Rep r{trivial_dim, rotations};
          r.validate();
          return deg_minus_id(r);
        },
        py::arg("trivial_dim"), py::arg("rotations") = std::map<std::int64_t, std::int64_t>{},
        "deg(-Id) on t copies of R plus m_k copies of the speed-k rotation");

  m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
  m.def("bessel_j_prime", &bessel_j_prime, py::arg("nu"), py::arg("x"));
  m.def("neumann_radial_roots",
        [](int l, int dim, int count, double root_tol) {
          return neumann_radial_roots(l, dim, count, tolerances(root_tol, 1e-8));
        },
        py::arg("angular_index"), py::arg("dim") = 2, py::arg("count") = 10,
        py::arg("root_tol") = 1e-12);

  m.def("disk_spectrum",
        [](double max_eigenvalue) {
          const py::object doc = from_json_doc(spectrum_to_json(make_disk_spectrum(max_eigenvalue)));
          return py::object(doc["entries"]);
        },
        py::arg("max_eigenvalue"), "Neumann eigenvalues of the unit disk as a list of dicts");

  m.def("lambda_set",
        [](const py::dict& system, std::pair<double, double> window) {
          const auto spec = parse_system_spec(to_json_doc(system));
          const auto w = window_from(window);
          py::gil_scoped_release release;
          return lambda_set(spec, spectrum_for(spec, w, {}), w);
        },
        py::arg("system"), py::arg("window"));

  m.def("analyze",
        [](const py::dict& system, std::pair<double, double> window) {
          const auto spec = parse_system_spec(to_json_doc(system));
          const auto w = window_from(window);
          std::vector<BifurcationVerdict> verdicts;
          {
            py::gil_scoped_release release;
            verdicts = analyze(spec, spectrum_for(spec, w, {}), w);
          }
          return from_json_doc(verdicts_to_json(verdicts));
        },
        py::arg("system"), py::arg("window"), "one verdict dict per parameter in the window");

  m.def("bif_a9",
        [](const py::dict& system, double lambda0) {
          const auto spec = parse_system_spec(to_json_doc(system));
          const double l = std::abs(lambda0);
          return bif_a9(spec, spectrum_for(spec, {-l, l}, {}), lambda0);
        },
        py::arg("system"), py::arg("lambda0"));

  m.def("rabinowitz_excludes_bounded", &rabinowitz_excludes_bounded, py::arg("indices"));
  m.def("zero_sum_subsets", &zero_sum_subsets, py::arg("indices"));

  m.def("degree_from_orbits",
        [](const std::vector<std::pair<std::string, std::int64_t>>& orbits) {
          std::vector<OrbitDatum> data;
          for (const auto& [c, i] : orbits) data.push_back({c, i});
          py::dict out;
          for (const auto& [k, v] : degree_from_orbits(data)) out[py::str(k)] = to_py(v);
          return out;
        },
        py::arg("orbits"), "signed orbit count per isotropy class from (class, morse_index) pairs");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = run(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run the command line in-process; returns (status, stdout, stderr)");
}
