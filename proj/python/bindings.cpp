#include "circact/classifier.hpp"
#include "circact/cli.hpp"
#include "circact/io.hpp"
#include "circact/localization.hpp"
#include "circact/multigraph.hpp"
#include "circact/report.hpp"
#include "circact/surgery.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace circact;

namespace {

PyObject* error_type = nullptr;

// Reports cross the boundary as JSON and come back as plain dicts and lists.
py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

FixedPointData data_from_python(const std::vector<std::vector<Weight>>& weights,
                                std::optional<std::vector<std::string>> names, int n) {
  auto data = make_data(weights, n);
  if (names) {
    if (names->size() != data.size()) throw py::value_error("one name per fixed point is required");
    for (std::size_t i = 0; i < data.size(); ++i) data.points[i].name = (*names)[i];
  }
  return data;
}

py::tuple rational_parts(const Rational& r) {
  py::object as_int = py::module_::import("builtins").attr("int");
  return py::make_tuple(as_int(numerator(r).str()), as_int(denominator(r).str()));
}

}  // namespace

PYBIND11_MODULE(_circact, m) {
  m.doc() = "Fixed-point data toolkit for almost complex circle actions on 6-manifolds";

  // Messages start with the error kind, e.g. "WrongPointCount: ...".
  auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  error_type = error.ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<FixedPointData>(m, "FixedPointData")
      .def(py::init(&data_from_python), py::arg("weights"), py::arg("names") = py::none(),
           py::arg("n") = 3)
      .def_readonly("n", &FixedPointData::n)
      .def_property_readonly("names",
                             [](const FixedPointData& d) {
                               std::vector<std::string> out;
                               for (const auto& p : d.points) out.push_back(p.name);
                               return out;
                             })
      .def_property_readonly("weights",
                             [](const FixedPointData& d) {
                               std::vector<std::vector<Weight>> out;
                               for (const auto& p : d.points) out.emplace_back(p.weights.begin(), p.weights.end());
                               return out;
                             })
      .def("negated", &FixedPointData::negated)
      .def("same_weights", &FixedPointData::same_weights)
      .def("__len__", &FixedPointData::size)
      .def("__eq__", [](const FixedPointData& a, const FixedPointData& b) { return a == b; })
      .def("__repr__", [](const FixedPointData& d) {
        return "FixedPointData(" + to_json(Dataset{d, std::nullopt, {}}).dump() + ")";
      });

  m.def("validate", [](const FixedPointData& d) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : validate(d)) out.push_back(to_json(v));
    return to_python(out);
  });
  m.def("parse_dataset", [](const std::string& text) { return parse_dataset(text).data; },
        "Weight data of a JSON dataset document");
  m.def("dataset_json", [](const FixedPointData& d) { return save(Dataset{d, std::nullopt, {}}); });

  m.def("_c1_cubed_parts", [](const FixedPointData& d) { return rational_parts(c1_cubed(d)); });
  m.def("chi_y_profile", &chi_y_profile);
  m.def("todd_genus", &todd_genus);
  m.def("chern_report", [](const FixedPointData& d) { return to_python(to_json(chern_report(d))); });

  m.def("generate", [](const std::string& tag, const std::vector<std::int64_t>& params) {
    auto t = parse_case_tag(tag);
    if (!t) throw py::value_error("unknown case " + tag);
    return gen_family({*t, params});
  }, py::arg("case"), py::arg("params"));
  m.def("classify", [](const FixedPointData& d) { return to_python(to_json(classify(d), d)); });

  m.def("build_multigraphs", [](const FixedPointData& d, std::size_t cap) {
    PairingOptions options;
    options.cap = cap;
    const auto graphs = build_multigraphs(d, options);
    return to_python(to_json(std::span<const Multigraph>(graphs)));
  }, py::arg("data"), py::arg("cap") = kDefaultPairingCap);
  m.def("connectivity_verdict", [](const FixedPointData& d, std::size_t cap) {
    PairingOptions options;
    options.cap = cap;
    return std::string(to_string(connectivity_verdict(build_multigraphs(d, options))));
  }, py::arg("data"), py::arg("cap") = kDefaultPairingCap);

  m.def("stable_pi_so_mod_u", [](std::uint64_t q) { return std::string(to_string(stable_pi_so_mod_u(q))); });
  m.def("kustarev_admissible", [](std::int64_t n, std::int64_t k) {
    const auto a = kustarev_admissible({n, k});
    return py::make_tuple(a.exists, a.unique);
  }, py::arg("n"), py::arg("k"));
  m.def("rotation_loop_class", [](const std::vector<std::int64_t>& speeds) { return rotation_loop_class(speeds).value; });
  m.def("equivariant_normal_framing_class",
        [](std::int64_t a, std::int64_t b) { return equivariant_normal_framing_class(a, b).value; });
  m.def("kustarev_sum", [](const std::string& first, const std::string& second) {
    return save(kustarev_sum(parse_dataset(first), parse_dataset(second)).dataset);
  }, "Compose two dataset documents; returns the composed document");
  m.def("verify_gluing", [](std::size_t samples, double tolerance, std::uint64_t seed) {
    GluingCheckOptions options;
    options.samples = samples;
    options.tolerance = tolerance;
    options.seed = seed;
    const auto check = verify_framing_reversal_identity(options);
    return py::make_tuple(check.passed, check.worst_deviation);
  }, py::arg("samples") = 1000, py::arg("tolerance") = 1e-9, py::arg("seed") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run a command-line invocation; returns (exit_code, stdout, stderr)");
}
