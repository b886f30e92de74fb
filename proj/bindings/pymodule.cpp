// Python bindings: a thin JSON-string facade over the library, mirroring the
// command-line interface, plus direct entry points for the graded-character
// computations.  Big integers and rationals cross the boundary as exact
// Python ints / decimal strings, never as floats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "operalg/verify.hpp"

namespace py = pybind11;
using namespace operalg;

namespace {

py::int_ to_py_int(const Int& v) {
  std::string s = v.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list qseries_to_list(const QSeries& s) {
  py::list out;
  for (int i = 0; i < s.order(); ++i) out.append(to_py_int(s[i]));
  return out;
}

Weight weight_of(const RootSystem& rs, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != rs.rank)
    throw InputError("weight coordinate count does not match the rank");
  Weight w{coords};
  if (!is_dominant(w)) throw InputError("weight is not dominant");
  return w;
}

std::string reduce_json(const std::string& input, std::optional<int> precision) {
  OperConnection op = oper_input_from_json(Json::parse(input));
  CanonicalOper can = reduce_to_canonical(op);
  if (precision)
    for (LaurentSeries& s : can.coords)
      s = s.truncated(std::min(*precision, s.precision()));
  return canonical_to_json(can).dump();
}

std::string classify_json(const std::string& input, int bound) {
  OperConnection op = oper_input_from_json(Json::parse(input));
  std::optional<Coweight> lam =
      classify_monodromy_free(reduce_to_canonical(op), bound);
  Json out;
  out["lambda"] = lam ? Json(lam->coords) : Json(nullptr);
  return out.dump();
}

std::string membership_json(const std::string& input,
                            const std::vector<int>& lambda) {
  OperConnection op = oper_input_from_json(Json::parse(input));
  MembershipResult res = to_lambda_nilpotent(op, Coweight{lambda});
  Json out;
  out["member"] = res.member();
  if (res.member()) {
    out["form"] = form_to_json(*res.form);
    out["monodromy_free"] = is_lambda_regular(*res.form);
  } else {
    out["obstruction_degree"] = *res.obstruction_degree;
  }
  return out.dump();
}

std::string miura_json(const std::string& input) {
  CartanConnection conn = cartan_connection_from_json(Json::parse(input));
  return canonical_to_json(miura_transform(conn)).dump();
}

std::string verify_json(std::vector<std::string> types, int lambda_max,
                        int order, int precision, int bound,
                        std::uint64_t seed) {
  VerifyOptions opt;
  opt.types = std::move(types);
  opt.lambda_max = lambda_max;
  opt.order = order;
  opt.precision = precision;
  opt.bound = bound;
  opt.seed = seed;
  return report_to_json(run_verify(opt)).dump();
}

}  // namespace

PYBIND11_MODULE(_operalg, m) {
  m.doc() =
      "canonical forms, Cartan-connection images and graded characters of "
      "differential operators on the formal punctured disc";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError",
                                         PyExc_ArithmeticError);

  m.def("reduce", &reduce_json, py::arg("input_json"),
        py::arg("precision") = std::nullopt,
        "Reduce a connection (or re-emit a canonical form) given as a JSON "
        "string; returns the canonical form as a JSON string.");
  m.def("classify", &classify_json, py::arg("input_json"),
        py::arg("bound") = 4,
        "Search dominant coweights with coordinates <= bound for the "
        "monodromy-free family containing the input; returns "
        "{\"lambda\": [...] | null} as a JSON string.");
  m.def("membership", &membership_json, py::arg("input_json"),
        py::arg("lambda_"),
        "Decide membership in the family of the given dominant coweight; "
        "returns the witness form or the obstructing degree as JSON.");
  m.def("miura", &miura_json, py::arg("input_json"),
        "Canonical form of d/dt + p- + u(t) for a Cartan-valued connection "
        "{\"type\", \"u\": [series...]} given as a JSON string.");
  m.def("verify", &verify_json, py::arg("types") = std::vector<std::string>{},
        py::arg("lambda_max") = 3, py::arg("order") = 40,
        py::arg("precision") = 20, py::arg("bound") = 4, py::arg("seed") = 1,
        "Run the seeded verification batteries; returns the report as a JSON "
        "string.");

  m.def(
      "stratum_character",
      [](const std::string& type, const std::vector<int>& lambda, int order) {
        const RootSystem& rs = build_root_system(type);
        return qseries_to_list(char_z_reg(rs, weight_of(rs, lambda), order));
      },
      py::arg("type"), py::arg("lambda_"), py::arg("order") = 40,
      "Coefficients of the graded character of the monodromy-free stratum.");
  m.def(
      "q_dimension",
      [](const std::string& type, const std::vector<int>& lambda) {
        const RootSystem& rs = build_root_system(type);
        py::list out;
        for (const Int& c : q_dim_polynomial(rs, weight_of(rs, lambda)))
          out.append(to_py_int(c));
        return out;
      },
      py::arg("type"), py::arg("lambda_"),
      "Principally graded dimension polynomial, lowest degree first.");
  m.def(
      "character_identity_holds",
      [](const std::string& type, const std::vector<int>& lambda, int order) {
        const RootSystem& rs = build_root_system(type);
        return character_identity_check(rs, weight_of(rs, lambda), order);
      },
      py::arg("type"), py::arg("lambda_"), py::arg("order") = 40,
      "Check q_dim * free-part == stratum character up to the given order.");
  m.def(
      "exponent_identity_holds",
      [](const std::string& type) {
        return exponent_identity_check(build_root_system(type));
      },
      py::arg("type"),
      "Check the coroot-height product against the exponent product.");
  m.def("supported_types", [] {
    return std::vector<std::string>{"A1", "A2", "A3", "A4", "B2",
                                    "B3", "C2", "C3", "D4", "G2"};
  });
}
