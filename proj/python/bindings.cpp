#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ksod/blowup.hpp"
#include "ksod/cli.hpp"
#include "ksod/error.hpp"
#include "ksod/germ.hpp"
#include "ksod/global.hpp"
#include "ksod/local.hpp"
#include "ksod/matrix.hpp"
#include "ksod/parse.hpp"
#include "ksod/quiver.hpp"
#include "ksod/report.hpp"
#include "ksod/spec_io.hpp"
#include "ksod/verdict.hpp"

namespace py = pybind11;
using namespace ksod;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string spec_text(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return spec.cast<std::string>();
  return py::module_::import("json").attr("dumps")(spec).cast<std::string>();
}

IntMatrix to_matrix(const py::object& rows) {
  std::vector<std::vector<Integer>> data;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (const auto& x : row) r.emplace_back(py::str(py::int_(py::reinterpret_borrow<py::object>(x))).cast<std::string>());
    data.push_back(std::move(r));
  }
  const std::size_t cols = data.empty() ? 0 : data.front().size();
  std::vector<Integer> entries;
  for (auto& r : data) {
    if (r.size() != cols) throw Error(ErrorKind::MatrixShapeMismatch, "ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return IntMatrix(data.size(), cols, std::move(entries));
}

SpecDocument load(const py::object& spec, const py::object& matrix, std::optional<SpecKind> kind) {
  SpecDocument doc = parse_spec_document(spec_text(spec), kind);
  if (kind && doc.kind != *kind) {
    throw Error(ErrorKind::SchemaError, "$.kind: expected \"" + to_string(*kind) + "\", got \"" + to_string(doc.kind) + "\"");
  }
  if (!matrix.is_none()) {
    if (doc.kind == SpecKind::Threefold) {
      doc.threefold.restriction_matrix = to_matrix(matrix);
    } else if (doc.kind == SpecKind::Surface) {
      doc.surface.restriction_matrix = to_matrix(matrix);
    } else {
      throw Error(ErrorKind::InvalidInput, "a restriction matrix applies to threefold and surface specifications only");
    }
  }
  return doc;
}

std::vector<BiPoly> parse_all(const std::vector<std::string>& exprs) {
  std::vector<BiPoly> out;
  for (const auto& e : exprs) out.push_back(parse_polynomial(e));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ksod, m) {
  m.doc() = "Exact invariants of nodal and cA_n varieties";

  // Held for the lifetime of the interpreter.
  static PyObject* base_error = py::exception<Error>(m, "KsodError", PyExc_ValueError).release().ptr();
  static PyObject* unsupported_error = py::exception<Error>(m, "UnsupportedError", base_error).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(is_unsupported(e.kind()) ? unsupported_error : base_error,
                      (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("parse_polynomial", [](const std::string& text) { return to_string(parse_polynomial(text)); },
        py::arg("text"), "Canonical form of a polynomial in z, w.");

  m.def(
      "branch_count",
      [](const std::string& germ, const std::optional<std::vector<std::string>>& factors) {
        if (factors) {
          const auto fs = parse_all(*factors);
          return to_python(to_json(branch_count_factored(fs)));
        }
        return to_python(to_json(branch_count(parse_polynomial(germ))));
      },
      py::arg("germ") = "", py::arg("factors") = py::none(), "Order, cA index and branch number of a plane germ.");

  m.def("newton_polygon", [](const std::string& germ) {
    Json out = Json::array();
    for (const auto& e : newton_polygon(parse_polynomial(germ))) out.push_back(to_json(e));
    return to_python(out);
  });

  m.def(
      "classify",
      [](const std::string& germ, const std::optional<std::vector<std::string>>& factors) {
        if (factors) {
          const auto fs = parse_all(*factors);
          return to_python(to_json(classify_cAn_factored(fs)));
        }
        if (const auto label = parse_ade_label(germ)) return to_python(to_json(ade_lookup(label->family, label->index)));
        return to_python(to_json(classify_cAn(parse_polynomial(germ))));
      },
      py::arg("germ") = "", py::arg("factors") = py::none(),
      "Local invariants of xy + g(z, w) = 0 from a germ or an ADE label.");

  m.def(
      "curve_k_minus_one",
      [](const py::object& spec) { return to_python(to_json(curve_k_minus_one(load(spec, py::none(), SpecKind::Curve).curve))); },
      py::arg("spec"));

  m.def(
      "quiver",
      [](const py::object& spec) {
        const SpecDocument doc = load(spec, py::none(), SpecKind::Quiver);
        const QuiverWithRelations q = burban_quiver(doc.graph);
        return to_python(to_json(q, algebra_basis(q, doc.length_bound)));
      },
      py::arg("spec"));

  m.def(
      "threefold",
      [](const py::object& spec, const py::object& matrix) {
        return to_python(to_json(threefold_invariants(load(spec, matrix, SpecKind::Threefold).threefold)));
      },
      py::arg("spec"), py::arg("matrix") = py::none());

  m.def(
      "surface",
      [](const py::object& spec, const py::object& matrix) {
        return to_python(to_json(surface_invariants(load(spec, matrix, SpecKind::Surface).surface)));
      },
      py::arg("spec"), py::arg("matrix") = py::none());

  m.def(
      "blowup", [](const py::object& spec) { return to_python(to_json(run_pipeline(load(spec, py::none(), SpecKind::Blowup).blowup))); },
      py::arg("spec"));

  m.def(
      "decide",
      [](const py::object& spec, const py::object& matrix) {
        const SpecDocument doc = load(spec, matrix, std::nullopt);
        Verdict v;
        switch (doc.kind) {
          case SpecKind::Curve: v = decide(doc.curve); break;
          case SpecKind::Threefold: v = decide(doc.threefold); break;
          case SpecKind::Surface: v = decide(doc.surface); break;
          case SpecKind::Blowup: v = decide(doc.blowup); break;
          case SpecKind::Quiver: v = decide(CurveSpec{doc.graph}); break;
        }
        if (v.certificate) verify_certificate(*v.certificate);
        return to_python(to_json(v));
      },
      py::arg("spec"), py::arg("matrix") = py::none(), "Yes / No / Unknown verdict for a JSON specification.");

  m.def(
      "smith_normal_form",
      [](const py::object& matrix) {
        const IntMatrix a = to_matrix(matrix);
        Json j = to_json(smith_normal_form(a));
        j["cokernel"] = to_json(cokernel(a));
        return to_python(j);
      },
      py::arg("matrix"));

  m.def("del_pezzo_table", [] {
    Json out = Json::array();
    for (unsigned d = 1; d <= 6; ++d) out.push_back(to_json(del_pezzo_case(d)));
    return to_python(out);
  });

  m.def(
      "ade_table",
      [](unsigned kmin, unsigned kmax) {
        Json out = Json::array();
        for (const auto& r : ade_catalog_rows(kmin, kmax)) out.push_back(to_json(r));
        return to_python(out);
      },
      py::arg("kmin") = 1, py::arg("kmax") = 3);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = ksod::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
