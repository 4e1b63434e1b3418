#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "astheno/calculus.hpp"
#include "astheno/classify.hpp"
#include "astheno/cli.hpp"
#include "astheno/expr_io.hpp"
#include "astheno/verify.hpp"

namespace py = pybind11;
using namespace astheno;

namespace {

LeibnizConvention convention(const std::string& s) {
  if (auto c = parse_convention(s)) return *c;
  throw py::value_error("unknown convention '" + s + "'");
}

ConditionKind condition(const std::string& s) {
  if (auto c = parse_condition(s)) return *c;
  throw py::value_error("unknown condition '" + s + "'");
}

FactorType factor(const std::string& s) {
  if (auto t = parse_factor_type(s)) return *t;
  throw py::value_error("unknown factor type '" + s + "'");
}

ProductGeometry geometry(std::optional<unsigned> m1, std::optional<unsigned> m2, bool ring) {
  if (m1.has_value() != m2.has_value()) throw py::value_error("give both m1 and m2 or neither");
  if (!m1) return ProductGeometry(1, 1, false, ring);
  return ProductGeometry(*m1, *m2, true, ring);
}

// Python's json module turns the nlohmann dump into plain dicts.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_python(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict outcome_dict(const ConditionOutcome& o) {
  py::dict d;
  d["relations"] = o.text();
  d["annihilates"] = o.annihilates;
  d["admissible"] = o.admissible;
  d["residual"] = print_text(o.residual);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exterior calculus on products of trans-Sasakian manifolds";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);

  py::class_<Form>(m, "Form")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("__str__", [](const Form& f) { return print_text(f); })
      .def("__repr__", [](const Form& f) { return "Form('" + print_text(f) + "')"; })
      .def("latex", [](const Form& f) { return print_latex(f); })
      .def("record", [](const Form& f) { return to_python(to_record(f)); })
      .def_static("from_record", [](const py::object& o) { return from_record(from_python(o)); })
      .def("is_zero", &Form::is_zero)
      .def("__bool__", [](const Form& f) { return !f.is_zero(); })
      .def("__len__", &Form::size)
      .def("__eq__", [](const Form& a, const Form& b) { return a == b; })
      .def("__add__", [](const Form& a, const Form& b) { return a + b; })
      .def("__sub__", [](const Form& a, const Form& b) { return a - b; })
      .def("__neg__", [](const Form& a) { return -a; })
      .def("__xor__", [](const Form& a, const Form& b) { return wedge(a, b); })
      .def("__pow__", [](const Form& a, unsigned k) { return power(a, k); });

  m.def("parse", &parse, py::arg("text"));
  m.def("print_text", py::overload_cast<const Form&>(&print_text), py::arg("form"));
  m.def("print_latex", py::overload_cast<const Form&>(&print_latex), py::arg("form"));
  m.def("kahler_form", &kahler_form);
  m.def("wedge", py::overload_cast<const Form&, const Form&>(&wedge));
  m.def(
      "truncate",
      [](const Form& f, unsigned m1, unsigned m2) { return truncate(f, ProductGeometry(m1, m2)); },
      py::arg("form"), py::arg("m1"), py::arg("m2"));

  m.def(
      "d",
      [](const Form& f, const std::string& conv, std::optional<unsigned> m1,
         std::optional<unsigned> m2, bool ring) {
        return exterior_d(f, convention(conv), geometry(m1, m2, ring));
      },
      py::arg("form"), py::arg("convention") = "graded", py::arg("m1") = py::none(),
      py::arg("m2") = py::none(), py::arg("ring_reduction") = false);
  m.def(
      "dc",
      [](const Form& f, const std::string& conv, std::optional<unsigned> m1,
         std::optional<unsigned> m2, bool ring) {
        return d_c(f, convention(conv), geometry(m1, m2, ring));
      },
      py::arg("form"), py::arg("convention") = "graded", py::arg("m1") = py::none(),
      py::arg("m2") = py::none(), py::arg("ring_reduction") = false);
  m.def("j", &j_action, py::arg("form"));

  m.def(
      "condition_tensor",
      [](const std::string& kind, unsigned m1, unsigned m2, const std::string& conv,
         bool truncate) {
        return condition_tensor(condition(kind), ProductGeometry(m1, m2, truncate, true),
                                convention(conv));
      },
      py::arg("kind"), py::arg("m1"), py::arg("m2"), py::arg("convention") = "graded",
      py::arg("truncate") = true);

  m.def(
      "classify",
      [](const std::string& kind, unsigned m1, unsigned m2, const std::string& f1,
         const std::string& f2, const std::string& conv) {
        const auto r = classify(condition(kind), ProductGeometry(m1, m2),
                                StructureSpec::of(factor(f1), factor(f2)), convention(conv));
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["residual"] = print_text(r.residual);
        py::list conds;
        for (const auto& o : r.conditions) conds.append(outcome_dict(o));
        d["conditions"] = conds;
        return d;
      },
      py::arg("kind"), py::arg("m1"), py::arg("m2"), py::arg("factor1"), py::arg("factor2"),
      py::arg("convention") = "graded");

  m.def(
      "table",
      [](int id, const std::string& conv) {
        TableReport r;
        try {
          r = reproduce_table(id, convention(conv));
        } catch (const std::out_of_range& e) {
          throw py::value_error(e.what());
        }
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["row"] = row.row;
          d["structure"] = row.spec.label();
          d["printed"] = print_text(row.printed);
          d["engine"] = print_text(row.engine);
          d["match"] = std::string(to_string(row.match));
          d["verdict"] = std::string(to_string(row.verdict));
          d["printed_zero"] = row.printed_zero;
          d["flagged"] = row.flagged;
          rows.append(d);
        }
        return rows;
      },
      py::arg("id"), py::arg("convention") = "graded");

  m.def("verify", [] {
    const auto r = verify_paper();
    py::list checks;
    for (const auto& c : r.checks) {
      py::dict d;
      d["id"] = c.id;
      d["status"] = std::string(to_string(c.status));
      d["summary"] = c.summary;
      d["details"] = to_python(c.details);
      checks.append(d);
    }
    return checks;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
