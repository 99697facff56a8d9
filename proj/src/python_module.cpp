#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wqg/bialgebroid.hpp"
#include "wqg/cli.hpp"
#include "wqg/duality.hpp"
#include "wqg/errors.hpp"
#include "wqg/hopf.hpp"
#include "wqg/io.hpp"
#include "wqg/weak.hpp"
#include "wqg/zoo.hpp"

namespace py = pybind11;
using namespace wqg;

namespace {

const WeakBialgebra& as_weak(const Structure& s) {
  if (!std::holds_alternative<WeakBialgebra>(s.value)) throw InvalidInput("expected a weak-bialgebra, got " + s.kind());
  return std::get<WeakBialgebra>(s.value);
}

const FsBialgebroid& as_bialgebroid(const Structure& s) {
  if (!std::holds_alternative<FsBialgebroid>(s.value)) throw InvalidInput("expected a bialgebroid, got " + s.kind());
  return std::get<FsBialgebroid>(s.value);
}

Structure wrap(WeakBialgebra h) { return Structure{std::move(h), {}, {}}; }

std::string check_json(const Structure& s, bool all_witnesses) {
  CheckOptions opts;
  opts.all_witnesses = all_witnesses;
  const WeakBialgebra& h = as_weak(s);
  CheckReport r = check_weak_bialgebra(h, opts);
  if (r.overall()) {
    r.append(verify_counital_identities(h, opts), "counital.");
    r.append(antiiso_check(h, opts), "antiiso.");
    if (h.antipode) r.append(verify_antipode(h, *h.antipode, opts), "antipode.");
  }
  return report_to_json(r);
}

}  // namespace

PYBIND11_MODULE(_wqg, m) {
  m.doc() = "Exact computations with weak bialgebras, weak Hopf algebras and bialgebroids";

  static py::exception<Error> base(m, "WqgError");
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<SchemaError> schema_error(m, "SchemaError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const SchemaError& e) {
      schema_error(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::class_<Structure>(m, "Structure")
      .def_property_readonly("kind", &Structure::kind)
      .def_property_readonly("dim",
                             [](const Structure& s) -> py::object {
                               return std::visit(
                                   [](const auto& v) -> py::object {
                                     using T = std::decay_t<decltype(v)>;
                                     if constexpr (std::is_same_v<T, FiniteGroupoid>) return py::int_(v.arrows.size());
                                     else if constexpr (std::is_same_v<T, CoalgComodule>) return py::int_(v.dim);
                                     else if constexpr (std::is_same_v<T, PairingMatrix>) return py::none();
                                     else return py::int_(v.dim());
                                   },
                                   s.value);
                             })
      .def_property_readonly("has_antipode",
                             [](const Structure& s) {
                               auto* h = std::get_if<WeakBialgebra>(&s.value);
                               return h && h->antipode.has_value();
                             })
      .def("serialize", &serialize_structure)
      .def("__eq__", [](const Structure& a, const Structure& b) { return serialize_structure(a) == serialize_structure(b); })
      .def("__repr__", [](const Structure& s) { return "<wqg.Structure " + s.kind() + ">"; });

  m.def("parse", [](const std::string& text) { return parse_structure(text); }, py::arg("text"));
  m.def("load", &load_structure, py::arg("path"));
  m.def("save", &save_structure, py::arg("structure"), py::arg("path"));

  m.def("pair_groupoid_algebra", [](std::size_t n, const std::string& field) {
    return wrap(groupoid_algebra(pair_groupoid(n), FieldSpec::parse(field)));
  }, py::arg("objects"), py::arg("field") = "Q");
  m.def("pair_groupoid_function_algebra", [](std::size_t n, const std::string& field) {
    return wrap(groupoid_function_algebra(pair_groupoid(n), FieldSpec::parse(field)));
  }, py::arg("objects"), py::arg("field") = "Q");
  m.def("monoid_bialgebra", [](const std::vector<std::vector<std::size_t>>& table, const std::string& field) {
    return wrap(monoid_bialgebra(table, FieldSpec::parse(field)));
  }, py::arg("table"), py::arg("field") = "Q");

  m.def("check_json", &check_json, py::arg("structure"), py::arg("all_witnesses") = false,
        "Axiom report of a weak bialgebra as JSON text");
  m.def("solve_antipode", [](const Structure& s) -> py::object {
    WeakBialgebra h = as_weak(s);
    auto r = solve_antipode(h);
    if (auto* nh = std::get_if<NotHopf>(&r)) {
      py::dict d;
      d["domain"] = nh->domain_dim;
      d["codomain"] = nh->codomain_dim;
      d["rank"] = nh->rank;
      return std::move(d);
    }
    h.antipode = std::get<Matrix>(r);
    return py::cast(wrap(std::move(h)));
  }, py::arg("structure"), "The structure with its antipode attached, or the rank data of beta");
  m.def("dual", [](const Structure& s) { return wrap(dual_weak_bialgebra(as_weak(s))); }, py::arg("structure"));
  m.def("to_bialgebroid", [](const Structure& s) {
    return Structure{weak_to_bialgebroid(as_weak(s)), {}, {}};
  }, py::arg("structure"));
  m.def("from_bialgebroid", [](const Structure& s) {
    const FsBialgebroid& l = as_bialgebroid(s);
    return wrap(bialgebroid_to_weak(l, l.base));
  }, py::arg("structure"), "Weak bialgebra built with the stored base system");

  m.def("run_cli", [](std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(std::move(args), in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
