#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "jmb/catalog.hpp"
#include "jmb/catalog_io.hpp"
#include "jmb/errors.hpp"
#include "jmb/exactnum.hpp"
#include "jmb/pair_search.hpp"
#include "jmb/shape.hpp"
#include "jmb/tensor_search.hpp"
#include "jmb/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const jmb::Nat& n) {
  return py::int_(py::module_::import("builtins").attr("int")(n.to_string()));
}

jmb::Nat from_py(const py::int_& v) {
  return jmb::Nat::parse(py::str(v).cast<std::string>());
}

const jmb::Catalog& pick(const std::optional<jmb::Catalog>& c) {
  return c ? *c : jmb::Catalog::paper();
}

py::dict pair_dict(const jmb::SaturatedPair& p) {
  py::list blocks;
  for (const auto& b : p.blocks) {
    py::dict d;
    d["m"] = b.entry.degree;
    d["t"] = b.t;
    d["label"] = b.entry.label;
    d["kind"] = std::string(jmb::to_string(b.entry.kind));
    d["index"] = to_py(b.entry.index);
    blocks.append(d);
  }
  py::dict d;
  d["shape"] = p.shape();
  d["blocks"] = blocks;
  return d;
}

py::dict bound_dict(const jmb::BoundResult& r) {
  py::list pairs;
  for (const auto& p : r.argmax) pairs.append(pair_dict(p));
  py::dict d;
  d["n"] = r.n;
  d["l"] = r.l;
  d["value"] = to_py(r.value);
  d["sci"] = r.value_sci.str();
  d["shapes"] = r.shapes();
  d["flags"] = r.flags;
  d["tie_count"] = r.tie_count;
  d["pairs"] = pairs;
  return d;
}

py::dict report_dict(const jmb::Report& r) {
  py::list items;
  for (const auto& i : r.items) {
    py::dict d;
    d["id"] = i.id;
    d["status"] = std::string(jmb::to_string(i.status));
    d["lhs_sci"] = i.lhs_sci;
    d["rhs_sci"] = i.rhs_sci;
    d["note"] = i.note;
    items.append(d);
  }
  py::dict d;
  d["suite"] = r.suite;
  d["ok"] = r.ok();
  d["items"] = items;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jmb, m) {
  m.doc() = "Exact bounds for abelian normal subgroups of finite linear groups";

  py::register_exception<jmb::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<jmb::ResourceError>(m, "ResourceError", PyExc_OverflowError);
  py::register_exception<jmb::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<jmb::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<jmb::NotFoundError>(m, "NotFoundError", PyExc_LookupError);

  py::class_<jmb::Catalog>(m, "Catalog")
      .def_static(
          "builtin",
          [](const std::string& mode) { return jmb::Catalog::builtin(jmb::parse_catalog_mode(mode)); },
          py::arg("mode") = "paper-verbatim")
      .def_static("parse", [](const std::string& text) { return jmb::parse_catalog(text); })
      .def_static("load", [](const std::string& path) { return jmb::load_catalog_file(path); })
      .def_property_readonly("mode", [](const jmb::Catalog& c) { return std::string(jmb::to_string(c.mode())); })
      .def("serialize", [](const jmb::Catalog& c) { return jmb::serialize_catalog(c); })
      .def("N_bound", [](const jmb::Catalog& c, unsigned r, unsigned l) {
        return to_py(c.N_bound(r, jmb::Characteristic(l)));
      })
      .def("constituent", [](const jmb::Catalog& c, unsigned l, unsigned m) -> py::object {
        const auto e = c.constituent(jmb::Characteristic(l), m);
        if (!e) return py::none();
        py::dict d;
        d["m"] = e->degree;
        d["label"] = e->label;
        d["kind"] = std::string(jmb::to_string(e->kind));
        d["index"] = to_py(e->index);
        d["center"] = e->center_order;
        return d;
      })
      .def("__eq__", [](const jmb::Catalog& a, const jmb::Catalog& b) { return a == b; });

  m.def("factorial", [](std::uint64_t n) { return to_py(jmb::factorial(n)); });
  m.def("sci_string", [](const py::int_& x, unsigned sig) { return jmb::sci_string(from_py(x), sig).str(); },
        py::arg("x"), py::arg("sig") = 3);
  m.def("alpha_exponent", [](const py::int_& f, unsigned n) { return jmb::alpha_exponent(from_py(f), n); });

  m.def(
      "best_pair",
      [](unsigned n, unsigned l, std::optional<jmb::Catalog> catalog, unsigned sig) {
        return bound_dict(jmb::best_pair(n, jmb::Characteristic(l), pick(catalog), sig));
      },
      py::arg("n"), py::arg("l"), py::arg("catalog") = py::none(), py::arg("sig") = 3);
  m.def(
      "bound_table",
      [](unsigned l, unsigned from, unsigned to, std::optional<jmb::Catalog> catalog) {
        py::list out;
        for (const auto& r : jmb::bound_table(jmb::Characteristic(l), from, to, pick(catalog))) {
          out.append(bound_dict(r));
        }
        return out;
      },
      py::arg("l"), py::arg("n_from"), py::arg("n_to"), py::arg("catalog") = py::none());
  m.def(
      "pair_value",
      [](const std::string& shape, unsigned l, std::optional<jmb::Catalog> catalog) {
        return to_py(jmb::pair_value(jmb::pair_from_shape(shape, jmb::Characteristic(l), pick(catalog))));
      },
      py::arg("shape"), py::arg("l"), py::arg("catalog") = py::none());
  m.def(
      "primitive_bound",
      [](unsigned n, unsigned l, std::optional<jmb::Catalog> catalog) {
        const auto r = jmb::primitive_bound(n, jmb::Characteristic(l), pick(catalog));
        py::list configs;
        for (const auto& c : r.argmax) configs.append(c.to_string());
        py::dict d;
        d["n"] = r.n;
        d["l"] = r.l;
        d["value"] = to_py(r.value);
        d["configs"] = configs;
        d["flags"] = r.flags;
        return d;
      },
      py::arg("n"), py::arg("l"), py::arg("catalog") = py::none());
  m.def(
      "threshold",
      [](unsigned l, unsigned window_end, std::optional<jmb::Catalog> catalog) {
        const auto r = jmb::threshold(jmb::Characteristic(l), window_end, pick(catalog));
        py::dict d;
        d["l"] = r.l;
        d["n0"] = r.n0;
        d["window_end"] = r.window_end;
        d["last_failure"] = r.last_failure ? py::object(bound_dict(*r.last_failure)) : py::none();
        return d;
      },
      py::arg("l"), py::arg("window_end") = 150, py::arg("catalog") = py::none());
  m.def(
      "verify",
      [](const std::string& suite, std::optional<jmb::Catalog> catalog) {
        const auto& c = pick(catalog);
        if (suite == "registry") return report_dict(jmb::run_registry(c));
        if (suite == "prop8") return report_dict(jmb::verify_prop8(c));
        if (suite == "golden") return report_dict(jmb::golden_tables(c));
        throw jmb::ValidationError("unknown suite '" + suite + "'");
      },
      py::arg("suite"), py::arg("catalog") = py::none());
  m.def(
      "weisfeiler",
      [](unsigned n_to, std::vector<unsigned> chars, std::optional<jmb::Catalog> catalog) {
        py::list out;
        for (const auto& r : jmb::weisfeiler(n_to, chars, pick(catalog))) {
          py::dict d;
          d["n"] = r.n;
          d["l"] = r.l;
          d["f"] = to_py(r.f);
          d["bound"] = to_py(r.bound);
          d["alpha"] = r.n >= 2 ? py::object(py::float_(r.alpha)) : py::none();
          d["dominates"] = r.dominates;
          out.append(d);
        }
        return out;
      },
      py::arg("n_to") = 70, py::arg("chars") = std::vector<unsigned>{2, 3, 5, 7, 11, 13, 17, 19},
      py::arg("catalog") = py::none());
  m.def("discrepancies", [] {
    py::list out;
    for (const auto& x : jmb::discrepancies()) {
      py::dict d;
      d["id"] = x.id;
      d["printed"] = x.printed;
      d["alternative"] = x.alternative;
      d["anchor"] = x.anchor;
      d["note"] = x.note;
      out.append(d);
    }
    return out;
  });
}
