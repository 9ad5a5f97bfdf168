#include <limits>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgn/gallery.hpp"
#include "cgn/ideal.hpp"
#include "cgn/oracle.hpp"
#include "cgn/ring_calculus.hpp"
#include "cgn/script.hpp"
#include "cgn/suites.hpp"

namespace py = pybind11;
using namespace cgn;

namespace {

py::object fraction(const Q& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::str(to_string(q)));
}

py::object valuation_py(const GenNum& x) {
  ExtVal v = valuation(x);
  if (v.infinite) return py::float_(std::numeric_limits<double>::infinity());
  return fraction(v.v);
}

Q as_q(const py::handle& h) { return parse_q(py::str(h)); }

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Mode mode_of(const std::string& m) {
  if (m == "real") return Mode::R;
  if (m == "complex") return Mode::C;
  throw Error("DomainError", "mode must be 'real' or 'complex'");
}

}  // namespace

PYBIND11_MODULE(_cgn, m) {
  m.doc() = "Exact arithmetic and ideal calculus for Colombeau generalized numbers";

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (e.kind + ": " + e.what()).c_str());
    }
  });

  py::class_<IndexSet>(m, "IndexSet")
      .def_static("full", &IndexSet::full)
      .def_static("empty", &IndexSet::empty)
      .def_static("blocks", &IndexSet::blocks, py::arg("residue"), py::arg("modulus"))
      .def_static("grid", &IndexSet::grid, py::arg("residue"), py::arg("modulus"))
      .def_static("interval", [](const py::handle& p, const py::handle& q) { return IndexSet::interval(as_q(p), as_q(q)); })
      .def_static("nu2", [](unsigned i) { return family_piece(PieceFamily::Nu2, i); })
      .def("classify", [](const IndexSet& s) { return to_string(s.classify()); })
      .def("germ_null", &IndexSet::germ_null)
      .def("germ_full", &IndexSet::germ_full)
      .def("__or__", &IndexSet::unite)
      .def("__and__", &IndexSet::intersect)
      .def("__sub__", &IndexSet::minus)
      .def("__invert__", &IndexSet::complement)
      .def("__str__", &IndexSet::to_string)
      .def("__repr__", &IndexSet::to_string);

  py::class_<GenNum>(m, "GenNum")
      .def_static("eps", [](const std::string& mode) { return GenNum::alpha(mode_of(mode)); }, py::arg("mode") = "real")
      .def_static(
          "rational",
          [](const py::handle& re, const py::handle& im, const std::string& mode) {
            return GenNum::rational(Coeff(as_q(re), as_q(im)), mode_of(mode));
          },
          py::arg("re"), py::arg("im") = 0, py::arg("mode") = "real")
      .def_static(
          "idempotent", [](const IndexSet& s, const std::string& mode) { return GenNum::idempotent(s, mode_of(mode)); },
          py::arg("set"), py::arg("mode") = "real")
      .def_static(
          "gallery", [](const std::string& name, const std::string& mode) { return gallery_named(name, mode_of(mode)); },
          py::arg("name"), py::arg("mode") = "real")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__truediv__", [](const GenNum& a, const GenNum& b) { return a * invert(b); })
      .def("__pow__", [](const GenNum& a, long n) { return pow(a, n); })
      .def("__eq__", &equal_germ)
      .def("is_zero", &GenNum::is_zero)
      .def("support", &GenNum::support)
      .def("restrict", &GenNum::restrict)
      .def("valuation", &valuation_py)
      .def("__str__", &GenNum::to_string)
      .def("__repr__", [](const GenNum& x) { return "GenNum(" + x.to_string() + ")"; });

  m.def("valuation", &valuation_py);
  m.def("leq", &leq);
  m.def("classify", [](const GenNum& x) { return to_string(classify_element(x)); });
  m.def("invert", &invert);
  m.def("skeleton", &skeleton);
  m.def("clean_idempotent", &clean_idempotent);
  m.def("split_zero_divisors", &split_zero_divisors);
  m.def("bezout", [](const GenNum& a, const GenNum& b) {
    BezoutResult r = bezout_gen(a, b);
    return py::make_tuple(r.g, r.r, r.s);
  });
  m.def("meet", &meet_gen);
  m.def("level_set", [](const GenNum& x, const py::handle& n) { return level_set(x, as_q(n)); });
  m.def("stationary", &stationary);
  m.def("closure_level", [](const GenNum& x, const GenNum& a) { return fraction(closure_level(x, a)); });
  m.def("in_principal", [](const GenNum& x, const GenNum& a) { return in_principal(x, a).member; });
  m.def("in_radical", &in_radical);
  m.def("in_closure", py::overload_cast<const GenNum&, const GenNum&>(&in_closure));
  m.def("in_z_closure", &in_z_closure);
  m.def("inv_subset", &inv_subset);
  m.def("closure_witness", &gallery_closure_witness);
  m.def("gallery_names", &gallery_names);
  m.def(
      "oracle_val",
      [](const GenNum& x, long depth) {
        SampleProfile p;
        p.depth = depth;
        OracleInterval oi = oracle_val(x, p);
        return py::make_tuple(oi.lo, oi.hi);
      },
      py::arg("x"), py::arg("depth") = 64);
  m.def(
      "eval_script",
      [](const std::string& text, long depth) {
        script::Session s;
        s.depth = depth;
        return from_json(script::eval_script(s, text));
      },
      py::arg("text"), py::arg("depth") = 64);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, long depth) {
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, seed, depth);
        }
        return from_json(r.to_json());
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("depth") = 64);
  m.def("suite_names", &suite_names);
}
