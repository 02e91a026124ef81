#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "babylon/cli.hpp"
#include "babylon/error.hpp"
#include "babylon/expression.hpp"
#include "babylon/geometry.hpp"
#include "babylon/replay.hpp"
#include "babylon/sexnum.hpp"
#include "babylon/sumprod.hpp"
#include "babylon/trace.hpp"

namespace py = pybind11;
namespace geo = babylon::geometry;
using babylon::BigInt;
using babylon::Rational;
using babylon::SexValue;

namespace {

PyObject* g_error_type = nullptr;

BigInt to_bigint(const py::handle& obj) { return BigInt(py::str(obj).cast<std::string>()); }

py::int_ to_pyint(const BigInt& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

// Accepts int, fractions.Fraction, or a numeral string ("14,24", "0;40", "2/3").
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    std::string text = obj.cast<std::string>();
    const bool negative = !text.empty() && text.front() == '-';
    const Rational r = babylon::parse_value(negative ? text.substr(1) : text).rational();
    return negative ? Rational(-r) : r;
  }
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("expected a number, got bool");
  if (py::isinstance<py::int_>(obj)) return Rational(to_bigint(obj));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator") && !py::isinstance<py::float_>(obj)) {
    return Rational(to_bigint(obj.attr("numerator")), to_bigint(obj.attr("denominator")));
  }
  throw py::type_error("expected int, Fraction or numeral string");
}

SexValue to_value(const py::handle& obj) { return SexValue::from_rational(to_rational(obj)); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_pyint(boost::multiprecision::numerator(r)), to_pyint(boost::multiprecision::denominator(r)));
}

py::object to_fraction(const SexValue& v) { return to_fraction(v.rational()); }

geo::RatPoint to_point(const py::handle& obj) {
  const auto seq = obj.cast<py::sequence>();
  if (seq.size() != 2) throw py::value_error("a point is a pair (x, y)");
  return {to_rational(seq[0]), to_rational(seq[1])};
}

geo::TriangleDef to_triangle(const py::handle& obj) {
  const auto seq = obj.cast<py::sequence>();
  if (seq.size() != 3) throw py::value_error("a triangle is three points");
  return {to_point(seq[0]), to_point(seq[1]), to_point(seq[2])};
}

babylon::Op to_op(const std::string& op) {
  if (op == "+") return babylon::Op::add;
  if (op == "-") return babylon::Op::sub;
  if (op == "*") return babylon::Op::mul;
  if (op == "/") return babylon::Op::div;
  throw py::value_error("op must be one of + - * /");
}

py::dict solution_dict(const babylon::Smt18Solution& s) {
  py::dict d;
  d["x"] = to_fraction(s.x);
  d["y"] = to_fraction(s.y);
  d["z"] = to_fraction(s.z);
  d["w"] = to_fraction(s.w);
  return d;
}

}  // namespace

PYBIND11_MODULE(_babylon, m) {
  m.doc() = "Exact sexagesimal arithmetic, geometry and tablet replay";

  auto error = py::exception<babylon::Error>(m, "BabylonError", PyExc_ValueError);
  g_error_type = error.ptr();
  Py_INCREF(g_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const babylon::Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(g_error_type)(e.what());
      inst.attr("kind") = std::string(babylon::to_string(e.kind()));
      PyErr_SetObject(g_error_type, inst.ptr());
    }
  });

  m.def(
      "parse",
      [](const std::string& text, bool floating) {
        return to_fraction(babylon::parse_sexagesimal(
            text, floating ? babylon::Notation::floating : babylon::Notation::absolute));
      },
      py::arg("text"), py::arg("floating") = false, "Parse a sexagesimal numeral such as '0;0,6'.");
  m.def(
      "parse_floating",
      [](const std::string& text, int exponent) { return to_fraction(babylon::parse_floating(text).at(exponent)); },
      py::arg("text"), py::arg("exponent"), "Floating reading with the leading digit at 60**exponent.");
  m.def(
      "render",
      [](const py::object& v, bool floating) {
        return babylon::render_sexagesimal(
                   to_value(v), floating ? babylon::Notation::floating : babylon::Notation::absolute)
            .to_string();
      },
      py::arg("value"), py::arg("floating") = false, "Sexagesimal numeral; raises for non-terminating values.");
  m.def("to_string", [](const py::object& v) { return to_value(v).to_string(); }, py::arg("value"),
        "Numeral when finite, otherwise n/d in sexagesimal integers.");
  m.def("combine", [](const std::string& op, const py::object& a, const py::object& b) {
    return to_fraction(babylon::combine(to_op(op), to_value(a), to_value(b)));
  }, py::arg("op"), py::arg("a"), py::arg("b"));
  m.def("reciprocal", [](const py::object& v) { return to_fraction(babylon::reciprocal(to_value(v))); });
  m.def("has_finite_expansion", [](const py::object& v) { return babylon::has_finite_expansion(to_value(v)); });
  m.def("classify_regular", [](const py::object& n) {
    const auto r = babylon::classify_regular(to_bigint(n));
    py::dict d;
    d["regular"] = r.is_regular();
    d["smooth_part"] = to_pyint(r.smooth_part);
    d["rough_part"] = to_pyint(r.rough_part);
    return d;
  });
  m.def("sqrt_exact", [](const py::object& v) { return to_fraction(babylon::sqrt_exact(to_value(v))); });
  m.def("evaluate", [](const std::string& expr) { return to_fraction(babylon::evaluate_expression(expr)); },
        py::arg("expression"));

  m.def("solve_sum_product", [](const py::object& s, const py::object& p) {
    const auto sol = babylon::solve_sum_product({to_value(s), to_value(p)}).first;
    return py::make_tuple(to_fraction(sol.larger), to_fraction(sol.smaller));
  }, py::arg("s"), py::arg("p"), "Returns (larger, smaller) with the given sum and product.");
  m.def("solve_product_ratio", [](const py::object& p, const py::object& k) {
    const auto sol = babylon::solve_product_ratio(to_value(p), babylon::RatioConstraint(to_value(k)));
    return py::make_tuple(to_fraction(sol.x), to_fraction(sol.y));
  }, py::arg("p"), py::arg("k"), "Returns (x, y) with x*y = p and x = k*y.");

  m.def("intercept_fourth", [](const py::object& a, const py::object& b, const py::object& c) {
    return to_fraction(geo::intercept_fourth(to_value(a), to_value(b), to_value(c)));
  });
  m.def("transversal_w", [](const py::object& x, const py::object& y, const py::object& z) {
    return to_fraction(geo::transversal_w(to_value(x), to_value(y), to_value(z)));
  });
  m.def("bisect_trapezoid", [](const py::object& a, const py::object& b, const py::object& h) {
    const auto r = geo::bisect_trapezoid(geo::TrapezoidSpec(to_value(a), to_value(b), to_value(h)));
    py::dict d;
    d["d_squared"] = to_fraction(r.d_sq);
    d["upper_area"] = to_fraction(r.upper_area);
    d["lower_area"] = to_fraction(r.lower_area);
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("h"));
  m.def("check_intercept", [](const py::object& o, const py::object& a, const py::object& b, const py::object& c,
                              const py::object& d) {
    const auto r = geo::check_intercept({to_point(o), to_point(a), to_point(b), to_point(c), to_point(d)});
    py::dict out;
    out["holds"] = r.holds;
    out["case"] = r.position == geo::ApexPosition::apex_outside ? "apex_outside" : "apex_between";
    out["ratio_squared"] = to_fraction(r.ratio_squared);
    return out;
  }, py::arg("o"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
  m.def("similar_sss", [](const py::object& t1, const py::object& t2) -> py::object {
    const auto k2 = geo::similar_sss(to_triangle(t1), to_triangle(t2));
    return k2 ? to_fraction(*k2) : py::none();
  }, "Squared similarity ratio, or None.");
  m.def("similar_sas", [](const py::object& t1, const py::object& t2, std::array<std::size_t, 3> corr,
                          std::size_t apex) {
    return geo::similar_sas(to_triangle(t1), to_triangle(t2), corr, apex);
  }, py::arg("t1"), py::arg("t2"), py::arg("correspondence") = geo::kIdentityCorrespondence, py::arg("apex") = 0);
  m.def("is_transversal", [](const py::sequence& polygon, const py::object& p, const py::object& q) {
    std::vector<geo::RatPoint> pts;
    for (const auto& v : polygon) pts.push_back(to_point(v));
    return geo::is_transversal(pts, to_point(p), to_point(q));
  }, py::arg("polygon"), py::arg("p"), py::arg("q"));

  m.def("solve_smt18", [](const py::object& p1, const py::object& p2, const py::object& p3) {
    const auto [sol, trace] = babylon::solve_smt18({to_value(p1), to_value(p2), to_value(p3)});
    return py::make_tuple(solution_dict(sol), babylon::format_trace(trace));
  }, py::arg("p1") = "10,0", py::arg("p2") = "36,0,0", py::arg("p3") = "20,24",
     "Returns (solution dict, trace text).");
  m.def("verify_solution", [](const py::dict& sol, const py::object& p1, const py::object& p2,
                              const py::object& p3) {
    const babylon::Smt18Solution s{to_value(sol["x"]), to_value(sol["y"]), to_value(sol["z"]), to_value(sol["w"])};
    py::dict out;
    for (const auto& c : babylon::verify_solution(s, {to_value(p1), to_value(p2), to_value(p3)}).checks) {
      out[py::str(c.name)] = c.passed;
    }
    return out;
  }, py::arg("solution"), py::arg("p1") = "10,0", py::arg("p2") = "36,0,0", py::arg("p3") = "20,24");
  m.def("canonical_trace", [] { return babylon::format_trace(babylon::canonical_trace()); });
  m.def("diff_trace", [](const std::string& got, const std::string& expected, bool attested_only) {
    return babylon::diff_trace(babylon::parse_trace(got), babylon::parse_trace(expected), attested_only).to_string();
  }, py::arg("got"), py::arg("expected"), py::arg("attested_only") = false, "Empty string when the traces agree.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = babylon::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
