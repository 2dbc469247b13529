// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ecdescent/report.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact big-integer bridge: Python int <-> mpz through decimal strings.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* s = PyObject_Str(src.ptr());
    if (!s) return false;
    const char* text = PyUnicode_AsUTF8(s);
    bool ok = text != nullptr;
    if (ok) value = mpz_class(text);
    Py_DECREF(s);
    return ok;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace ecdescent;

DecisionMode mode_from(const std::string& name) {
  if (name == "filters") return DecisionMode::FiltersPlusDecide;
  if (name == "decide") return DecisionMode::DecideOnly;
  if (name == "both") return DecisionMode::Both;
  throw DomainError("mode must be one of filters, decide, both");
}

Command command_from(const std::string& name) {
  for (Command c : {Command::Rank, Command::Local, Command::Descend,
                    Command::Family, Command::Scan, Command::Audit,
                    Command::Oracle})
    if (command_name(c) == name) return c;
  throw DomainError("unknown command: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact 2-descent, local solvability and even-class-number "
      "certificates for the curves y^2 = (x + 6p)(x - 9p)(x - 18p)";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const FactorBudgetError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const CrossCheckError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<CurveParams>(m, "Curve")
      .def_readonly("p", &CurveParams::p)
      .def_readonly("a2", &CurveParams::a2)
      .def_readonly("a6", &CurveParams::a6)
      .def_property_readonly(
          "roots",
          [](const CurveParams& c) {
            return py::make_tuple(Int(-c.root_b), c.root_a, c.root_c);
          })
      .def_property_readonly(
          "theorem_class",
          [](const CurveParams& c) {
            return theorem_class_name(c.theorem_class);
          })
      .def("__repr__", [](const CurveParams& c) {
        return "Curve(p=" + c.p.get_str() + ")";
      });

  py::class_<RationalPoint>(m, "Point")
      .def_readonly("r", &RationalPoint::r)
      .def_readonly("t", &RationalPoint::t)
      .def_readonly("s", &RationalPoint::s)
      .def_property_readonly("is_infinity", &RationalPoint::is_infinity)
      .def("__repr__", [](const RationalPoint& p) {
        if (p.is_infinity()) return std::string("Point(infinity)");
        return "Point(r=" + p.r.get_str() + ", t=" + p.t.get_str() +
               ", s=" + p.s.get_str() + ")";
      })
      .def("__eq__", [](const RationalPoint& a, const RationalPoint& b) {
        return a == b;
      });

  py::class_<SelmerGroup>(m, "SelmerGroup")
      .def_readonly("rank", &SelmerGroup::rank_s)
      .def_readonly("complete", &SelmerGroup::complete)
      .def_property_readonly("elements", [](const SelmerGroup& g) {
        py::list out;
        for (const SelmerPair& pr : g.elements)
          out.append(py::make_tuple(pr.b1.value, pr.b2.value));
        return out;
      });

  py::class_<QuadClassData>(m, "QuadClass")
      .def_readonly("d", &QuadClassData::d)
      .def_readonly("h", &QuadClassData::h)
      .def_property_readonly("method", [](const QuadClassData& q) {
        return q.method == ClassMethod::DefiniteFormsCount
                   ? "definite-forms"
                   : "indefinite-cycles";
      });

  py::class_<BiquadField>(m, "Field")
      .def_property_readonly(
          "d1", [](const BiquadField& k) { return k.d1.value; })
      .def_property_readonly(
          "d2", [](const BiquadField& k) { return k.d2.value; })
      .def_property_readonly(
          "d3", [](const BiquadField& k) { return k.d3.value; })
      .def_readonly("real", &BiquadField::real);

  py::class_<AlphaCertificate>(m, "Certificate")
      .def_readonly("s", &AlphaCertificate::s)
      .def_readonly("t", &AlphaCertificate::t)
      .def_readonly("r", &AlphaCertificate::r)
      .def_readonly("u", &AlphaCertificate::u)
      .def_readonly("v", &AlphaCertificate::v)
      .def_readonly("adjustment", &AlphaCertificate::adjustment)
      .def_property_readonly("passes", &AlphaCertificate::passes)
      .def_property_readonly("failed_check", &AlphaCertificate::failed_check)
      .def_property_readonly(
          "t_even",
          [](const AlphaCertificate& a) { return a.checks.t_even; })
      .def_property_readonly(
          "gcd_s_3p",
          [](const AlphaCertificate& a) { return a.checks.gcd_s_3p; })
      .def_property_readonly(
          "norm_identity",
          [](const AlphaCertificate& a) { return a.checks.norm_identity; })
      .def_property_readonly(
          "congruence_class", [](const AlphaCertificate& a) {
            return a.checks.congruence_class;
          });

  py::class_<BiquadClassEstimate>(m, "ClassEstimate")
      .def_readonly("h1", &BiquadClassEstimate::h1)
      .def_readonly("h2", &BiquadClassEstimate::h2)
      .def_readonly("h3", &BiquadClassEstimate::h3)
      .def_readonly("candidates", &BiquadClassEstimate::candidates)
      .def_readonly("parity_even_certain",
                    &BiquadClassEstimate::parity_even_certain);

  py::class_<FamilyEntry>(m, "FamilyEntry")
      .def_readonly("point", &FamilyEntry::point)
      .def_readonly("field", &FamilyEntry::field)
      .def_readonly("cert", &FamilyEntry::cert);

  m.def("make_curve", &make_curve, py::arg("p"));
  m.def("make_affine", &make_affine, py::arg("r"), py::arg("t"),
        py::arg("s"));
  m.def("on_curve", &on_curve, py::arg("point"), py::arg("curve"));
  m.def("negate", &negate, py::arg("point"));
  m.def("add", &add, py::arg("a"), py::arg("b"), py::arg("curve"));
  m.def("double_point", &double_point, py::arg("point"), py::arg("curve"));
  m.def("multiply", &multiply, py::arg("n"), py::arg("point"),
        py::arg("curve"));
  m.def("is_torsion", &is_torsion, py::arg("point"));
  m.def("count_points_mod", &count_points_mod, py::arg("curve"),
        py::arg("l"));
  m.def(
      "squarefree_part",
      [](const Int& n) { return squarefree_part(n).value; }, py::arg("n"));
  m.def(
      "class_in_qs2",
      [](const Int& n, const CurveParams& c) {
        return class_in_qs2(n, c).value;
      },
      py::arg("n"), py::arg("curve"));
  m.def(
      "phi",
      [](const RationalPoint& pt, const CurveParams& c) {
        const SelmerPair pr = phi(pt, c);
        return py::make_tuple(pr.b1.value, pr.b2.value);
      },
      py::arg("point"), py::arg("curve"));
  m.def(
      "compute_selmer",
      [](const CurveParams& c, const std::string& mode) {
        return compute_selmer(c, mode_from(mode));
      },
      py::arg("curve"), py::arg("mode") = "both");
  m.def(
      "local_verdicts",
      [](const CurveParams& c, const Int& b1, const Int& b2,
         const std::string& mode, int spot_check_places) {
        const SelmerPair pr{class_in_qs2(b1, c), class_in_qs2(b2, c)};
        LocalOptions opt;
        opt.mode = mode_from(mode);
        opt.spot_check_places = spot_check_places;
        py::list out;
        for (const LocalVerdict& v :
             verdict_all_places(make_homspace(pr, c), opt)) {
          py::dict d;
          d["place"] = v.place == 0 ? std::string("infinity")
                                    : v.place.get_str();
          d["solvable"] = v.solvability == Solvability::Solvable ? "yes"
                          : v.solvability == Solvability::Unsolvable
                              ? "no"
                              : "undecided";
          d["rule"] = rule_name(v.rule);
          out.append(d);
        }
        return out;
      },
      py::arg("curve"), py::arg("b1"), py::arg("b2"),
      py::arg("mode") = "both", py::arg("spot_check_places") = 0);
  m.def("h_quadratic", &h_quadratic, py::arg("n"));
  m.def("build_field", &build_field, py::arg("point"), py::arg("curve"));
  m.def("alpha_certificate", &alpha_certificate, py::arg("point"),
        py::arg("curve"));
  m.def("biquad_estimate", &biquad_estimate, py::arg("field"));
  m.def("double_family", &double_family, py::arg("seed"), py::arg("curve"),
        py::arg("depth"));

  // Full command surface; output is the same canonical JSON or table text
  // the command-line binary prints.
  m.def(
      "run",
      [](const std::string& command, std::optional<Int> p,
         std::optional<std::pair<Int, Int>> pair,
         std::optional<std::array<Int, 3>> point, long depth,
         const std::string& mode, const std::string& format,
         const std::vector<Int>& classes, long count,
         int spot_check_places) {
        RunConfig cfg;
        cfg.command = command_from(command);
        cfg.p = p;
        cfg.pair = pair;
        cfg.point = point;
        cfg.depth = depth;
        cfg.mode = mode_from(mode);
        cfg.format =
            format == "table" ? OutputFormat::Table : OutputFormat::Json;
        cfg.classes = classes;
        cfg.count = count;
        cfg.spot_check_places = spot_check_places;
        const RunResult res = run_command(cfg);
        return py::make_tuple(res.exit_code, res.output, res.error);
      },
      py::arg("command"), py::kw_only(), py::arg("p") = std::nullopt,
      py::arg("pair") = std::nullopt, py::arg("point") = std::nullopt,
      py::arg("depth") = -1, py::arg("mode") = "both",
      py::arg("format") = "json", py::arg("classes") = std::vector<Int>{},
      py::arg("count") = 0, py::arg("spot_check_places") = 0);
}
