#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "fuzzycurve/cli.hpp"
#include "fuzzycurve/curve_model.hpp"
#include "fuzzycurve/document.hpp"
#include "fuzzycurve/error.hpp"
#include "fuzzycurve/output.hpp"
#include "fuzzycurve/pipeline.hpp"
#include "fuzzycurve/spline.hpp"

namespace py = pybind11;
using namespace fuzzycurve;

namespace {

std::vector<Point2> to_points(const std::vector<std::pair<double, double>>& xy) {
  std::vector<Point2> out;
  out.reserve(xy.size());
  for (const auto& [x, y] : xy) out.push_back({x, y});
  return out;
}

py::list curve_dict(const std::vector<NamedPolyline>& series) {
  py::list out;
  for (const auto& s : series) out.append(py::make_tuple(s.label, s.curve));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal type-2 fuzzy rational B-spline curves";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&] { return py::object(py::exception<Error>(m, "FuzzyCurveError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const auto& type = error_type.get_stored();
      py::object err = type(e.what());
      err.attr("kind") = std::string(to_string(e.kind()));
      err.attr("detail") = e.detail();
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::class_<Point2>(m, "Point2")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Point2::x)
      .def_readwrite("y", &Point2::y)
      .def(py::self == py::self)
      .def("__iter__", [](const Point2& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const Point2& p) { return "Point2(" + format_number(p.x) + ", " + format_number(p.y) + ")"; });

  py::class_<FuzzyScalar>(m, "FuzzyScalar")
      .def(py::init(&make_scalar), py::arg("ll"), py::arg("l"), py::arg("rl"), py::arg("c"), py::arg("lr"),
           py::arg("r"), py::arg("rr"), py::arg("h"))
      .def_static(
          "from_spreads",
          [](double c, std::array<double, 3> left, std::array<double, 3> right, double h) {
            return make_scalar_from_spreads(c, {left[0], left[1], left[2], right[0], right[1], right[2]}, h);
          },
          py::arg("c"), py::arg("left"), py::arg("right"), py::arg("h"),
          "left = (outer, principal, inner), right = (inner, principal, outer), distances from c")
      .def_readonly("ll", &FuzzyScalar::ll)
      .def_readonly("l", &FuzzyScalar::l)
      .def_readonly("rl", &FuzzyScalar::rl)
      .def_readonly("c", &FuzzyScalar::c)
      .def_readonly("lr", &FuzzyScalar::lr)
      .def_readonly("r", &FuzzyScalar::r)
      .def_readonly("rr", &FuzzyScalar::rr)
      .def_readonly("h", &FuzzyScalar::h)
      .def_property_readonly("is_degenerate", &FuzzyScalar::is_degenerate)
      .def("upper", [](const FuzzyScalar& s, double x) { return membership_upper(s, x).value(); })
      .def("lower", [](const FuzzyScalar& s, double x) { return membership_lower(s, x).value(); })
      .def(py::self == py::self)
      .def("__repr__", [](const FuzzyScalar& s) {
        std::ostringstream os;
        os << "FuzzyScalar(" << format_number(s.ll) << ", " << format_number(s.l) << ", " << format_number(s.rl)
           << ", " << format_number(s.c) << ", " << format_number(s.lr) << ", " << format_number(s.r) << ", "
           << format_number(s.rr) << ", h=" << format_number(s.h) << ")";
        return os.str();
      });

  py::class_<FuzzyPoint>(m, "FuzzyPoint")
      .def(py::init([](const FuzzyScalar& x, const FuzzyScalar& y) {
             FuzzyPoint p{x, y};
             validate(p);
             return p;
           }),
           py::arg("x"), py::arg("y"))
      .def_readonly("x", &FuzzyPoint::x)
      .def_readonly("y", &FuzzyPoint::y)
      .def(py::self == py::self);

  py::enum_<CutRegime>(m, "CutRegime").value("Below", CutRegime::Below).value("Between", CutRegime::Between);

  py::class_<AlphaCutScalar>(m, "AlphaCutScalar")
      .def_readonly("alpha", &AlphaCutScalar::alpha)
      .def_readonly("c", &AlphaCutScalar::c)
      .def_readonly("regime", &AlphaCutScalar::regime)
      .def_property_readonly("left", [](const AlphaCutScalar& a) {
        return py::make_tuple(a.left.outer, a.left.principal, a.left.inner);
      })
      .def_property_readonly("right", [](const AlphaCutScalar& a) {
        return py::make_tuple(a.right.inner, a.right.principal, a.right.outer);
      });

  py::class_<TRInterval>(m, "TRInterval")
      .def_readonly("left", &TRInterval::left)
      .def_readonly("c", &TRInterval::c)
      .def_readonly("right", &TRInterval::right)
      .def_readonly("alpha", &TRInterval::alpha);

  m.def("alpha_cut", &alpha_cut_scalar, py::arg("scalar"), py::arg("alpha"));
  m.def("type_reduce", &type_reduce, py::arg("cut"));
  m.def("defuzzify", &defuzzify, py::arg("interval"));
  m.def("reduce_point", &reduce_point, py::arg("point"), py::arg("alpha"));
  m.def("pipeline_point", &pipeline_point, py::arg("point"), py::arg("alpha"));

  m.def(
      "clamped_uniform_knots",
      [](int n, int k) {
        const auto kv = clamped_uniform_knots(n, k);
        return std::vector<double>(kv.values().begin(), kv.values().end());
      },
      py::arg("n"), py::arg("k"));
  m.def(
      "basis",
      [](const std::vector<double>& knots, int order, double t) { return basis_all(KnotVector(knots), order, t); },
      py::arg("knots"), py::arg("order"), py::arg("t"));

  py::class_<Polyline>(m, "Polyline")
      .def_readonly("points", &Polyline::points)
      .def_readonly("params", &Polyline::params)
      .def("__len__", [](const Polyline& p) { return p.points.size(); });

  m.def(
      "rational_curve",
      [](const std::vector<std::pair<double, double>>& controls, std::vector<double> weights, int order, int samples) {
        return sample_curve(RationalCurveModel(to_points(controls), std::move(weights), order), samples);
      },
      py::arg("controls"), py::arg("weights"), py::arg("order"), py::arg("samples") = kDefaultSamples);
  m.def(
      "rational_point",
      [](const std::vector<std::pair<double, double>>& controls, std::vector<double> weights, int order, double t) {
        return rational_point(RationalCurveModel(to_points(controls), std::move(weights), order), t);
      },
      py::arg("controls"), py::arg("weights"), py::arg("order"), py::arg("t"));

  py::class_<DeviationReport>(m, "DeviationReport")
      .def_readonly("max_distance", &DeviationReport::max_distance)
      .def_readonly("mean_distance", &DeviationReport::mean_distance)
      .def_readonly("per_sample", &DeviationReport::per_sample);
  m.def("deviation", &deviation, py::arg("a"), py::arg("b"));

  py::class_<FuzzyCurveModel>(m, "FuzzyCurveModel")
      .def(py::init<std::vector<FuzzyPoint>, std::vector<double>, int, double>(), py::arg("controls"),
           py::arg("weights"), py::arg("order") = kDefaultOrder, py::arg("alpha") = kDefaultAlpha)
      .def(py::init([](std::vector<FuzzyPoint> controls, std::vector<double> weights, int order,
                       std::vector<double> knots, double alpha) {
             return FuzzyCurveModel(std::move(controls), std::move(weights), order, KnotVector(std::move(knots)),
                                    alpha);
           }),
           py::arg("controls"), py::arg("weights"), py::arg("order"), py::arg("knots"), py::arg("alpha"))
      .def_property_readonly("controls",
                             [](const FuzzyCurveModel& m) {
                               return std::vector<FuzzyPoint>(m.controls().begin(), m.controls().end());
                             })
      .def_property_readonly("weights",
                             [](const FuzzyCurveModel& m) {
                               return std::vector<double>(m.weights().begin(), m.weights().end());
                             })
      .def_property_readonly("knots",
                             [](const FuzzyCurveModel& m) {
                               return std::vector<double>(m.knots().values().begin(), m.knots().values().end());
                             })
      .def_property_readonly("order", &FuzzyCurveModel::order)
      .def_property_readonly("alpha", &FuzzyCurveModel::alpha)
      .def("__len__", &FuzzyCurveModel::size)
      .def("with_alpha", &FuzzyCurveModel::with_alpha, py::arg("alpha"))
      .def(
          "band",
          [](const FuzzyCurveModel& m, int samples) { return curve_dict(named_band(fuzzy_curve_band(m, samples))); },
          py::arg("samples") = kDefaultSamples, "List of (label, Polyline) for ll, l, rl, crisp, lr, r, rr")
      .def(
          "reduced",
          [](const FuzzyCurveModel& m, int samples) {
            auto tr = reduced_curves(m, samples);
            return py::make_tuple(tr.left, tr.crisp, tr.right);
          },
          py::arg("samples") = kDefaultSamples, "(left, crisp, right) type-reduced curves")
      .def(
          "defuzzified", [](const FuzzyCurveModel& m, int samples) { return defuzzified_curve(m, samples); },
          py::arg("samples") = kDefaultSamples)
      .def(
          "crisp", [](const FuzzyCurveModel& m, int samples) { return crisp_curve(m, samples); },
          py::arg("samples") = kDefaultSamples)
      .def("solution_controls", &solution_polygon)
      .def(
          "band_svg", [](const FuzzyCurveModel& m, int samples) { return render_svg(band_scene(m, samples)); },
          py::arg("samples") = kDefaultSamples)
      .def(
          "solution_svg", [](const FuzzyCurveModel& m, int samples) { return render_svg(solution_scene(m, samples)); },
          py::arg("samples") = kDefaultSamples)
      .def(
          "band_csv",
          [](const FuzzyCurveModel& m, int samples) {
            std::ostringstream os;
            write_csv(named_band(fuzzy_curve_band(m, samples)), os);
            return os.str();
          },
          py::arg("samples") = kDefaultSamples)
      .def(py::self == py::self);

  m.def(
      "demo_model", [] { return build_model(demo_document()); }, "Built-in four-point model");
  m.def("demo_document", [] { return serialize_document(demo_document()); }, "Built-in model as JSON text");
  m.def(
      "parse_model", [](const std::string& text) { return build_model(parse_document(text)); }, py::arg("text"));
  m.def("load_model", &load_model, py::arg("path"));
  m.def(
      "to_json", [](const FuzzyCurveModel& model) { return serialize_document(document_from_model(model)); },
      py::arg("model"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr)");
}
