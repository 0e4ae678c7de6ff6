#include "fuzzycurve/curve_model.hpp"

#include <algorithm>
#include <string>

#include "fuzzycurve/error.hpp"

namespace fuzzycurve {

std::string_view label(Component c) noexcept {
  switch (c) {
    case Component::LL: return "ll";
    case Component::L: return "l";
    case Component::RL: return "rl";
    case Component::Crisp: return "crisp";
    case Component::LR: return "lr";
    case Component::R: return "r";
    case Component::RR: return "rr";
  }
  return "?";
}

double component_value(const FuzzyScalar& s, Component c) noexcept {
  switch (c) {
    case Component::LL: return s.ll;
    case Component::L: return s.l;
    case Component::RL: return s.rl;
    case Component::Crisp: return s.c;
    case Component::LR: return s.lr;
    case Component::R: return s.r;
    case Component::RR: return s.rr;
  }
  return s.c;
}

FuzzyCurveModel::FuzzyCurveModel(std::vector<FuzzyPoint> controls, std::vector<double> weights, int order,
                                 KnotVector knots, double alpha)
    : controls_(std::move(controls)), weights_(std::move(weights)), order_(order), knots_(std::move(knots)),
      alpha_(alpha) {
  for (std::size_t i = 0; i < controls_.size(); ++i) {
    try {
      validate(controls_[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "point " + std::to_string(i + 1) + ", " + e.detail());
    }
  }
  if (!(alpha_ >= 0.0 && alpha_ < 1.0)) {
    throw Error(ErrorKind::AlphaOutOfRange, "alpha must lie in [0, 1), got " + std::to_string(alpha_));
  }
  // Spline invariants are identical to the crisp model's.
  (void)RationalCurveModel(component_polygons(*this)[static_cast<std::size_t>(Component::Crisp)], weights_, order_,
                           knots_);
}

FuzzyCurveModel::FuzzyCurveModel(std::vector<FuzzyPoint> controls, std::vector<double> weights, int order,
                                 double alpha)
    : FuzzyCurveModel(controls, std::move(weights), order,
                      KnotVector::clamped_uniform(static_cast<int>(controls.size()), order), alpha) {}

FuzzyCurveModel FuzzyCurveModel::with_alpha(double alpha) const {
  return FuzzyCurveModel(controls_, weights_, order_, knots_, alpha);
}

RationalCurveModel FuzzyCurveModel::curve_for(std::vector<Point2> polygon) const {
  return RationalCurveModel(std::move(polygon), weights_, order_, knots_);
}

std::array<ControlPolygon, 7> component_polygons(const FuzzyCurveModel& model) {
  std::array<ControlPolygon, 7> out;
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    out[c].reserve(model.size());
    for (const auto& p : model.controls()) {
      out[c].push_back({component_value(p.x, kComponents[c]), component_value(p.y, kComponents[c])});
    }
  }
  return out;
}

CurveBand fuzzy_curve_band(const FuzzyCurveModel& model, int samples) {
  auto polygons = component_polygons(model);
  CurveBand band;
  for (std::size_t c = 0; c < polygons.size(); ++c) {
    band.curves[c] = sample_curve(model.curve_for(std::move(polygons[c])), samples);
  }
  return band;
}

ReducedPolygons reduced_polygons(const FuzzyCurveModel& model) {
  ReducedPolygons out;
  for (const auto& p : model.controls()) {
    const auto [tx, ty] = reduce_point(p, model.alpha());
    out.left.push_back({tx.left, ty.left});
    out.crisp.push_back({tx.c, ty.c});
    out.right.push_back({tx.right, ty.right});
  }
  return out;
}

ReducedCurves reduced_curves(const FuzzyCurveModel& model, int samples) {
  auto polygons = reduced_polygons(model);
  return {sample_curve(model.curve_for(std::move(polygons.left)), samples),
          sample_curve(model.curve_for(std::move(polygons.crisp)), samples),
          sample_curve(model.curve_for(std::move(polygons.right)), samples)};
}

ControlPolygon solution_polygon(const FuzzyCurveModel& model) {
  ControlPolygon out;
  out.reserve(model.size());
  for (const auto& p : model.controls()) out.push_back(pipeline_point(p, model.alpha()));
  return out;
}

Polyline defuzzified_curve(const FuzzyCurveModel& model, int samples) {
  return sample_curve(model.curve_for(solution_polygon(model)), samples);
}

Polyline crisp_curve(const FuzzyCurveModel& model, int samples) {
  ControlPolygon polygon;
  polygon.reserve(model.size());
  for (const auto& p : model.controls()) polygon.push_back({p.x.c, p.y.c});
  return sample_curve(model.curve_for(std::move(polygon)), samples);
}

DeviationReport deviation(const Polyline& a, const Polyline& b) {
  if (a.points.size() != b.points.size() || a.params != b.params || a.points.size() != a.params.size()) {
    throw Error(ErrorKind::SampleMismatch, "polylines are not sampled at identical parameters");
  }
  DeviationReport report;
  report.per_sample.reserve(a.points.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const double d = distance(a.points[i], b.points[i]);
    report.per_sample.push_back(d);
    report.max_distance = std::max(report.max_distance, d);
    sum += d;
  }
  if (!report.per_sample.empty()) {
    report.mean_distance = std::min(report.max_distance, sum / static_cast<double>(report.per_sample.size()));
  }
  return report;
}

}  // namespace fuzzycurve
