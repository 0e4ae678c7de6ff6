#pragma once

// Fuzzy rational B-spline curves: seven component curves forming the
// uncertainty band, the type-reduced curves and the defuzzified solution
// curve. All components share one weight vector, order and knot vector.

#include <array>
#include <string_view>
#include <vector>

#include "fuzzycurve/fuzzy_scalar.hpp"
#include "fuzzycurve/pipeline.hpp"
#include "fuzzycurve/spline.hpp"

namespace fuzzycurve {

enum class Component { LL, L, RL, Crisp, LR, R, RR };

inline constexpr std::array<Component, 7> kComponents{Component::LL,    Component::L,  Component::RL, Component::Crisp,
                                                      Component::LR,    Component::R,  Component::RR};

std::string_view label(Component c) noexcept;
double component_value(const FuzzyScalar& s, Component c) noexcept;

inline constexpr int kDefaultSamples = 101;

class FuzzyCurveModel {
 public:
  /// Validates each control point, 0 <= alpha < 1, and the spline
  /// invariants shared with RationalCurveModel.
  FuzzyCurveModel(std::vector<FuzzyPoint> controls, std::vector<double> weights, int order, KnotVector knots,
                  double alpha);
  /// Clamped uniform knots.
  FuzzyCurveModel(std::vector<FuzzyPoint> controls, std::vector<double> weights, int order, double alpha);

  std::span<const FuzzyPoint> controls() const noexcept { return controls_; }
  std::span<const double> weights() const noexcept { return weights_; }
  int order() const noexcept { return order_; }
  const KnotVector& knots() const noexcept { return knots_; }
  double alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return controls_.size(); }

  /// Same geometry, different cut level.
  FuzzyCurveModel with_alpha(double alpha) const;

  /// Rational curve sharing this model's weights, order and knots.
  RationalCurveModel curve_for(std::vector<Point2> polygon) const;

  friend bool operator==(const FuzzyCurveModel&, const FuzzyCurveModel&) = default;

 private:
  std::vector<FuzzyPoint> controls_;
  std::vector<double> weights_;
  int order_;
  KnotVector knots_;
  double alpha_;
};

using ControlPolygon = std::vector<Point2>;

/// Indexed in kComponents order.
std::array<ControlPolygon, 7> component_polygons(const FuzzyCurveModel& model);

struct CurveBand {
  std::array<Polyline, 7> curves;

  const Polyline& operator[](Component c) const noexcept { return curves[static_cast<std::size_t>(c)]; }
};

CurveBand fuzzy_curve_band(const FuzzyCurveModel& model, int samples);

struct ReducedCurves {
  Polyline left;
  Polyline crisp;
  Polyline right;
};

/// Type-reduced control polygons. Left and right pair the x and y reductions
/// of each control point.
struct ReducedPolygons {
  ControlPolygon left;
  ControlPolygon crisp;
  ControlPolygon right;
};

ReducedPolygons reduced_polygons(const FuzzyCurveModel& model);
ReducedCurves reduced_curves(const FuzzyCurveModel& model, int samples);

/// Crisp solution control points: the pipeline applied to every control.
ControlPolygon solution_polygon(const FuzzyCurveModel& model);
Polyline defuzzified_curve(const FuzzyCurveModel& model, int samples);
Polyline crisp_curve(const FuzzyCurveModel& model, int samples);

struct DeviationReport {
  double max_distance = 0.0;
  double mean_distance = 0.0;
  std::vector<double> per_sample;
};

/// Distances at matched parameters. Throws Error{SampleMismatch} unless both
/// polylines share their parameter sequence.
DeviationReport deviation(const Polyline& a, const Polyline& b);

}  // namespace fuzzycurve
