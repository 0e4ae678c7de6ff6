#pragma once

// CSV and SVG writers for sampled curves. All numeric text is produced with
// std::to_chars, so output is locale independent and byte-for-byte
// reproducible.

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzycurve/curve_model.hpp"

namespace fuzzycurve {

/// Shortest text that parses back to the same double.
std::string format_number(double v);
/// Fixed-point with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

struct NamedPolyline {
  std::string label;
  Polyline curve;
};

/// The seven band curves labelled ll ... rr.
std::vector<NamedPolyline> named_band(const CurveBand& band);

/// Header `t,<label>_x,<label>_y,...` then one row per shared parameter.
/// Throws Error{SampleMismatch} when series disagree on parameters and
/// Error{SizeMismatch} for an empty series list.
void write_csv(std::span<const NamedPolyline> series, std::ostream& out);
void write_csv(std::span<const NamedPolyline> series, const std::filesystem::path& path);
void write_csv(const CurveBand& band, const std::filesystem::path& path);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

enum class Mark { Line, Points };

struct SeriesStyle {
  std::string color;
  double stroke_width = 1.5;
  bool dashed = false;
  Mark mark = Mark::Line;
};

/// Fixed palette keyed by series label. Unknown labels fall back to gray.
SeriesStyle style_for(std::string_view label);

struct SceneSeries {
  std::string label;
  std::vector<Point2> points;
  SeriesStyle style;
};

struct Scene {
  std::string title;
  std::vector<SceneSeries> series;

  void add(std::string label, std::vector<Point2> points);
};

inline constexpr double kCanvasWidth = 800.0;
inline constexpr double kCanvasHeight = 600.0;

/// SVG 1.1 document: framed axes with ticks, every series mapped through one
/// aspect-preserving affine transform of the padded (5%) data box, and a
/// legend in series order.
std::string render_svg(const Scene& scene);
void write_svg(const Scene& scene, const std::filesystem::path& path);

/// Band curves plus the seven component control polygons as point sets.
Scene band_scene(const FuzzyCurveModel& model, int samples);
/// Crisp solution curve and control points against the crisp curve and its
/// control points.
Scene solution_scene(const FuzzyCurveModel& model, int samples);

}  // namespace fuzzycurve
