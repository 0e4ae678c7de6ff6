#pragma once

// Fuzzification (alpha-cut), centroid-min type-reduction and defuzzification
// of normal type-2 fuzzy scalars and points.

#include <optional>
#include <utility>

#include "fuzzycurve/fuzzy_scalar.hpp"
#include "fuzzycurve/geometry.hpp"

namespace fuzzycurve {

/// Below: alpha <= h, the lower membership function still has a cut.
/// Between: h < alpha < 1, only the upper and principal cuts survive.
enum class CutRegime { Below, Between };

struct LeftCut {
  double outer = 0.0;
  double principal = 0.0;
  std::optional<double> inner;
};

struct RightCut {
  std::optional<double> inner;
  double principal = 0.0;
  double outer = 0.0;
};

struct AlphaCutScalar {
  double alpha = 0.0;
  LeftCut left;
  double c = 0.0;
  RightCut right;
  CutRegime regime = CutRegime::Below;
};

struct TRInterval {
  double left = 0.0;
  double c = 0.0;
  double right = 0.0;
  double alpha = 0.0;
};

CutRegime regime_for(double alpha, double h) noexcept;

/// Requires 0 <= alpha < 1, otherwise Error{AlphaOutOfRange}.
///
/// Upper and principal components move toward c by the fraction alpha. The
/// lower membership function has height h, so its components move by
/// alpha / h and disappear once alpha exceeds h.
AlphaCutScalar alpha_cut_scalar(const FuzzyScalar& s, double alpha);

std::pair<AlphaCutScalar, AlphaCutScalar> alpha_cut_point(const FuzzyPoint& p, double alpha);

/// Per-side arithmetic mean of the surviving cut values (three below h, two
/// above); c passes through.
TRInterval type_reduce(const AlphaCutScalar& a) noexcept;

/// Mean of left, c and right.
double defuzzify(const TRInterval& t) noexcept;

/// Per-coordinate cut -> reduce -> defuzzify.
Point2 pipeline_point(const FuzzyPoint& p, double alpha);

/// Per-coordinate type-reduced intervals of a point.
std::pair<TRInterval, TRInterval> reduce_point(const FuzzyPoint& p, double alpha);

}  // namespace fuzzycurve
