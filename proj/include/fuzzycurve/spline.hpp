#pragma once

// Rational B-spline curves of order k (degree k - 1) over clamped knot vectors.
//
// Basis functions are indexed from 0 here; index j corresponds to N_{j+1}^k
// in the usual 1-based notation and is supported on [knots[j], knots[j + k]].

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzycurve/geometry.hpp"

namespace fuzzycurve {

class KnotVector {
 public:
  KnotVector() = default;
  /// Requires a non-decreasing, finite sequence.
  explicit KnotVector(std::vector<double> knots);

  /// k zeros, n - k evenly spaced interior knots, k ones.
  static KnotVector clamped_uniform(int n, int k);

  std::span<const double> values() const noexcept { return knots_; }
  std::size_t size() const noexcept { return knots_.size(); }
  double operator[](std::size_t i) const noexcept { return knots_[i]; }

  /// First and last knots repeated `order` times.
  bool is_clamped(int order) const noexcept;

  /// Parameter domain [knots[k - 1], knots[n]] for order k with n = size() - k.
  double domain_begin(int order) const noexcept { return knots_[static_cast<std::size_t>(order) - 1]; }
  double domain_end(int order) const noexcept { return knots_[knots_.size() - static_cast<std::size_t>(order)]; }

  friend bool operator==(const KnotVector&, const KnotVector&) = default;

 private:
  std::vector<double> knots_;
};

KnotVector clamped_uniform_knots(int n, int k);

/// All n = knots.size() - order basis values at t (Cox-de Boor, 0/0 := 0).
/// The last non-empty span is closed on the right so that N_{n-1}(t_max) = 1.
/// Throws Error{ParameterOutOfDomain}, Error{InvalidOrder}.
std::vector<double> basis_all(const KnotVector& knots, int order, double t);

/// Single basis value, 0-based `index` in [0, n).
double basis(const KnotVector& knots, int index, int order, double t);

/// Index of the knot span [knots[s], knots[s + 1]) that contains t.
std::size_t find_span(const KnotVector& knots, int order, double t);

class RationalCurveModel {
 public:
  /// Validates k >= 2, k <= n, positive finite weights, knot length n + k and
  /// clamped ends.
  RationalCurveModel(std::vector<Point2> controls, std::vector<double> weights, int order, KnotVector knots);
  /// Clamped uniform knots.
  RationalCurveModel(std::vector<Point2> controls, std::vector<double> weights, int order);

  std::span<const Point2> controls() const noexcept { return controls_; }
  std::span<const double> weights() const noexcept { return weights_; }
  int order() const noexcept { return order_; }
  const KnotVector& knots() const noexcept { return knots_; }
  std::size_t size() const noexcept { return controls_.size(); }

  double domain_begin() const noexcept { return knots_.domain_begin(order_); }
  double domain_end() const noexcept { return knots_.domain_end(order_); }

 private:
  std::vector<Point2> controls_;
  std::vector<double> weights_;
  int order_;
  KnotVector knots_;
};

/// Sum w_i N_i(t) P_i / sum w_r N_r(t).
Point2 rational_point(const RationalCurveModel& m, double t);

struct Polyline {
  std::vector<Point2> points;
  std::vector<double> params;
};

/// `samples` evenly spaced parameters covering the closed domain.
/// Throws Error{TooFewSamples} when samples < 2.
std::vector<double> sample_parameters(double begin, double end, int samples);

Polyline sample_curve(const RationalCurveModel& m, int samples);

}  // namespace fuzzycurve
