#include "fuzzycurve/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzycurve/error.hpp"

namespace fuzzycurve {

KnotVector::KnotVector(std::vector<double> knots) : knots_(std::move(knots)) {
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i])) throw Error(ErrorKind::InvalidKnots, "knot " + std::to_string(i) + " is not finite");
    if (i > 0 && knots_[i] < knots_[i - 1]) {
      throw Error(ErrorKind::InvalidKnots, "knots decrease at index " + std::to_string(i));
    }
  }
}

KnotVector KnotVector::clamped_uniform(int n, int k) {
  if (k < 2) throw Error(ErrorKind::InvalidOrder, "order must be at least 2, got " + std::to_string(k));
  if (k > n) {
    throw Error(ErrorKind::OrderExceedsControlCount,
                "order " + std::to_string(k) + " exceeds control count " + std::to_string(n));
  }
  std::vector<double> knots;
  knots.reserve(static_cast<std::size_t>(n + k));
  knots.insert(knots.end(), static_cast<std::size_t>(k), 0.0);
  const int segments = n - k + 1;
  for (int i = 1; i < segments; ++i) knots.push_back(static_cast<double>(i) / segments);
  knots.insert(knots.end(), static_cast<std::size_t>(k), 1.0);
  return KnotVector(std::move(knots));
}

bool KnotVector::is_clamped(int order) const noexcept {
  const auto k = static_cast<std::size_t>(order);
  if (order < 1 || knots_.size() < 2 * k) return false;
  for (std::size_t i = 1; i < k; ++i) {
    if (knots_[i] != knots_[0] || knots_[knots_.size() - 1 - i] != knots_.back()) return false;
  }
  return true;
}

KnotVector clamped_uniform_knots(int n, int k) { return KnotVector::clamped_uniform(n, k); }

namespace {

void check_domain(const KnotVector& knots, int order, double t) {
  if (order < 1 || knots.size() <= static_cast<std::size_t>(order)) {
    throw Error(ErrorKind::InvalidOrder, "order " + std::to_string(order) + " does not fit " +
                                             std::to_string(knots.size()) + " knots");
  }
  const double lo = knots.domain_begin(order);
  const double hi = knots.domain_end(order);
  if (!(t >= lo && t <= hi)) {
    throw Error(ErrorKind::ParameterOutOfDomain,
                "t = " + std::to_string(t) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

std::size_t find_span(const KnotVector& knots, int order, double t) {
  check_domain(knots, order, t);
  const auto u = knots.values();
  const std::size_t n = u.size() - static_cast<std::size_t>(order);
  const std::size_t first = static_cast<std::size_t>(order) - 1;
  if (t >= u[n]) {
    for (std::size_t s = n - 1; s > first; --s) {
      if (u[s] < u[s + 1]) return s;
    }
    return first;
  }
  const auto it = std::upper_bound(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n) + 1, t);
  return static_cast<std::size_t>(it - u.begin()) - 1;
}

std::vector<double> basis_all(const KnotVector& knots, int order, double t) {
  const std::size_t span = find_span(knots, order, t);
  const auto u = knots.values();
  const std::size_t m = u.size();

  std::vector<double> values(m - 1, 0.0);
  values[span] = 1.0;
  for (std::size_t p = 2; p <= static_cast<std::size_t>(order); ++p) {
    std::vector<double> next(m - p, 0.0);
    for (std::size_t j = 0; j < next.size(); ++j) {
      double v = 0.0;
      const double left_den = u[j + p - 1] - u[j];
      if (left_den > 0.0 && values[j] != 0.0) v += (t - u[j]) / left_den * values[j];
      const double right_den = u[j + p] - u[j + 1];
      if (right_den > 0.0 && values[j + 1] != 0.0) v += (u[j + p] - t) / right_den * values[j + 1];
      next[j] = v;
    }
    values = std::move(next);
  }
  return values;
}

double basis(const KnotVector& knots, int index, int order, double t) {
  const auto values = basis_all(knots, order, t);
  if (index < 0 || static_cast<std::size_t>(index) >= values.size()) {
    throw Error(ErrorKind::SizeMismatch, "basis index " + std::to_string(index) + " out of range");
  }
  return values[static_cast<std::size_t>(index)];
}

RationalCurveModel::RationalCurveModel(std::vector<Point2> controls, std::vector<double> weights, int order,
                                       KnotVector knots)
    : controls_(std::move(controls)), weights_(std::move(weights)), order_(order), knots_(std::move(knots)) {
  const auto n = controls_.size();
  if (order_ < 2) throw Error(ErrorKind::InvalidOrder, "order must be at least 2, got " + std::to_string(order_));
  if (static_cast<std::size_t>(order_) > n) {
    throw Error(ErrorKind::OrderExceedsControlCount,
                "order " + std::to_string(order_) + " exceeds control count " + std::to_string(n));
  }
  if (weights_.size() != n) {
    throw Error(ErrorKind::SizeMismatch,
                std::to_string(weights_.size()) + " weights for " + std::to_string(n) + " control points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(controls_[i].x) || !std::isfinite(controls_[i].y)) {
      throw Error(ErrorKind::NonFiniteValue, "control point " + std::to_string(i + 1) + " is not finite");
    }
    if (!std::isfinite(weights_[i]) || !(weights_[i] > 0.0)) {
      throw Error(ErrorKind::InvalidWeight, "weight " + std::to_string(i + 1) + " must be positive");
    }
  }
  if (knots_.size() != n + static_cast<std::size_t>(order_)) {
    throw Error(ErrorKind::InvalidKnots, "expected " + std::to_string(n + static_cast<std::size_t>(order_)) +
                                             " knots, got " + std::to_string(knots_.size()));
  }
  if (!knots_.is_clamped(order_)) throw Error(ErrorKind::InvalidKnots, "knot vector is not clamped");
  if (!(knots_.domain_begin(order_) < knots_.domain_end(order_))) {
    throw Error(ErrorKind::InvalidKnots, "knot vector has an empty domain");
  }
}

RationalCurveModel::RationalCurveModel(std::vector<Point2> controls, std::vector<double> weights, int order)
    : RationalCurveModel(controls, std::move(weights), order,
                         KnotVector::clamped_uniform(static_cast<int>(controls.size()), order)) {}

Point2 rational_point(const RationalCurveModel& m, double t) {
  const auto n_k = basis_all(m.knots(), m.order(), t);
  const auto controls = m.controls();
  const auto weights = m.weights();
  double x = 0.0;
  double y = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    const double wn = weights[i] * n_k[i];
    x += wn * controls[i].x;
    y += wn * controls[i].y;
    den += wn;
  }
  return {x / den, y / den};
}

std::vector<double> sample_parameters(double begin, double end, int samples) {
  if (samples < 2) throw Error(ErrorKind::TooFewSamples, "need at least 2 samples, got " + std::to_string(samples));
  std::vector<double> params(static_cast<std::size_t>(samples));
  const double last = samples - 1;
  for (int i = 0; i < samples; ++i) params[static_cast<std::size_t>(i)] = begin + (end - begin) * (i / last);
  params.back() = end;
  return params;
}

Polyline sample_curve(const RationalCurveModel& m, int samples) {
  Polyline out;
  out.params = sample_parameters(m.domain_begin(), m.domain_end(), samples);
  out.points.reserve(out.params.size());
  for (double t : out.params) out.points.push_back(rational_point(m, t));
  return out;
}

}  // namespace fuzzycurve
