#include "fuzzycurve/pipeline.hpp"

#include <cmath>
#include <string>

#include "fuzzycurve/error.hpp"

namespace fuzzycurve {

namespace {

// Moves `v` toward `c` by `fraction` of their separation; never passes c.
double toward_left(double v, double c, double fraction) { return v + fraction * (c - v); }
double toward_right(double v, double c, double fraction) { return v - fraction * (v - c); }

}  // namespace

CutRegime regime_for(double alpha, double h) noexcept { return alpha <= h ? CutRegime::Below : CutRegime::Between; }

AlphaCutScalar alpha_cut_scalar(const FuzzyScalar& s, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::AlphaOutOfRange, "alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
  validate(s);
  AlphaCutScalar out;
  out.alpha = alpha;
  out.c = s.c;
  out.regime = regime_for(alpha, s.h);
  out.left.outer = toward_left(s.ll, s.c, alpha);
  out.left.principal = toward_left(s.l, s.c, alpha);
  out.right.principal = toward_right(s.r, s.c, alpha);
  out.right.outer = toward_right(s.rr, s.c, alpha);
  if (out.regime == CutRegime::Below) {
    const double lower_level = alpha / s.h;
    out.left.inner = toward_left(s.rl, s.c, lower_level);
    out.right.inner = toward_right(s.lr, s.c, lower_level);
  }
  return out;
}

std::pair<AlphaCutScalar, AlphaCutScalar> alpha_cut_point(const FuzzyPoint& p, double alpha) {
  return {alpha_cut_scalar(p.x, alpha), alpha_cut_scalar(p.y, alpha)};
}

TRInterval type_reduce(const AlphaCutScalar& a) noexcept {
  TRInterval t;
  t.alpha = a.alpha;
  t.c = a.c;
  if (a.left.inner && a.right.inner) {
    t.left = (a.left.outer + a.left.principal + *a.left.inner) / 3.0;
    t.right = (*a.right.inner + a.right.principal + a.right.outer) / 3.0;
  } else {
    t.left = (a.left.outer + a.left.principal) / 2.0;
    t.right = (a.right.principal + a.right.outer) / 2.0;
  }
  return t;
}

double defuzzify(const TRInterval& t) noexcept { return (t.left + t.c + t.right) / 3.0; }

std::pair<TRInterval, TRInterval> reduce_point(const FuzzyPoint& p, double alpha) {
  const auto [cx, cy] = alpha_cut_point(p, alpha);
  return {type_reduce(cx), type_reduce(cy)};
}

Point2 pipeline_point(const FuzzyPoint& p, double alpha) {
  const auto [tx, ty] = reduce_point(p, alpha);
  return {defuzzify(tx), defuzzify(ty)};
}

}  // namespace fuzzycurve
