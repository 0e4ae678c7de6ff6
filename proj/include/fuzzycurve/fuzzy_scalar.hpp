#pragma once

// Normal type-2 triangular fuzzy scalars and planar fuzzy points.
//
// A scalar carries seven ordered abscissae around its crisp apex `c`:
//
//   ll <= l <= rl <= c <= lr <= r <= rr
//
// [ll, rr] supports the upper membership function (apex height 1), [l, r]
// the principal triangle, and [rl, lr] the lower membership function whose
// apex height is `h`.

#include <stdexcept>

namespace fuzzycurve {

struct FuzzyScalar {
  double ll = 0.0;
  double l = 0.0;
  double rl = 0.0;
  double c = 0.0;
  double lr = 0.0;
  double r = 0.0;
  double rr = 0.0;
  double h = 1.0;

  /// The lower membership function peaks strictly below the upper one.
  bool is_normal() const noexcept { return h < 1.0; }
  bool is_degenerate() const noexcept {
    return ll == c && l == c && rl == c && lr == c && r == c && rr == c;
  }

  friend bool operator==(const FuzzyScalar&, const FuzzyScalar&) = default;
};

/// Distances from the crisp value to each of the six outer components.
struct Spreads {
  double outer_left = 0.0;
  double principal_left = 0.0;
  double inner_left = 0.0;
  double inner_right = 0.0;
  double principal_right = 0.0;
  double outer_right = 0.0;

  friend bool operator==(const Spreads&, const Spreads&) = default;
};

struct FuzzyPoint {
  FuzzyScalar x;
  FuzzyScalar y;

  friend bool operator==(const FuzzyPoint&, const FuzzyPoint&) = default;
};

/// A membership degree, always within [0, 1].
class MembershipGrade {
 public:
  explicit MembershipGrade(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) throw std::domain_error("membership grade outside [0, 1]");
  }
  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// Validates and builds a scalar. Comparisons are exact.
/// Throws Error{OrderingViolation} naming the first offending pair,
/// Error{HeightOutOfRange} unless 0 < h <= 1, Error{NonFiniteValue}.
FuzzyScalar make_scalar(double ll, double l, double rl, double c, double lr, double r, double rr, double h);

/// Builds a scalar as offsets from `c`; ordering holds by construction once
/// inner <= principal <= outer on each side.
FuzzyScalar make_scalar_from_spreads(double c, const Spreads& spreads, double h);

Spreads spreads_of(const FuzzyScalar& s) noexcept;

/// Re-checks every invariant of an already constructed value.
void validate(const FuzzyScalar& s);
void validate(const FuzzyPoint& p);

/// Triangle on [ll, rr] with apex (c, 1).
MembershipGrade membership_upper(const FuzzyScalar& s, double x) noexcept;
/// Triangle on [rl, lr] with apex (c, h).
MembershipGrade membership_lower(const FuzzyScalar& s, double x) noexcept;

}  // namespace fuzzycurve
