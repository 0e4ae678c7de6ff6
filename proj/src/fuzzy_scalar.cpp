#include "fuzzycurve/fuzzy_scalar.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fuzzycurve/error.hpp"

namespace fuzzycurve {

namespace {

struct Named {
  const char* name;
  double value;
};

double triangle(double lo, double apex, double hi, double height, double x) noexcept {
  if (x < lo || x > hi) return 0.0;
  if (x == apex) return height;
  if (x < apex) return height * (x - lo) / (apex - lo);
  return height * (hi - x) / (hi - apex);
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderingViolation: return "OrderingViolation";
    case ErrorKind::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::NegativeSpread: return "NegativeSpread";
    case ErrorKind::SpreadOrderViolation: return "SpreadOrderViolation";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::OrderExceedsControlCount: return "OrderExceedsControlCount";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::InvalidKnots: return "InvalidKnots";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParameterOutOfDomain: return "ParameterOutOfDomain";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::SampleMismatch: return "SampleMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

void validate(const FuzzyScalar& s) {
  const std::array<Named, 7> seq{{{"ll", s.ll}, {"l", s.l}, {"rl", s.rl}, {"c", s.c},
                                  {"lr", s.lr}, {"r", s.r}, {"rr", s.rr}}};
  for (const auto& v : seq) {
    if (!std::isfinite(v.value)) throw Error(ErrorKind::NonFiniteValue, std::string(v.name) + " is not finite");
  }
  if (!std::isfinite(s.h) || !(s.h > 0.0 && s.h <= 1.0)) {
    throw Error(ErrorKind::HeightOutOfRange, "h must lie in (0, 1], got " + std::to_string(s.h));
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i].value > seq[i + 1].value) {
      throw Error(ErrorKind::OrderingViolation, std::string(seq[i].name) + " > " + seq[i + 1].name);
    }
  }
}

void validate(const FuzzyPoint& p) {
  try {
    validate(p.x);
  } catch (const Error& e) {
    throw Error(e.kind(), "x: " + e.detail());
  }
  try {
    validate(p.y);
  } catch (const Error& e) {
    throw Error(e.kind(), "y: " + e.detail());
  }
}

FuzzyScalar make_scalar(double ll, double l, double rl, double c, double lr, double r, double rr, double h) {
  FuzzyScalar s{ll, l, rl, c, lr, r, rr, h};
  validate(s);
  return s;
}

FuzzyScalar make_scalar_from_spreads(double c, const Spreads& sp, double h) {
  const std::array<Named, 6> all{{{"outer_left", sp.outer_left},
                                  {"principal_left", sp.principal_left},
                                  {"inner_left", sp.inner_left},
                                  {"inner_right", sp.inner_right},
                                  {"principal_right", sp.principal_right},
                                  {"outer_right", sp.outer_right}}};
  for (const auto& v : all) {
    if (!std::isfinite(v.value)) throw Error(ErrorKind::NonFiniteValue, std::string(v.name) + " is not finite");
    if (v.value < 0.0) throw Error(ErrorKind::NegativeSpread, std::string(v.name) + " < 0");
  }
  if (sp.inner_left > sp.principal_left) throw Error(ErrorKind::SpreadOrderViolation, "inner_left > principal_left");
  if (sp.principal_left > sp.outer_left) throw Error(ErrorKind::SpreadOrderViolation, "principal_left > outer_left");
  if (sp.inner_right > sp.principal_right) {
    throw Error(ErrorKind::SpreadOrderViolation, "inner_right > principal_right");
  }
  if (sp.principal_right > sp.outer_right) {
    throw Error(ErrorKind::SpreadOrderViolation, "principal_right > outer_right");
  }
  return make_scalar(c - sp.outer_left, c - sp.principal_left, c - sp.inner_left, c, c + sp.inner_right,
                     c + sp.principal_right, c + sp.outer_right, h);
}

Spreads spreads_of(const FuzzyScalar& s) noexcept {
  return {s.c - s.ll, s.c - s.l, s.c - s.rl, s.lr - s.c, s.r - s.c, s.rr - s.c};
}

MembershipGrade membership_upper(const FuzzyScalar& s, double x) noexcept {
  return MembershipGrade(triangle(s.ll, s.c, s.rr, 1.0, x));
}

MembershipGrade membership_lower(const FuzzyScalar& s, double x) noexcept {
  return MembershipGrade(triangle(s.rl, s.c, s.lr, s.h, x));
}

}  // namespace fuzzycurve
