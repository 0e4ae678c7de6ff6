#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzycurve {

enum class ErrorKind {
  OrderingViolation,
  HeightOutOfRange,
  NonFiniteValue,
  NegativeSpread,
  SpreadOrderViolation,
  AlphaOutOfRange,
  OrderExceedsControlCount,
  InvalidOrder,
  InvalidWeight,
  InvalidKnots,
  SizeMismatch,
  ParameterOutOfDomain,
  TooFewSamples,
  SampleMismatch,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers what failed
/// and `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

  /// True for failures caused by data that breaks a model invariant, as
  /// opposed to unreadable input or I/O trouble.
  bool is_validation() const noexcept {
    return kind_ != ErrorKind::ParseError && kind_ != ErrorKind::IoError;
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fuzzycurve
