#pragma once

// JSON model documents.
//
//   {
//     "order": 3, "alpha": 0.8, "samples": 101,
//     "weights": [1, 1, 3, 1],
//     "knots": [0, 0, 0, 0.5, 1, 1, 1],
//     "points": [
//       {"x": {"ll": 0.4, "l": 0.6, "rl": 0.8, "c": 1, "lr": 1.15, "r": 1.3, "rr": 1.45, "h": 0.6},
//        "y": {"c": 1, "h": 0.6, "spreads": {"left": [0.5, 0.3, 0.2], "right": [0.1, 0.2, 0.4]}}},
//       ...
//     ]
//   }
//
// Every field except "points" is optional. Spreads are distances from c:
// "left" lists (outer, principal, inner), "right" lists (inner, principal, outer).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzycurve/curve_model.hpp"

namespace fuzzycurve {

inline constexpr int kDefaultOrder = 3;
inline constexpr double kDefaultAlpha = 0.8;

struct ModelDocument {
  std::vector<FuzzyPoint> points;
  std::vector<double> weights;  // empty means all ones
  int order = kDefaultOrder;
  double alpha = kDefaultAlpha;
  int samples = kDefaultSamples;
  std::optional<std::vector<double>> knots;
};

/// Error{ParseError} for malformed JSON or schema mismatches (the message
/// carries a byte offset or JSON path), Error{ValidationError} for records
/// whose values break a fuzzy-scalar invariant.
ModelDocument parse_document(std::string_view text);
/// Adds Error{IoError} for unreadable files.
ModelDocument load_document(const std::filesystem::path& path);

/// Error{ValidationError} naming the failed invariant.
FuzzyCurveModel build_model(const ModelDocument& doc);
FuzzyCurveModel load_model(const std::filesystem::path& path);

/// Points are written in explicit seven-value form.
std::string serialize_document(const ModelDocument& doc);
ModelDocument document_from_model(const FuzzyCurveModel& model, int samples = kDefaultSamples);

/// Four asymmetric control points, order 3, weights (1, 1, 3, 1), alpha 0.8,
/// lower-membership heights 0.6. Geometry is representative only.
ModelDocument demo_document();

}  // namespace fuzzycurve
