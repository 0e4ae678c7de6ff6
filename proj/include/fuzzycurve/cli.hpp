#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuzzycurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Runs one command line (without the program name). Regular output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
///
/// Subcommands: pipeline, curve, plot, validate, demo.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzycurve::cli
