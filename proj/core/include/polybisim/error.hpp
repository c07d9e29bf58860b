#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polybisim {

/// Failure categories surfaced to callers and mapped onto CLI exit codes.
enum class ErrorCode {
  kMalformed,       // unreadable or structurally invalid input
  kDimension,       // vector / matrix sizes disagree
  kRankDeficient,   // Lyapunov matrix L lacks full column rank
  kRhoRange,        // contraction rate outside (0, 1)
  kGammaOrder,      // gamma_D >= gamma_X, or non-positive levels
  kRegionOverlap,   // two observed regions intersect
  kRegionDomain,    // observed region not inside X \ D
  kParse,           // LTL syntax error
  kUnknownAtom,     // LTL atom not in the observation alphabet
  kOutsideDomain,   // point outside the working set
  kPrecondition,    // caller broke a documented precondition
  kContraction,     // the Lyapunov function failed certification
  kInvariant,       // internal invariant violated (a bug, or bad arithmetic)
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by the input rather than by the library.
  bool is_input_error() const noexcept {
    return code_ != ErrorCode::kInvariant && code_ != ErrorCode::kPrecondition;
  }

 private:
  ErrorCode code_;
};

}  // namespace polybisim
