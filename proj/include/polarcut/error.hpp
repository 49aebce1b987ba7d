#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarcut {

enum class Errc {
  DimensionMismatch,
  EmptyEpigraph,
  ZeroCertificate,
  StrategyUnbounded,
  Unbounded,
  PreconditionViolated,
  InfeasibleCandidate,
  TooLarge,
  NotApplicable,
  NoIncumbent,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the toolkit; the code tells callers what failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace polarcut
