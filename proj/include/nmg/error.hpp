#pragma once

#include <stdexcept>
#include <string>

namespace nmg {

enum class ErrorCode {
  InvalidArgument,
  NonconvergedQuadrature,
  PointNotOnBoundary,
  OverlappingRegions,
  RampTooWide,
  StalledStep,
  GraphsDifferOutsideWindow,
  WindowTooShort,
  EnvelopeViolated,
  DomainViolation,
  SolverFailed,
  PreconditionFailed,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace nmg
