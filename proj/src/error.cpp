#include "nmg/error.hpp"

namespace nmg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonconvergedQuadrature: return "NonconvergedQuadrature";
    case ErrorCode::PointNotOnBoundary: return "PointNotOnBoundary";
    case ErrorCode::OverlappingRegions: return "OverlappingRegions";
    case ErrorCode::RampTooWide: return "RampTooWide";
    case ErrorCode::StalledStep: return "StalledStep";
    case ErrorCode::GraphsDifferOutsideWindow: return "GraphsDifferOutsideWindow";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::EnvelopeViolated: return "EnvelopeViolated";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::SolverFailed: return "SolverFailed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace nmg
