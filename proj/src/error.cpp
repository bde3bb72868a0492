#include "chaoscert/error.hpp"

namespace chaoscert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainEscape: return "DomainEscape";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NoInteriorFixedPoint: return "NoInteriorFixedPoint";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EmptyPi: return "EmptyPi";
    case ErrorCode::InconsistentFormulation: return "InconsistentFormulation";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::SaturatedScan: return "SaturatedScan";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace chaoscert
