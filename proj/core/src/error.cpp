#include "gnoe/error.hpp"

namespace gnoe {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::OwnerMismatch: return "OwnerMismatch";
    case ErrorCode::UndefinedForKind: return "UndefinedForKind";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotRightRepresentable: return "NotRightRepresentable";
    case ErrorCode::QuotientNotConfigured: return "QuotientNotConfigured";
    case ErrorCode::RestrictionViolated: return "RestrictionViolated";
    case ErrorCode::PreconditionDegree: return "PreconditionDegree";
    case ErrorCode::LeadingCoeffNotInIdeal: return "LeadingCoeffNotInIdeal";
    case ErrorCode::PreimageUnavailable: return "PreimageUnavailable";
    case ErrorCode::UnsupportedRingClass: return "UnsupportedRingClass";
    case ErrorCode::UnsupportedMode: return "UnsupportedMode";
    case ErrorCode::UndecidableAtBound: return "UndecidableAtBound";
    case ErrorCode::OrientationFailure: return "OrientationFailure";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotAlgebraOverField: return "NotAlgebraOverField";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CoefficientParseError: return "CoefficientParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ContractViolation: return "ContractViolation";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDescriptor:
    case ErrorCode::SyntaxError:
    case ErrorCode::CoefficientParseError:
    case ErrorCode::ConfigError:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace gnoe
