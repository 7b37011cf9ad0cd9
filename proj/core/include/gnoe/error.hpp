#ifndef GNOE_ERROR_HPP
#define GNOE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnoe {

enum class ErrorCode {
  InvalidDescriptor,
  OwnerMismatch,
  UndefinedForKind,
  NotInvertible,
  NotRightRepresentable,
  QuotientNotConfigured,
  RestrictionViolated,
  PreconditionDegree,
  LeadingCoeffNotInIdeal,
  PreimageUnavailable,
  UnsupportedRingClass,
  UnsupportedMode,
  UndecidableAtBound,
  OrientationFailure,
  BoundTooSmall,
  HypothesisViolated,
  NotAlgebraOverField,
  ZeroParameter,
  SyntaxError,
  CoefficientParseError,
  ConfigError,
  ContractViolation,
};

/// Stable identifier used in CLI output, e.g. "NotRightRepresentable".
std::string_view error_name(ErrorCode code) noexcept;

/// Input errors (parse, config, descriptor) as opposed to computation errors.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace gnoe

#endif  // GNOE_ERROR_HPP
