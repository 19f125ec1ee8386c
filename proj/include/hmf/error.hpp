#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmf {

enum class ErrorCode {
  ParseError,
  InvalidElement,
  ZeroPolynomial,
  DescriptorMismatch,
  NonpositiveWidth,
  NonUnitalAlgebra,
  NotPositive,
  NonpositiveEpsilon,
  ContextMismatch,
  IndexOutOfSystem,
  NotOrthogonal,
  SystemNotNormOne,
  HypothesisViolated,
  NotOrthonormal,
  ZeroWitness,
  UnknownId,
  BadParams,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NonpositiveWidth: return "NonpositiveWidth";
    case ErrorCode::NonUnitalAlgebra: return "NonUnitalAlgebra";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::IndexOutOfSystem: return "IndexOutOfSystem";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::SystemNotNormOne: return "SystemNotNormOne";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::ZeroWitness: return "ZeroWitness";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hmf
