#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfdim {

enum class ErrorCode {
  InvalidFrame,
  EmptyFocalElement,
  MassOutOfRange,
  SumNotOne,
  DuplicateFocalElement,
  IndexOutOfFrame,
  FrameTooLarge,
  NotCardinalitySymmetric,
  NotAFocalElement,
  InvalidDistribution,
  NegativeOrderUnsupported,
  DegenerateSupport,
  DegenerateFrame,
  ZeroDenominator,
  MassesNotNormalized,
  ParseError,
  UnknownLabel,
  InvalidArgument,
  UnknownTable,
  UnknownCommand,
  IoError,
};

/// Stable machine-readable name, e.g. "SumNotOne".
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mfdim
