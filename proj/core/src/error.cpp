#include "mfdim/error.hpp"

namespace mfdim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::EmptyFocalElement: return "EmptyFocalElement";
    case ErrorCode::MassOutOfRange: return "MassOutOfRange";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::DuplicateFocalElement: return "DuplicateFocalElement";
    case ErrorCode::IndexOutOfFrame: return "IndexOutOfFrame";
    case ErrorCode::FrameTooLarge: return "FrameTooLarge";
    case ErrorCode::NotCardinalitySymmetric: return "NotCardinalitySymmetric";
    case ErrorCode::NotAFocalElement: return "NotAFocalElement";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::NegativeOrderUnsupported: return "NegativeOrderUnsupported";
    case ErrorCode::DegenerateSupport: return "DegenerateSupport";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::MassesNotNormalized: return "MassesNotNormalized";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace mfdim
