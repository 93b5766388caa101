#include "tripack/error.hpp"

namespace tripack {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidPacking: return "InvalidPacking";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::InvalidGenerators: return "InvalidGenerators";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DecompositionNotFound: return "DecompositionNotFound";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::MergeFailed: return "MergeFailed";
    case ErrorCode::EdgesNotIndependent: return "EdgesNotIndependent";
    case ErrorCode::EdgeNotOnTargetCycle: return "EdgeNotOnTargetCycle";
    case ErrorCode::WrongColor: return "WrongColor";
    case ErrorCode::NoMatchingAvailable: return "NoMatchingAvailable";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tripack
