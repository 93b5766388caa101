#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tripack {

enum class ErrorCode {
  InvalidShape,
  InvalidPacking,
  SizeExceeded,
  InvalidGenerators,
  OrderTooSmall,
  OrderTooLarge,
  DecompositionNotFound,
  Timeout,
  MergeFailed,
  EdgesNotIndependent,
  EdgeNotOnTargetCycle,
  WrongColor,
  NoMatchingAvailable,
  Incomplete,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tripack
