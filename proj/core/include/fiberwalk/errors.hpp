#pragma once

#include <stdexcept>
#include <string>

namespace fiberwalk {

enum class ErrorCode {
  DimensionMismatch,
  UnboundedFiber,
  UnboundedRegion,
  EmptyInput,
  ZeroMove,
  PointNotInSet,
  TooLarge,
  SubsetViolation,
  CollinearMoves,
  NotReversible,
  NotInKernel,
  DecompositionFailure,
  ResourceLimit,
  EmptyMoveSet,
  NotAugmenting,
  SetMismatch,
  EmptySample,
  InvalidInstance,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// True for errors caused by resource caps or unbounded relaxations rather
/// than malformed input. The CLI maps these to a distinct exit code.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fiberwalk
