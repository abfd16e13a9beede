#include "fiberwalk/errors.hpp"

namespace fiberwalk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnboundedFiber: return "UnboundedFiber";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroMove: return "ZeroMove";
    case ErrorCode::PointNotInSet: return "PointNotInSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SubsetViolation: return "SubsetViolation";
    case ErrorCode::CollinearMoves: return "CollinearMoves";
    case ErrorCode::NotReversible: return "NotReversible";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::EmptyMoveSet: return "EmptyMoveSet";
    case ErrorCode::NotAugmenting: return "NotAugmenting";
    case ErrorCode::SetMismatch: return "SetMismatch";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundedFiber:
    case ErrorCode::UnboundedRegion:
    case ErrorCode::TooLarge:
    case ErrorCode::ResourceLimit:
      return true;
    default:
      return false;
  }
}

}  // namespace fiberwalk
