#include "adiarank/errors.hpp"

namespace adiarank {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::invalid_param: return "InvalidParam";
    case ErrorCode::invalid_alpha: return "InvalidAlpha";
    case ErrorCode::invalid_personalization: return "InvalidPersonalization";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::insufficient_data: return "InsufficientData";
    case ErrorCode::s_out_of_range: return "SOutOfRange";
    case ErrorCode::size_cap: return "SizeCap";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::eigen_failure: return "EigenFailure";
    case ErrorCode::degenerate_ground: return "DegenerateGround";
    case ErrorCode::degenerate_scale: return "DegenerateScale";
    case ErrorCode::step_too_coarse: return "StepTooCoarse";
    case ErrorCode::singular_fit: return "SingularFit";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::usage: return "UsageError";
  }
  return "UnknownError";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::no_convergence:
    case ErrorCode::eigen_failure:
    case ErrorCode::step_too_coarse:
    case ErrorCode::degenerate_ground:
    case ErrorCode::singular_fit:
      return 3;
    case ErrorCode::io_error:
    case ErrorCode::parse_error:
      return 4;
    default:
      return 2;
  }
}

}  // namespace adiarank
