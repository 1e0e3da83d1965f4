#pragma once

#include <stdexcept>
#include <string>

namespace adiarank {

enum class ErrorCode {
  invalid_config,
  invalid_param,
  invalid_alpha,
  invalid_personalization,
  size_mismatch,
  dimension_mismatch,
  insufficient_data,
  s_out_of_range,
  size_cap,
  no_convergence,
  eigen_failure,
  degenerate_ground,
  degenerate_scale,
  step_too_coarse,
  singular_fit,
  io_error,
  parse_error,
  usage,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Process exit code for the CLI: 2 usage/config, 3 numerical, 4 I/O.
int exit_code_for(ErrorCode c);

}  // namespace adiarank
