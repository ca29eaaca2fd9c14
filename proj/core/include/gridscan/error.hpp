#ifndef GRIDSCAN_ERROR_HPP
#define GRIDSCAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gridscan {

enum class ErrorCode {
  empty_dataset,
  dimension_mismatch,
  invalid_coordinate,
  out_of_domain,
  invalid_index,
  no_cells_kept,
  invalid_dimension,
  degenerate_covariance,
  parse_error,
  io_error,
  invalid_argument,
};

/// Library-wide error type. The code distinguishes data errors (bad input
/// files, malformed point clouds) from usage errors; the CLI maps them to
/// distinct exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

}  // namespace gridscan

#endif  // GRIDSCAN_ERROR_HPP
