#include "gridscan/error.hpp"

namespace gridscan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_dataset: return "empty-dataset";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::invalid_coordinate: return "invalid-coordinate";
    case ErrorCode::out_of_domain: return "out-of-domain";
    case ErrorCode::invalid_index: return "invalid-index";
    case ErrorCode::no_cells_kept: return "no-cells-kept";
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::degenerate_covariance: return "degenerate-covariance";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace gridscan
