#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace terrarough {

enum class ErrorKind {
  parse,
  insufficient_points,
  degenerate_geometry,
  outside_hull,
  window_exceeds_dem,
  invalid_argument,
  empty_map,
  undefined_correlation,
  dimension_mismatch,
  io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type thrown by the library. `kind()` lets callers (the CLI
/// in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace terrarough
