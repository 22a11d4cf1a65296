#include "terrarough/error.hpp"

namespace terrarough {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::insufficient_points: return "insufficient points";
    case ErrorKind::degenerate_geometry: return "degenerate geometry";
    case ErrorKind::outside_hull: return "outside hull";
    case ErrorKind::window_exceeds_dem: return "window exceeds DEM";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::empty_map: return "empty map";
    case ErrorKind::undefined_correlation: return "undefined correlation";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::io: return "i/o error";
  }
  return "unknown error";
}

}  // namespace terrarough
