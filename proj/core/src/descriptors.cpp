#include "terrarough/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "terrarough/error.hpp"

namespace terrarough {

namespace {

// Reduces every complete tile of `field` with `reduce`, which receives the
// tile's row/column origin.
template <typename Reduce>
Grid tile_reduce(const Grid& field, int w, Reduce reduce) {
  const auto side = static_cast<std::size_t>(w);
  const std::size_t rows = field.nrows() / side;
  const std::size_t cols = field.ncols() / side;
  const double coarse = field.cell() * static_cast<double>(w);
  // Tiles hang from the northern edge, so any dropped rows are at the south.
  const double y0 =
      field.y0() + static_cast<double>(field.nrows() - rows * side) * field.cell();
  Grid out(rows, cols, field.x0(), y0, coarse);
  const auto nr = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
  for (long long tr = 0; tr < nr; ++tr) {
    for (std::size_t tc = 0; tc < cols; ++tc) {
      const auto v = reduce(static_cast<std::size_t>(tr) * side, tc * side);
      out(static_cast<std::size_t>(tr), tc) = v ? *v : kNodata;
    }
  }
  return out;
}

template <typename CellFn>
Grid map_cells(const Grid& dem, CellFn fn) {
  Grid out = dem.like();
  const auto nr = static_cast<long long>(dem.nrows());
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < nr; ++r) {
    const auto row = static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < dem.ncols(); ++c) {
      if (dem.valid(row, c)) out(row, c) = fn(row, c);
    }
  }
  return out;
}

}  // namespace

std::string_view name(Descriptor d) {
  switch (d) {
    case Descriptor::rmsh: return "rmsh";
    case Descriptor::ldre: return "ldre";
    case Descriptor::rt: return "rt";
    case Descriptor::slope_sd: return "slope_sd";
    case Descriptor::curvature_sd: return "curvature_sd";
  }
  return "unknown";
}

std::string_view units(Descriptor d) {
  switch (d) {
    case Descriptor::rmsh:
    case Descriptor::ldre:
    case Descriptor::rt: return "m";
    case Descriptor::slope_sd: return "degrees";
    case Descriptor::curvature_sd: return "1/m";
  }
  return "";
}

std::optional<Descriptor> parse_descriptor(std::string_view text) {
  if (text == "rmsh") return Descriptor::rmsh;
  if (text == "ldre") return Descriptor::ldre;
  if (text == "rt") return Descriptor::rt;
  if (text == "slope" || text == "slope_sd") return Descriptor::slope_sd;
  if (text == "curv" || text == "curvature" || text == "curvature_sd") {
    return Descriptor::curvature_sd;
  }
  return std::nullopt;
}

WindowSpec::WindowSpec(int size) : size_(size) {
  if (size < 3) throw Error(ErrorKind::invalid_argument, "window must be at least 3");
  if (size % 2 == 0) throw Error(ErrorKind::invalid_argument, "window must be odd");
}

std::optional<double> rmsh_window(std::span<const double> cells) {
  if (cells.size() < 2) return std::nullopt;
  double mean = 0.0;
  for (double v : cells) mean += v;
  mean /= static_cast<double>(cells.size());
  double ss = 0.0;
  for (double v : cells) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(cells.size() - 1));
}

std::optional<double> ldre_window(std::span<const Point3> cells) {
  if (cells.size() < 3) return std::nullopt;
  Plane plane;
  try {
    plane = fit_plane(cells);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<double> residuals;
  residuals.reserve(cells.size());
  for (const auto& p : cells) residuals.push_back(p.z - plane.at(p.x, p.y));
  return rmsh_window(residuals);
}

Stencil3x3 Stencil3x3::gather(const Grid& dem, std::size_t row, std::size_t col) {
  Stencil3x3 s;
  s.cell = dem.cell();
  const double center = dem(row, col);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      double v = center;
      const long long r = static_cast<long long>(row) + dr;
      const long long c = static_cast<long long>(col) + dc;
      if (r >= 0 && c >= 0 && r < static_cast<long long>(dem.nrows()) &&
          c < static_cast<long long>(dem.ncols())) {
        const double n = dem(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        if (!is_nodata(n)) v = n;
      }
      s.z[static_cast<std::size_t>((dr + 1) * 3 + (dc + 1))] = v;
    }
  }
  return s;
}

double Stencil3x3::dzdx() const {
  return ((z[2] + 2.0 * z[5] + z[8]) - (z[0] + 2.0 * z[3] + z[6])) / (8.0 * cell);
}

double Stencil3x3::dzdy() const {
  return ((z[6] + 2.0 * z[7] + z[8]) - (z[0] + 2.0 * z[1] + z[2])) / (8.0 * cell);
}

double Stencil3x3::slope_degrees() const {
  const double gx = dzdx(), gy = dzdy();
  return std::atan(std::sqrt(gx * gx + gy * gy)) * (180.0 / std::numbers::pi);
}

double Stencil3x3::curvature() const {
  const double l2 = cell * cell;
  const double d = ((z[3] + z[5]) / 2.0 - z[4]) / l2;
  const double e = ((z[1] + z[7]) / 2.0 - z[4]) / l2;
  return 2.0 * e + 2.0 * d;
}

Grid smooth_dem(const Grid& dem) {
  const auto nrows = static_cast<long long>(dem.nrows());
  const auto ncols = static_cast<long long>(dem.ncols());
  return map_cells(dem, [&](std::size_t row, std::size_t col) {
    double sum = 0.0;
    int count = 0;
    for (long long r = static_cast<long long>(row) - 2; r <= static_cast<long long>(row) + 2; ++r) {
      if (r < 0 || r >= nrows) continue;
      for (long long c = static_cast<long long>(col) - 2; c <= static_cast<long long>(col) + 2; ++c) {
        if (c < 0 || c >= ncols) continue;
        const double v = dem(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        if (is_nodata(v)) continue;
        sum += v;
        ++count;
      }
    }
    return sum / count;
  });
}

Grid residual_topography(const Grid& dem) {
  const Grid smooth = smooth_dem(dem);
  return map_cells(dem, [&](std::size_t r, std::size_t c) { return dem(r, c) - smooth(r, c); });
}

Grid slope_map(const Grid& dem) {
  return map_cells(dem, [&](std::size_t r, std::size_t c) {
    return Stencil3x3::gather(dem, r, c).slope_degrees();
  });
}

Grid curvature_map(const Grid& dem) {
  return map_cells(dem, [&](std::size_t r, std::size_t c) {
    return Stencil3x3::gather(dem, r, c).curvature();
  });
}

RoughnessMap roughness_map(const Grid& dem, Descriptor d, WindowSpec w) {
  const auto side = static_cast<std::size_t>(w.size());
  if (dem.nrows() < side || dem.ncols() < side) {
    throw Error(ErrorKind::window_exceeds_dem, "window exceeds DEM");
  }

  const auto tile_sd = [side](const Grid& field) {
    return [&field, side](std::size_t r0, std::size_t c0) -> std::optional<double> {
      std::vector<double> cells;
      cells.reserve(side * side);
      for (std::size_t r = r0; r < r0 + side; ++r) {
        for (std::size_t c = c0; c < c0 + side; ++c) {
          const double v = field(r, c);
          if (is_nodata(v)) return std::nullopt;
          cells.push_back(v);
        }
      }
      return rmsh_window(cells);
    };
  };

  Grid out;
  switch (d) {
    case Descriptor::rmsh:
      out = tile_reduce(dem, w.size(), tile_sd(dem));
      break;
    case Descriptor::ldre: {
      const double half = static_cast<double>(side - 1) / 2.0;
      out = tile_reduce(dem, w.size(), [&](std::size_t r0, std::size_t c0) -> std::optional<double> {
        std::vector<Point3> cells;
        cells.reserve(side * side);
        for (std::size_t r = 0; r < side; ++r) {
          for (std::size_t c = 0; c < side; ++c) {
            const double v = dem(r0 + r, c0 + c);
            if (is_nodata(v)) return std::nullopt;
            // Offsets in metres from the tile centre, y pointing north.
            cells.push_back({(static_cast<double>(c) - half) * dem.cell(),
                             (half - static_cast<double>(r)) * dem.cell(), v});
          }
        }
        return ldre_window(cells);
      });
      break;
    }
    case Descriptor::rt: {
      const Grid field = residual_topography(dem);
      out = tile_reduce(field, w.size(), tile_sd(field));
      break;
    }
    case Descriptor::slope_sd: {
      const Grid field = slope_map(dem);
      out = tile_reduce(field, w.size(), tile_sd(field));
      break;
    }
    case Descriptor::curvature_sd: {
      const Grid field = curvature_map(dem);
      out = tile_reduce(field, w.size(), tile_sd(field));
      break;
    }
  }
  // Tile deviations below the floating point resolution of the input are roundoff; report them as 0.
  double zmax = 0.0;
  for (double v : dem.values()) {
    if (!is_nodata(v)) zmax = std::max(zmax, std::abs(v));
  }
  double scale = 1.0;
  if (d == Descriptor::slope_sd) scale = (180.0 / std::numbers::pi) / dem.cell();
  if (d == Descriptor::curvature_sd) scale = 1.0 / (dem.cell() * dem.cell());
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * zmax * scale;
  for (std::size_t r = 0; r < out.nrows(); ++r) {
    for (std::size_t c = 0; c < out.ncols(); ++c) {
      if (!is_nodata(out(r, c)) && out(r, c) <= floor) out(r, c) = 0.0;
    }
  }
  return RoughnessMap{std::move(out), d, w, dem.cell()};
}

}  // namespace terrarough
