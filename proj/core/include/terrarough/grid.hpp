#pragma once

#include <cmath>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "terrarough/pointcloud.hpp"

namespace terrarough {

inline constexpr double kNodata = std::numeric_limits<double>::quiet_NaN();
inline bool is_nodata(double v) { return std::isnan(v); }

/// Regular north-up raster. Row 0 is the northern edge; (x0, y0) is the
/// lower-left corner. Nodata cells hold NaN.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t nrows, std::size_t ncols, double x0, double y0, double cell,
       double fill = kNodata);

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  std::size_t size() const { return values_.size(); }
  double x0() const { return x0_; }
  double y0() const { return y0_; }
  double cell() const { return cell_; }

  double& operator()(std::size_t row, std::size_t col) { return values_[row * ncols_ + col]; }
  double operator()(std::size_t row, std::size_t col) const {
    return values_[row * ncols_ + col];
  }
  bool valid(std::size_t row, std::size_t col) const { return !is_nodata((*this)(row, col)); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  Point2 cell_center(std::size_t row, std::size_t col) const {
    return {x0_ + (static_cast<double>(col) + 0.5) * cell_,
            y0_ + (static_cast<double>(nrows_ - row) - 0.5) * cell_};
  }

  std::size_t valid_count() const;
  bool same_geometry(const Grid& other) const;
  /// A grid with this geometry and every cell set to `fill`.
  Grid like(double fill = kNodata) const { return {nrows_, ncols_, x0_, y0_, cell_, fill}; }

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  double x0_ = 0.0;
  double y0_ = 0.0;
  double cell_ = 1.0;
  std::vector<double> values_;
};

using DemGrid = Grid;

inline constexpr double kAsciiNodata = -9999.0;

/// Esri ASCII grid: header `ncols nrows xllcorner yllcorner cellsize
/// NODATA_value`, then rows north to south with 6 significant digits.
void write_ascii_grid(std::ostream& out, const Grid& grid);
Grid read_ascii_grid(std::istream& in);
void save_ascii_grid(const std::filesystem::path& path, const Grid& grid);
Grid load_ascii_grid(const std::filesystem::path& path);

}  // namespace terrarough
