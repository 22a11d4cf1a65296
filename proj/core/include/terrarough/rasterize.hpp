#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "terrarough/geometry.hpp"
#include "terrarough/grid.hpp"
#include "terrarough/pointcloud.hpp"

namespace terrarough {

enum class InterpMethod { natural_neighbour, nearest_neighbour, tin_linear };

std::string_view name(InterpMethod method);
/// Accepts the canonical names and the short CLI forms natural|nearest|tin.
std::optional<InterpMethod> parse_interp_method(std::string_view text);

/// Grid covering `box` with ceil(span / cell) columns and rows, lower-left
/// corner at (xmin, ymin). All methods share this geometry.
Grid grid_geometry(const BBox& box, double cell);

/// Barycentric interpolation in the containing triangle; nullopt outside.
std::optional<double> tin_interp(const Triangulation& tri, std::span<const double> z, Point2 q);

/// Sibson interpolation; a query within 1e-9 m of a site returns its value
/// and a query on a hull edge interpolates linearly along it.
std::optional<double> natural_neighbour_interp(const Triangulation& tri,
                                               std::span<const double> z, Point2 q);

/// Uniform bucket grid sized to the mean point spacing. Distance ties go to
/// the lowest site index.
class NearestIndex {
 public:
  explicit NearestIndex(std::span<const Point2> sites);
  std::size_t nearest(Point2 q) const;

 private:
  std::span<const Point2> sites_;
  double x0_ = 0.0, y0_ = 0.0, bin_ = 1.0;
  std::size_t nx_ = 1, ny_ = 1;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> items_;
};

/// Interpolates cell-centre elevations. Duplicate (x, y) samples are reduced
/// to the last occurrence first. Cells outside the convex hull are nodata for
/// natural_neighbour and tin_linear.
Grid rasterize(const PointCloud& cloud, InterpMethod method, double cell);

}  // namespace terrarough
