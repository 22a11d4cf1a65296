#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace terrarough {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Point2 xy() const { return {x, y}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

struct BBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Scattered elevation samples. Coordinates are always finite; the bounding
/// box is recomputed whenever the point set is replaced.
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(std::vector<Point3> points);

  std::span<const Point3> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point3& operator[](std::size_t i) const { return points_[i]; }
  const BBox& bbox() const { return bbox_; }

 private:
  std::vector<Point3> points_;
  BBox bbox_;
};

/// z = a*x + b*y + c
struct Plane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double at(double x, double y) const { return a * x + b * y + c; }
};

enum class XyzFormat { csv, whitespace };

/// Parses XYZ text. Fields are separated by commas (csv) or blanks
/// (whitespace); extra fields are ignored, '#' lines are comments and a
/// single leading header line with a non-numeric first field is skipped.
PointCloud load_xyz(const std::filesystem::path& path, XyzFormat format);
PointCloud parse_xyz(std::istream& in, XyzFormat format);

/// Writes one "x y z" line per point with round-trip precision.
void write_xyz(std::ostream& out, const PointCloud& cloud, XyzFormat format = XyzFormat::whitespace);
void save_xyz(const std::filesystem::path& path, const PointCloud& cloud,
              XyzFormat format = XyzFormat::whitespace);

/// Least-squares plane on z. Coordinates are centred on the centroid before
/// the normal equations are formed.
Plane fit_plane(std::span<const Point3> points);
inline Plane fit_plane(const PointCloud& cloud) { return fit_plane(cloud.points()); }

/// Removes the plane and shifts elevations so that the minimum is exactly 0.
PointCloud detrend(const PointCloud& cloud, const Plane& plane);

/// Drops earlier samples sharing an (x, y) location with a later one. The
/// surviving points keep their relative order.
PointCloud dedup_xy(const PointCloud& cloud);

}  // namespace terrarough
