#include "terrarough/pointcloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>

#include "terrarough/error.hpp"

namespace terrarough {

namespace {

BBox bbox_of(std::span<const Point3> points) {
  if (points.empty()) return {};
  BBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const auto& p : points) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, XyzFormat format) {
  std::vector<std::string_view> fields;
  if (format == XyzFormat::csv) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto begin = line.find_first_not_of(" \t\r", pos);
      if (begin == std::string_view::npos) break;
      auto end = line.find_first_of(" \t\r", begin);
      if (end == std::string_view::npos) end = line.size();
      fields.push_back(line.substr(begin, end - begin));
      pos = end;
    }
  }
  return fields;
}

bool parse_double(std::string_view field, double& value) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last && !field.empty();
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

PointCloud::PointCloud(std::vector<Point3> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorKind::invalid_argument, "point coordinates must be finite");
    }
  }
  bbox_ = bbox_of(points_);
}

PointCloud parse_xyz(std::istream& in, XyzFormat format) {
  std::vector<Point3> points;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    const auto fields = split_fields(body, format);
    double first = 0.0;
    if (!seen_data && !fields.empty() && !parse_double(fields[0], first)) {
      // header row
      seen_data = true;
      continue;
    }
    seen_data = true;

    if (fields.size() < 3) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": expected at least 3 fields (x, y, z)");
    }
    Point3 p;
    if (!parse_double(fields[0], p.x) || !parse_double(fields[1], p.y) ||
        !parse_double(fields[2], p.z)) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(line_no) + ": unparseable coordinate");
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(line_no) + ": non-finite coordinate");
    }
    points.push_back(p);
  }
  if (points.size() < 3) {
    throw Error(ErrorKind::insufficient_points, "insufficient points");
  }
  return PointCloud(std::move(points));
}

PointCloud load_xyz(const std::filesystem::path& path, XyzFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  return parse_xyz(in, format);
}

void write_xyz(std::ostream& out, const PointCloud& cloud, XyzFormat format) {
  const char sep = format == XyzFormat::csv ? ',' : ' ';
  std::string buffer;
  buffer.reserve(cloud.size() * 48);
  for (const auto& p : cloud.points()) {
    append_number(buffer, p.x);
    buffer.push_back(sep);
    append_number(buffer, p.y);
    buffer.push_back(sep);
    append_number(buffer, p.z);
    buffer.push_back('\n');
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

void save_xyz(const std::filesystem::path& path, const PointCloud& cloud, XyzFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  write_xyz(out, cloud, format);
}

Plane fit_plane(std::span<const Point3> points) {
  if (points.size() < 3) {
    throw Error(ErrorKind::insufficient_points, "insufficient points");
  }
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0, mz = 0.0;
  for (const auto& p : points) {
    mx += p.x;
    my += p.y;
    mz += p.z;
  }
  mx /= n;
  my /= n;
  mz /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0, sxz = 0.0, syz = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - mx;
    const double dy = p.y - my;
    const double dz = p.z - mz;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
    sxz += dx * dz;
    syz += dy * dz;
  }

  // With centred coordinates the 3x3 normal equations decouple: the
  // intercept row reduces to c = mean(z) - a*mean(x) - b*mean(y).
  const double det = sxx * syy - sxy * sxy;
  if (!(sxx > 0.0) || !(syy > 0.0) || !(det > 1e-12 * sxx * syy)) {
    throw Error(ErrorKind::degenerate_geometry, "degenerate geometry");
  }
  Plane plane;
  plane.a = (sxz * syy - syz * sxy) / det;
  plane.b = (syz * sxx - sxz * sxy) / det;
  plane.c = mz - plane.a * mx - plane.b * my;
  return plane;
}

PointCloud detrend(const PointCloud& cloud, const Plane& plane) {
  if (!std::isfinite(plane.a) || !std::isfinite(plane.b) || !std::isfinite(plane.c)) {
    throw Error(ErrorKind::invalid_argument, "plane coefficients must be finite");
  }
  std::vector<Point3> out(cloud.points().begin(), cloud.points().end());
  if (out.empty()) return PointCloud(std::move(out));
  for (auto& p : out) p.z = p.z - plane.at(p.x, p.y);
  const double lowest =
      std::min_element(out.begin(), out.end(), [](const Point3& l, const Point3& r) {
        return l.z < r.z;
      })->z;
  for (auto& p : out) p.z -= lowest;
  return PointCloud(std::move(out));
}

PointCloud dedup_xy(const PointCloud& cloud) {
  const auto pts = cloud.points();
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (pts[l].x != pts[r].x) return pts[l].x < pts[r].x;
    if (pts[l].y != pts[r].y) return pts[l].y < pts[r].y;
    return l < r;
  });
  std::vector<std::size_t> keep;
  keep.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const bool last_of_group = k + 1 == order.size() ||
                               pts[order[k + 1]].x != pts[order[k]].x ||
                               pts[order[k + 1]].y != pts[order[k]].y;
    if (last_of_group) keep.push_back(order[k]);
  }
  if (keep.size() == pts.size()) return cloud;
  std::sort(keep.begin(), keep.end());
  std::vector<Point3> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(pts[i]);
  return PointCloud(std::move(out));
}

}  // namespace terrarough
