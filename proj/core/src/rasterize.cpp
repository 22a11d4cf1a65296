#include "terrarough/rasterize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "terrarough/error.hpp"

namespace terrarough {

namespace {

constexpr double kCoincident = 1e-9;

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double tin_value(const Triangulation& tri, std::span<const double> z, std::size_t t, Point2 q) {
  const auto& v = tri.triangle(t);
  const Point2 a = tri.site(v[0]), b = tri.site(v[1]), c = tri.site(v[2]);
  const double area = cross(a, b, c);
  const double wa = cross(q, b, c) / area;
  const double wb = cross(q, c, a) / area;
  const double wc = cross(q, a, b) / area;
  return wa * z[static_cast<std::size_t>(v[0])] + wb * z[static_cast<std::size_t>(v[1])] +
         wc * z[static_cast<std::size_t>(v[2])];
}

std::optional<double> natural_value(const Triangulation& tri, std::span<const double> z,
                                    std::size_t t, Point2 q) {
  const auto& v = tri.triangle(t);
  for (auto s : v) {
    const Point2 p = tri.site(s);
    if (std::hypot(p.x - q.x, p.y - q.y) < kCoincident) return z[static_cast<std::size_t>(s)];
  }
  // On (or within 1e-9 m of) a hull edge the Sibson cell is unbounded; its
  // limit there is linear interpolation between the edge end points.
  const auto& n = tri.neighbors(t);
  for (int k = 0; k < 3; ++k) {
    if (n[static_cast<std::size_t>(k)] != Triangulation::kNone) continue;
    const auto ia = v[static_cast<std::size_t>((k + 1) % 3)];
    const auto ib = v[static_cast<std::size_t>((k + 2) % 3)];
    const Point2 a = tri.site(ia), b = tri.site(ib);
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (std::abs(cross(a, b, q)) / len <= kCoincident) {
      const double s = std::clamp(
          ((q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y)) / (len * len), 0.0, 1.0);
      return (1.0 - s) * z[static_cast<std::size_t>(ia)] + s * z[static_cast<std::size_t>(ib)];
    }
  }
  if (on_hull_boundary(tri, t, q)) return std::nullopt;
  const auto w = sibson_weights(tri, q, t);
  double value = 0.0;
  for (std::size_t i = 0; i < w.contributors.size(); ++i) {
    value += w.weights[i] * z[static_cast<std::size_t>(w.contributors[i])];
  }
  return value;
}

}  // namespace

std::string_view name(InterpMethod method) {
  switch (method) {
    case InterpMethod::natural_neighbour: return "natural_neighbour";
    case InterpMethod::nearest_neighbour: return "nearest_neighbour";
    case InterpMethod::tin_linear: return "tin_linear";
  }
  return "unknown";
}

std::optional<InterpMethod> parse_interp_method(std::string_view text) {
  if (text == "natural" || text == "natural_neighbour") return InterpMethod::natural_neighbour;
  if (text == "nearest" || text == "nearest_neighbour") return InterpMethod::nearest_neighbour;
  if (text == "tin" || text == "tin_linear") return InterpMethod::tin_linear;
  return std::nullopt;
}

Grid grid_geometry(const BBox& box, double cell) {
  if (!(cell > 0.0) || !std::isfinite(cell)) {
    throw Error(ErrorKind::invalid_argument, "cell size must be positive");
  }
  const auto count = [cell](double span) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / cell)));
  };
  return Grid(count(box.height()), count(box.width()), box.xmin, box.ymin, cell);
}

std::optional<double> tin_interp(const Triangulation& tri, std::span<const double> z, Point2 q) {
  const auto t = locate(tri, q);
  if (!t) return std::nullopt;
  return tin_value(tri, z, *t, q);
}

std::optional<double> natural_neighbour_interp(const Triangulation& tri,
                                               std::span<const double> z, Point2 q) {
  const auto t = locate(tri, q);
  if (!t) return std::nullopt;
  return natural_value(tri, z, *t, q);
}

NearestIndex::NearestIndex(std::span<const Point2> sites) : sites_(sites) {
  if (sites.empty()) throw Error(ErrorKind::insufficient_points, "insufficient points");
  double xmin = sites[0].x, xmax = sites[0].x, ymin = sites[0].y, ymax = sites[0].y;
  for (const auto& p : sites) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double w = xmax - xmin, h = ymax - ymin;
  const double area = std::max(w * h, 0.0);
  bin_ = area > 0.0 ? std::sqrt(area / static_cast<double>(sites.size()))
                    : std::max({w, h, 1.0}) / static_cast<double>(sites.size());
  if (!(bin_ > 0.0)) bin_ = 1.0;
  x0_ = xmin;
  y0_ = ymin;
  nx_ = std::max<std::size_t>(1, static_cast<std::size_t>(w / bin_) + 1);
  ny_ = std::max<std::size_t>(1, static_cast<std::size_t>(h / bin_) + 1);

  const auto bin_of = [&](const Point2& p) {
    const auto ix = std::min(nx_ - 1, static_cast<std::size_t>((p.x - x0_) / bin_));
    const auto iy = std::min(ny_ - 1, static_cast<std::size_t>((p.y - y0_) / bin_));
    return iy * nx_ + ix;
  };
  start_.assign(nx_ * ny_ + 1, 0);
  for (const auto& p : sites) ++start_[bin_of(p) + 1];
  for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
  items_.resize(sites.size());
  auto fill = start_;
  for (std::size_t i = 0; i < sites.size(); ++i) items_[fill[bin_of(sites[i])]++] = i;
}

std::size_t NearestIndex::nearest(Point2 q) const {
  const auto clamp_bin = [](double v, std::size_t n) -> long long {
    const double f = std::floor(v);
    if (f < 0.0) return 0;
    if (f >= static_cast<double>(n)) return static_cast<long long>(n) - 1;
    return static_cast<long long>(f);
  };
  const long long cx = clamp_bin((q.x - x0_) / bin_, nx_);
  const long long cy = clamp_bin((q.y - y0_) / bin_, ny_);
  const auto nx = static_cast<long long>(nx_), ny = static_cast<long long>(ny_);

  double best_d2 = std::numeric_limits<double>::infinity();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto visit = [&](long long ix, long long iy) {
    if (ix < 0 || iy < 0 || ix >= nx || iy >= ny) return;
    const auto b = static_cast<std::size_t>(iy * nx + ix);
    for (std::size_t k = start_[b]; k < start_[b + 1]; ++k) {
      const std::size_t i = items_[k];
      const double dx = sites_[i].x - q.x, dy = sites_[i].y - q.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2 || (d2 == best_d2 && i < best)) {
        best_d2 = d2;
        best = i;
      }
    }
  };

  const long long max_ring = std::max({cx, nx - 1 - cx, cy, ny - 1 - cy});
  for (long long r = 0; r <= max_ring; ++r) {
    if (r == 0) {
      visit(cx, cy);
    } else {
      for (long long ix = cx - r; ix <= cx + r; ++ix) {
        visit(ix, cy - r);
        visit(ix, cy + r);
      }
      for (long long iy = cy - r + 1; iy <= cy + r - 1; ++iy) {
        visit(cx - r, iy);
        visit(cx + r, iy);
      }
    }
    if (best == std::numeric_limits<std::size_t>::max()) continue;
    // Everything in ring r + 1 is at least this far from q.
    const double gap = std::min({q.x - (x0_ + static_cast<double>(cx - r) * bin_),
                                 x0_ + static_cast<double>(cx + r + 1) * bin_ - q.x,
                                 q.y - (y0_ + static_cast<double>(cy - r) * bin_),
                                 y0_ + static_cast<double>(cy + r + 1) * bin_ - q.y});
    if (gap > 0.0 && gap * gap > best_d2) break;
  }
  return best;
}

Grid rasterize(const PointCloud& cloud, InterpMethod method, double cell) {
  if (cloud.size() < 3) throw Error(ErrorKind::insufficient_points, "insufficient points");
  Grid grid = grid_geometry(cloud.bbox(), cell);
  const PointCloud sites_cloud = dedup_xy(cloud);

  std::vector<Point2> xy;
  std::vector<double> z;
  xy.reserve(sites_cloud.size());
  z.reserve(sites_cloud.size());
  for (const auto& p : sites_cloud.points()) {
    xy.push_back(p.xy());
    z.push_back(p.z);
  }

  const auto rows = static_cast<long long>(grid.nrows());
  if (method == InterpMethod::nearest_neighbour) {
    // Mirror the triangulation-based methods: degenerate clouds are rejected.
    (void)fit_plane(sites_cloud);
    const NearestIndex index(xy);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long r = 0; r < rows; ++r) {
      const auto row = static_cast<std::size_t>(r);
      for (std::size_t c = 0; c < grid.ncols(); ++c) {
        grid(row, c) = z[index.nearest(grid.cell_center(row, c))];
      }
    }
    return grid;
  }

  const Triangulation tri = delaunay(xy);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long r = 0; r < rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    std::size_t hint = 0;
    try {
      for (std::size_t c = 0; c < grid.ncols(); ++c) {
        const Point2 q = grid.cell_center(row, c);
        const auto t = locate(tri, q, hint);
        if (!t) continue;
        hint = *t;
        if (method == InterpMethod::tin_linear) {
          grid(row, c) = tin_value(tri, z, *t, q);
        } else if (const auto v = natural_value(tri, z, *t, q)) {
          grid(row, c) = *v;
        }
      }
    } catch (...) {
#pragma omp critical(terrarough_rasterize_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace terrarough
