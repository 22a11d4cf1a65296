#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "terrarough/pointcloud.hpp"

namespace terrarough {

/// Delaunay triangulation of a set of distinct 2-D sites.
///
/// Triangles are stored counter-clockwise with their smallest site index
/// first and are sorted lexicographically, so triangle numbering depends only
/// on the site indexing. `neighbors(t)[k]` is the triangle across the edge
/// opposite `triangle(t)[k]`, or `kNone` on the convex hull.
class Triangulation {
 public:
  using Index = std::int32_t;
  using Triple = std::array<Index, 3>;
  static constexpr Index kNone = -1;

  std::span<const Point2> sites() const { return sites_; }
  const Point2& site(Index i) const { return sites_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return triangles_.size(); }
  std::span<const Triple> triangles() const { return triangles_; }
  const Triple& triangle(std::size_t t) const { return triangles_[t]; }
  const Triple& neighbors(std::size_t t) const { return neighbors_[t]; }
  /// Some triangle incident to site `i`.
  Index incident_triangle(Index i) const { return incident_[static_cast<std::size_t>(i)]; }
  double span() const { return span_; }

 private:
  friend Triangulation delaunay(std::span<const Point2> sites);

  std::vector<Point2> sites_;
  std::vector<Triple> triangles_;
  std::vector<Triple> neighbors_;
  std::vector<Index> incident_;
  double span_ = 0.0;
};

/// Incremental Bowyer-Watson construction with exact predicates. Sites must be
/// pairwise distinct. Co-circular quadrilaterals take the diagonal whose
/// sorted index pair is lexicographically smaller.
Triangulation delaunay(std::span<const Point2> sites);
Triangulation delaunay(const PointCloud& cloud);

/// Returns a triangle whose closed region contains `q`, or nullopt outside the
/// hull. When several triangles contain `q` (edges, vertices) the lowest index
/// is returned. `hint` is where the walk starts.
std::optional<std::size_t> locate(const Triangulation& tri, Point2 q, std::size_t hint = 0);

/// True when `q` lies on a convex-hull edge of the triangulation.
bool on_hull_boundary(const Triangulation& tri, std::size_t containing, Point2 q);

struct SibsonWeights {
  std::vector<Triangulation::Index> contributors;  // ascending site index
  std::vector<double> weights;
};

/// Sibson natural-neighbour coordinates of `q`: the share of q's inserted
/// Voronoi cell taken from each neighbour's cell. `q` must lie strictly inside
/// the hull; a query exactly on a site returns that site with weight 1.
SibsonWeights sibson_weights(const Triangulation& tri, Point2 q);
SibsonWeights sibson_weights(const Triangulation& tri, Point2 q, std::size_t containing);

}  // namespace terrarough
