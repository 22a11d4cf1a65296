#include "terrarough/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "terrarough/error.hpp"
#include "terrarough/predicates.hpp"

namespace terrarough {

namespace {

using Index = Triangulation::Index;
using Triple = Triangulation::Triple;
using predicates::incircle;
using predicates::orient2d;

constexpr Index kGhost = -1;

inline int next(int k) { return k == 2 ? 0 : k + 1; }
inline int prev(int k) { return k == 0 ? 2 : k - 1; }

std::uint64_t hilbert_key(std::uint32_t x, std::uint32_t y) {
  constexpr std::uint32_t n = 1u << 16;
  std::uint64_t d = 0;
  for (std::uint32_t s = n / 2; s > 0; s /= 2) {
    const std::uint32_t rx = (x & s) > 0 ? 1u : 0u;
    const std::uint32_t ry = (y & s) > 0 ? 1u : 0u;
    d += static_cast<std::uint64_t>(s) * s * ((3u * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = n - 1 - x;
        y = n - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

// Insertion order along a Hilbert curve keeps point-location walks short. The
// order depends on coordinates only, never on input position.
std::vector<Index> spatial_order(std::span<const Point2> pts) {
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-300});
  const double scale = 65535.0 / span;
  std::vector<std::pair<std::uint64_t, Index>> keyed(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto qx = static_cast<std::uint32_t>((pts[i].x - xmin) * scale);
    const auto qy = static_cast<std::uint32_t>((pts[i].y - ymin) * scale);
    keyed[i] = {hilbert_key(std::min(qx, 65535u), std::min(qy, 65535u)),
                static_cast<Index>(i)};
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    const auto& a = pts[static_cast<std::size_t>(l.second)];
    const auto& b = pts[static_cast<std::size_t>(r.second)];
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  std::vector<Index> order(pts.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) order[i] = keyed[i].second;
  return order;
}

[[noreturn]] void throw_duplicate() {
  throw Error(ErrorKind::invalid_argument, "duplicate site in triangulation input");
}

// Mesh closed by ghost triangles (a, b, kGhost): every convex-hull edge b->a of
// a real triangle is matched by a ghost whose "circumcircle" is the open
// half-plane beyond that edge.
class Builder {
 public:
  explicit Builder(std::span<const Point2> pts) : pts_(pts) {}

  std::vector<Triple> run() {
    const auto order = spatial_order(pts_);
    const Index p0 = order[0];
    const Index p1 = order[1];
    if (pt(p0) == pt(p1)) throw_duplicate();
    std::size_t third = 2;
    while (third < order.size() && orient2d(pt(p0), pt(p1), pt(order[third])) == 0) {
      ++third;
    }
    if (third == order.size()) {
      throw Error(ErrorKind::degenerate_geometry, "degenerate geometry");
    }
    seed_triangle(p0, p1, order[third]);

    Index hint = 0;
    for (std::size_t k = 2; k < order.size(); ++k) {
      if (k == third) continue;
      insert(order[k], hint);
    }

    std::vector<Triple> out;
    out.reserve(tris_.size());
    for (const auto& t : tris_) {
      if (t.alive && t.v[2] != kGhost) out.push_back(t.v);
    }
    return out;
  }

 private:
  struct Tri {
    Triple v{};
    Triple n{};
    bool alive = true;
  };

  struct BoundaryEdge {
    Index a, b, outer;
  };

  const Point2& pt(Index i) const { return pts_[static_cast<std::size_t>(i)]; }
  bool is_ghost(Index t) const { return tris_[static_cast<std::size_t>(t)].v[2] == kGhost; }
  Tri& tri(Index t) { return tris_[static_cast<std::size_t>(t)]; }

  static bool strictly_between(const Point2& a, const Point2& b, const Point2& p) {
    if (a.x != b.x) return p.x > std::min(a.x, b.x) && p.x < std::max(a.x, b.x);
    return p.y > std::min(a.y, b.y) && p.y < std::max(a.y, b.y);
  }

  bool conflict(Index t, const Point2& p) {
    const auto& v = tri(t).v;
    if (v[2] == kGhost) {
      const int o = orient2d(pt(v[0]), pt(v[1]), p);
      return o > 0 || (o == 0 && strictly_between(pt(v[0]), pt(v[1]), p));
    }
    return incircle(pt(v[0]), pt(v[1]), pt(v[2]), p) > 0;
  }

  void seed_triangle(Index a, Index b, Index c) {
    if (orient2d(pt(a), pt(b), pt(c)) < 0) std::swap(b, c);
    // 0: real; 1..3: ghosts on edges (b,c), (c,a), (a,b).
    tris_.resize(4);
    tri(0) = {{a, b, c}, {1, 2, 3}, true};
    tri(1) = {{c, b, kGhost}, {3, 2, 0}, true};
    tri(2) = {{a, c, kGhost}, {1, 3, 0}, true};
    tri(3) = {{b, a, kGhost}, {2, 1, 0}, true};
    stamp_.assign(4, 0);
  }

  Index walk(Index start, const Point2& p) {
    Index t = start;
    const std::size_t limit = 4 * tris_.size() + 16;
    for (std::size_t step = 0; step < limit; ++step) {
      const auto& v = tri(t).v;
      bool moved = false;
      for (int i = 0; i < 3; ++i) {
        const int k = (i + static_cast<int>(step)) % 3;
        if (orient2d(pt(v[next(k)]), pt(v[prev(k)]), p) < 0) {
          t = tri(t).n[static_cast<std::size_t>(k)];
          moved = true;
          break;
        }
      }
      if (!moved || is_ghost(t)) return t;
    }
    return scan(p);
  }

  Index scan(const Point2& p) {
    for (std::size_t i = 0; i < tris_.size(); ++i) {
      const auto t = static_cast<Index>(i);
      if (!tris_[i].alive || is_ghost(t)) continue;
      const auto& v = tris_[i].v;
      if (orient2d(pt(v[0]), pt(v[1]), p) >= 0 && orient2d(pt(v[1]), pt(v[2]), p) >= 0 &&
          orient2d(pt(v[2]), pt(v[0]), p) >= 0) {
        return t;
      }
    }
    for (std::size_t i = 0; i < tris_.size(); ++i) {
      const auto t = static_cast<Index>(i);
      if (tris_[i].alive && is_ghost(t) && conflict(t, p)) return t;
    }
    throw Error(ErrorKind::degenerate_geometry, "point location failed");
  }

  void insert(Index site, Index& hint) {
    const Point2& p = pt(site);
    const Index start = walk(hint, p);
    if (!is_ghost(start)) {
      for (auto v : tri(start).v) {
        if (pt(v) == p) throw_duplicate();
      }
    }

    ++epoch_;
    cavity_.clear();
    boundary_.clear();
    cavity_.push_back(start);
    stamp_[static_cast<std::size_t>(start)] = epoch_;
    for (std::size_t i = 0; i < cavity_.size(); ++i) {
      const Index t = cavity_[i];
      for (int k = 0; k < 3; ++k) {
        const Index nb = tri(t).n[static_cast<std::size_t>(k)];
        if (stamp_[static_cast<std::size_t>(nb)] == epoch_) continue;
        if (conflict(nb, p)) {
          stamp_[static_cast<std::size_t>(nb)] = epoch_;
          cavity_.push_back(nb);
        } else {
          const auto& v = tri(t).v;
          boundary_.push_back({v[next(k)], v[prev(k)], nb});
        }
      }
    }

    // A cavity of k triangles is bounded by k + 2 edges: reuse the k slots.
    std::vector<Index>& ids = new_ids_;
    ids.clear();
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      if (i < cavity_.size()) {
        ids.push_back(cavity_[i]);
      } else {
        ids.push_back(static_cast<Index>(tris_.size()));
        tris_.emplace_back();
        stamp_.push_back(0);
      }
    }

    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      const auto& e = boundary_[i];
      Tri& nt = tri(ids[i]);
      nt.v = {e.a, e.b, site};
      nt.n = {kGhost, kGhost, e.outer};
      nt.alive = true;
      Tri& outer = tri(e.outer);
      for (int j = 0; j < 3; ++j) {
        const Index w = outer.v[static_cast<std::size_t>(j)];
        if (w != e.a && w != e.b) {
          outer.n[static_cast<std::size_t>(j)] = ids[i];
          break;
        }
      }
    }
    // Edge (b, p) of the triangle on (a, b) is shared with the triangle on
    // (b, c); edge (p, a) with the triangle on (z, a).
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      for (std::size_t j = 0; j < boundary_.size(); ++j) {
        if (boundary_[j].a == boundary_[i].b) tri(ids[i]).n[0] = ids[j];
        if (boundary_[j].b == boundary_[i].a) tri(ids[i]).n[1] = ids[j];
      }
    }
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      Tri& nt = tri(ids[i]);
      if (nt.v[0] == kGhost) {
        nt.v = {nt.v[1], nt.v[2], nt.v[0]};
        nt.n = {nt.n[1], nt.n[2], nt.n[0]};
      } else if (nt.v[1] == kGhost) {
        nt.v = {nt.v[2], nt.v[0], nt.v[1]};
        nt.n = {nt.n[2], nt.n[0], nt.n[1]};
      }
      if (nt.v[2] != kGhost) hint = ids[i];
    }
  }

  std::span<const Point2> pts_;
  std::vector<Tri> tris_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Index> cavity_;
  std::vector<BoundaryEdge> boundary_;
  std::vector<Index> new_ids_;
};

Triple canonical(Triple t) {
  if (t[1] < t[0] && t[1] < t[2]) return {t[1], t[2], t[0]};
  if (t[2] < t[0] && t[2] < t[1]) return {t[2], t[0], t[1]};
  return t;
}

std::uint64_t edge_key(Index a, Index b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::vector<Triple> build_adjacency(const std::vector<Triple>& tris) {
  std::unordered_map<std::uint64_t, Index> directed;
  directed.reserve(tris.size() * 3);
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      directed.emplace(edge_key(tris[t][next(k)], tris[t][prev(k)]), static_cast<Index>(t));
    }
  }
  std::vector<Triple> nbrs(tris.size());
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const auto it = directed.find(edge_key(tris[t][prev(k)], tris[t][next(k)]));
      nbrs[t][static_cast<std::size_t>(k)] =
          it == directed.end() ? Triangulation::kNone : it->second;
    }
  }
  return nbrs;
}

std::pair<Index, Index> sorted_pair(Index a, Index b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

// Flips co-circular diagonals towards the lexicographically smaller index
// pair. Every flip strictly decreases the sorted edge list, so this ends.
void resolve_cocircular(std::span<const Point2> pts, std::vector<Triple>& tris,
                        std::vector<Triple>& nbrs) {
  const auto P = [&](Index i) { return pts[static_cast<std::size_t>(i)]; };
  while (true) {
    std::vector<char> touched(tris.size(), 0);
    bool flipped = false;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      for (int k = 0; k < 3 && !touched[t]; ++k) {
        const Index u = nbrs[t][static_cast<std::size_t>(k)];
        if (u == Triangulation::kNone || static_cast<std::size_t>(u) < t ||
            touched[static_cast<std::size_t>(u)]) {
          continue;
        }
        const auto& tv = tris[t];
        const auto& uv = tris[static_cast<std::size_t>(u)];
        int j = 0;
        while (nbrs[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)] !=
               static_cast<Index>(t)) {
          ++j;
        }
        const Index a = tv[static_cast<std::size_t>(k)];
        const Index b = tv[static_cast<std::size_t>(next(k))];
        const Index c = tv[static_cast<std::size_t>(prev(k))];
        const Index w = uv[static_cast<std::size_t>(j)];
        if (sorted_pair(a, w) >= sorted_pair(b, c)) continue;
        if (incircle(P(a), P(b), P(c), P(w)) != 0) continue;
        tris[t] = {a, b, w};
        tris[static_cast<std::size_t>(u)] = {a, w, c};
        touched[t] = 1;
        touched[static_cast<std::size_t>(u)] = 1;
        flipped = true;
      }
    }
    if (!flipped) return;
    for (auto& t : tris) t = canonical(t);
    std::sort(tris.begin(), tris.end());
    nbrs = build_adjacency(tris);
  }
}

Point2 circumcenter_rel(Point2 a, Point2 b, Point2 c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double d = 2.0 * (bx * cy - by * cx);
  return {a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
}

Point2 minus(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace

Triangulation delaunay(std::span<const Point2> sites) {
  if (sites.size() < 3) {
    throw Error(ErrorKind::insufficient_points, "insufficient points");
  }
  for (const auto& p : sites) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorKind::invalid_argument, "site coordinates must be finite");
    }
  }

  Triangulation out;
  out.sites_.assign(sites.begin(), sites.end());
  auto tris = Builder(out.sites_).run();
  for (auto& t : tris) t = canonical(t);
  std::sort(tris.begin(), tris.end());
  auto nbrs = build_adjacency(tris);
  resolve_cocircular(out.sites_, tris, nbrs);

  out.incident_.assign(sites.size(), Triangulation::kNone);
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (auto v : tris[t]) {
      auto& slot = out.incident_[static_cast<std::size_t>(v)];
      if (slot == Triangulation::kNone) slot = static_cast<Index>(t);
    }
  }
  double xmin = sites[0].x, xmax = sites[0].x, ymin = sites[0].y, ymax = sites[0].y;
  for (const auto& p : sites) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  out.span_ = std::max(xmax - xmin, ymax - ymin);
  out.triangles_ = std::move(tris);
  out.neighbors_ = std::move(nbrs);
  return out;
}

Triangulation delaunay(const PointCloud& cloud) {
  std::vector<Point2> xy;
  xy.reserve(cloud.size());
  for (const auto& p : cloud.points()) xy.push_back(p.xy());
  return delaunay(xy);
}

namespace {

std::optional<std::size_t> walk_to(const Triangulation& tri, Point2 q, std::size_t start) {
  if (tri.size() == 0) return std::nullopt;
  std::size_t t = start < tri.size() ? start : 0;
  const std::size_t limit = 4 * tri.size() + 16;
  for (std::size_t step = 0; step < limit; ++step) {
    const auto& v = tri.triangle(t);
    bool moved = false;
    for (int i = 0; i < 3; ++i) {
      const int k = (i + static_cast<int>(step)) % 3;
      if (orient2d(tri.site(v[static_cast<std::size_t>(next(k))]),
                   tri.site(v[static_cast<std::size_t>(prev(k))]), q) < 0) {
        const Index nb = tri.neighbors(t)[static_cast<std::size_t>(k)];
        if (nb == Triangulation::kNone) return std::nullopt;
        t = static_cast<std::size_t>(nb);
        moved = true;
        break;
      }
    }
    if (!moved) return t;
  }
  for (std::size_t i = 0; i < tri.size(); ++i) {
    const auto& v = tri.triangle(i);
    if (orient2d(tri.site(v[0]), tri.site(v[1]), q) >= 0 &&
        orient2d(tri.site(v[1]), tri.site(v[2]), q) >= 0 &&
        orient2d(tri.site(v[2]), tri.site(v[0]), q) >= 0) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t lowest_around_vertex(const Triangulation& tri, std::size_t t, Index s) {
  std::size_t best = t;
  for (int dir = 0; dir < 2; ++dir) {
    std::size_t cur = t;
    while (true) {
      const auto& v = tri.triangle(cur);
      int j = 0;
      while (v[static_cast<std::size_t>(j)] != s) ++j;
      // dir 0 crosses edge (s, v[j+1]); dir 1 crosses edge (v[j+2], s).
      const int k = dir == 0 ? prev(j) : next(j);
      const Index nb = tri.neighbors(cur)[static_cast<std::size_t>(k)];
      if (nb == Triangulation::kNone || static_cast<std::size_t>(nb) == t) break;
      cur = static_cast<std::size_t>(nb);
      best = std::min(best, cur);
    }
  }
  return best;
}

}  // namespace

std::optional<std::size_t> locate(const Triangulation& tri, Point2 q, std::size_t hint) {
  const auto found = walk_to(tri, q, hint);
  if (!found) return std::nullopt;
  const std::size_t t = *found;
  const auto& v = tri.triangle(t);
  int zeros = 0;
  int edge = -1;
  for (int k = 0; k < 3; ++k) {
    if (orient2d(tri.site(v[static_cast<std::size_t>(next(k))]),
                 tri.site(v[static_cast<std::size_t>(prev(k))]), q) == 0) {
      ++zeros;
      edge = edge < 0 ? k : edge;
    }
  }
  if (zeros == 0) return t;
  if (zeros == 1) {
    const Index nb = tri.neighbors(t)[static_cast<std::size_t>(edge)];
    if (nb == Triangulation::kNone) return t;
    return std::min(t, static_cast<std::size_t>(nb));
  }
  for (int k = 0; k < 3; ++k) {
    if (tri.site(v[static_cast<std::size_t>(k)]) == q) {
      return lowest_around_vertex(tri, t, v[static_cast<std::size_t>(k)]);
    }
  }
  return t;
}

bool on_hull_boundary(const Triangulation& tri, std::size_t containing, Point2 q) {
  const auto& v = tri.triangle(containing);
  for (int k = 0; k < 3; ++k) {
    const auto& n = tri.neighbors(containing);
    if (n[static_cast<std::size_t>(k)] != Triangulation::kNone) continue;
    if (orient2d(tri.site(v[static_cast<std::size_t>(next(k))]),
                 tri.site(v[static_cast<std::size_t>(prev(k))]), q) == 0) {
      return true;
    }
  }
  // A hull vertex may be reached through a triangle without a hull edge.
  for (auto s : v) {
    if (tri.site(s) == q) {
      std::size_t cur = containing;
      while (true) {
        const auto& cv = tri.triangle(cur);
        int j = 0;
        while (cv[static_cast<std::size_t>(j)] != s) ++j;
        const Index nb = tri.neighbors(cur)[static_cast<std::size_t>(prev(j))];
        if (nb == Triangulation::kNone) return true;
        if (static_cast<std::size_t>(nb) == containing) return false;
        cur = static_cast<std::size_t>(nb);
      }
    }
  }
  return false;
}

SibsonWeights sibson_weights(const Triangulation& tri, Point2 q) {
  const auto t = locate(tri, q);
  if (!t) throw Error(ErrorKind::outside_hull, "outside hull");
  return sibson_weights(tri, q, *t);
}

SibsonWeights sibson_weights(const Triangulation& tri, Point2 q, std::size_t containing) {
  for (auto s : tri.triangle(containing)) {
    if (tri.site(s) == q) return {{s}, {1.0}};
  }
  if (on_hull_boundary(tri, containing, q)) {
    throw Error(ErrorKind::outside_hull, "outside hull");
  }

  // Bowyer-Watson cavity of q: triangles whose circumcircle strictly holds q.
  std::vector<std::size_t> cavity{containing};
  const auto in_cavity = [&](Index t) {
    return t != Triangulation::kNone &&
           std::find(cavity.begin(), cavity.end(), static_cast<std::size_t>(t)) !=
               cavity.end();
  };
  for (std::size_t i = 0; i < cavity.size(); ++i) {
    const auto& n = tri.neighbors(cavity[i]);
    for (auto nb : n) {
      if (nb == Triangulation::kNone || in_cavity(nb)) continue;
      const auto& v = tri.triangle(static_cast<std::size_t>(nb));
      if (incircle(tri.site(v[0]), tri.site(v[1]), tri.site(v[2]), q) > 0) {
        cavity.push_back(static_cast<std::size_t>(nb));
      }
    }
  }

  // Old Voronoi vertices, relative to q.
  std::vector<Point2> centers(cavity.size());
  for (std::size_t i = 0; i < cavity.size(); ++i) {
    const auto& v = tri.triangle(cavity[i]);
    centers[i] = circumcenter_rel(minus(tri.site(v[0]), q), minus(tri.site(v[1]), q),
                                  minus(tri.site(v[2]), q));
  }
  const auto center_of = [&](std::size_t t) {
    const auto it = std::find(cavity.begin(), cavity.end(), t);
    return centers[static_cast<std::size_t>(it - cavity.begin())];
  };

  std::vector<std::pair<Index, double>> stolen;
  std::vector<Point2> poly;
  for (std::size_t i = 0; i < cavity.size(); ++i) {
    const auto& v = tri.triangle(cavity[i]);
    const auto& n = tri.neighbors(cavity[i]);
    for (int k = 0; k < 3; ++k) {
      if (in_cavity(n[static_cast<std::size_t>(k)])) continue;
      // Boundary edge v_prev -> v; walk the fan of cavity triangles around v.
      const Index v_prev = v[static_cast<std::size_t>(next(k))];
      const Index site = v[static_cast<std::size_t>(prev(k))];
      const Point2 rp = minus(tri.site(v_prev), q);
      const Point2 rs = minus(tri.site(site), q);
      poly.clear();
      poly.push_back(circumcenter_rel({0.0, 0.0}, rp, rs));
      std::size_t cur = cavity[i];
      Index v_next = Triangulation::kNone;
      while (true) {
        poly.push_back(center_of(cur));
        const auto& cv = tri.triangle(cur);
        int j = 0;
        while (cv[static_cast<std::size_t>(j)] != site) ++j;
        const Index nb = tri.neighbors(cur)[static_cast<std::size_t>(prev(j))];
        if (!in_cavity(nb)) {
          v_next = cv[static_cast<std::size_t>(next(j))];
          break;
        }
        cur = static_cast<std::size_t>(nb);
      }
      poly.push_back(circumcenter_rel({0.0, 0.0}, rs, minus(tri.site(v_next), q)));

      double twice_area = 0.0;
      for (std::size_t m = 0; m < poly.size(); ++m) {
        const auto& p0 = poly[m];
        const auto& p1 = poly[(m + 1) % poly.size()];
        twice_area += p0.x * p1.y - p1.x * p0.y;
      }
      stolen.emplace_back(site, 0.5 * std::abs(twice_area));
    }
  }

  std::sort(stolen.begin(), stolen.end());
  double total = 0.0;
  for (const auto& s : stolen) total += s.second;
  SibsonWeights out;
  out.contributors.reserve(stolen.size());
  out.weights.reserve(stolen.size());
  for (const auto& s : stolen) {
    out.contributors.push_back(s.first);
    out.weights.push_back(s.second / total);
  }
  return out;
}

}  // namespace terrarough
