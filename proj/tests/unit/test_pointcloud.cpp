#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "terrarough/error.hpp"
#include "terrarough/pointcloud.hpp"

using namespace terrarough;

namespace {

PointCloud parse(const std::string& text, XyzFormat fmt = XyzFormat::whitespace) {
  std::istringstream in(text);
  return parse_xyz(in, fmt);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected terrarough::Error");
  return ErrorKind::io;
}

PointCloud random_cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xy(0, 100), z(-5, 5);
  std::vector<Point3> pts(n);
  for (auto& p : pts) p = {xy(rng), xy(rng), z(rng)};
  return PointCloud(std::move(pts));
}

}  // namespace

TEST_SUITE("pointcloud") {
  TEST_CASE("three whitespace lines parse with their bounding box") {
    const auto c = parse("0 0 1\n1 0 2\n0 1 3\n");
    REQUIRE(c.size() == 3);
    CHECK(c[2] == Point3{0, 1, 3});
    CHECK(c.bbox() == BBox{0, 0, 1, 1});
  }

  TEST_CASE("empty input is rejected as insufficient") {
    std::istringstream in("");
    try {
      parse_xyz(in, XyzFormat::whitespace);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::insufficient_points);
      CHECK(std::string(e.what()) == "insufficient points");
    }
  }

  TEST_CASE("csv header row is skipped") {
    const std::string text = "x,y,z\n0,0,1\n2,0,2\n0,3,3\n1.5,1.5,4\n-1,2,-0.5\n";
    const auto c = parse(text, XyzFormat::csv);
    REQUIRE(c.size() == 5);
    const std::vector<Point3> expected = {{0, 0, 1}, {2, 0, 2}, {0, 3, 3}, {1.5, 1.5, 4}, {-1, 2, -0.5}};
    for (std::size_t i = 0; i < 5; ++i) CHECK(c[i] == expected[i]);
    CHECK(c.bbox() == BBox{-1, 0, 2, 3});
  }

  TEST_CASE("comments, blank lines and extra fields") {
    const auto c = parse("# survey\n\n1 2 3 9 9\n4 5 6\n# mid\n7 8 10 intensity\n");
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Point3{1, 2, 3});
    CHECK(c[2] == Point3{7, 8, 10});
  }

  TEST_CASE("bad line reports its line number") {
    try {
      parse("0 0 1\n1 0 2\n1 zz 3\n0 1 3\n");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(kind_of([] { parse("0 0 1\n1 0\n0 1 3\n"); }) == ErrorKind::parse);
  }

  TEST_CASE("non-finite coordinates are rejected") {
    CHECK_THROWS_AS(PointCloud({{0, 0, 0}, {1, 0, NAN}, {0, 1, 0}}), Error);
    CHECK_THROWS_AS(PointCloud({{0, 0, 0}, {INFINITY, 0, 1}, {0, 1, 0}}), Error);
  }

  TEST_CASE("write then parse reproduces the cloud exactly") {
    const auto c = random_cloud(200, 3);
    std::ostringstream out;
    write_xyz(out, c);
    const auto back = parse(out.str());
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(back[i] == c[i]);
  }

  TEST_CASE("fit_plane recovers an exact plane") {
    std::vector<Point3> pts;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double x = i * 1.3, y = j * 0.7 - 2;
        pts.push_back({x, y, 2 * x - y + 5});
      }
    }
    const Plane p = fit_plane(pts);
    CHECK(p.a == doctest::Approx(2).epsilon(1e-12));
    CHECK(std::abs(p.a - 2) < 1e-9);
    CHECK(std::abs(p.b + 1) < 1e-9);
    CHECK(std::abs(p.c - 5) < 1e-9);
  }

  TEST_CASE("fit_plane of the four-corner example matches normal-equation and grid-search oracles") {
    const std::vector<Point3> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
    const Plane p = fit_plane(pts);
    const auto ls = oracle::lstsq_plane(pts);
    CHECK(std::abs(p.a - ls[0]) < 1e-12);
    CHECK(std::abs(p.b - ls[1]) < 1e-12);
    CHECK(std::abs(p.c - ls[2]) < 1e-12);
    // The fitted plane beats every plane on a coarse grid around it.
    const auto sse = [&](double a, double b, double c) {
      double s = 0;
      for (const auto& q : pts) s += std::pow(q.z - a * q.x - b * q.y - c, 2);
      return s;
    };
    const double best = sse(p.a, p.b, p.c);
    for (double a = -1; a <= 1.001; a += 0.05) {
      for (double b = -1; b <= 1.001; b += 0.05) {
        for (double c = -1; c <= 1.001; c += 0.05) CHECK(sse(a, b, c) >= best - 1e-12);
      }
    }
    CHECK(std::abs(p.a - 0.5) < 1e-12);
    CHECK(std::abs(p.b - 0.5) < 1e-12);
    CHECK(std::abs(p.c + 0.25) < 1e-12);
  }

  TEST_CASE("constant field gives a flat plane") {
    const Plane p = fit_plane(std::vector<Point3>{{3, 1, 7}, {-2, 5, 7}, {10, -4, 7}, {0, 0, 7}});
    CHECK(std::abs(p.a) < 1e-12);
    CHECK(std::abs(p.b) < 1e-12);
    CHECK(std::abs(p.c - 7) < 1e-12);
  }

  TEST_CASE("degenerate inputs") {
    CHECK(kind_of([] { fit_plane(std::vector<Point3>{{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {5, 5, 0}}); }) ==
          ErrorKind::degenerate_geometry);
    CHECK(kind_of([] { fit_plane(std::vector<Point3>{{0, 0, 1}, {1, 1, 2}}); }) ==
          ErrorKind::insufficient_points);
    try {
      fit_plane(std::vector<Point3>{{1, 0, 1}, {1, 1, 2}, {1, 2, 3}});
    } catch (const Error& e) {
      CHECK(std::string(e.what()) == "degenerate geometry");
    }
  }

  TEST_CASE("fit_plane is accurate at large projected coordinates") {
    std::vector<Point3> pts;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double x = 512000.0 + i * 0.64, y = 4300000.0 + j * 0.64;
        pts.push_back({x, y, 0.01 * (x - 512000.0) - 0.02 * (y - 4300000.0) + 1500.0});
      }
    }
    const Plane p = fit_plane(pts);
    CHECK(std::abs(p.a - 0.01) < 1e-9);
    CHECK(std::abs(p.b + 0.02) < 1e-9);
  }

  TEST_CASE("fit_plane matches the QR oracle on random clouds") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto c = random_cloud(50, seed);
      const Plane p = fit_plane(c);
      std::vector<Point3> pts(c.points().begin(), c.points().end());
      const auto ls = oracle::lstsq_plane(pts);
      CHECK(std::abs(p.a - ls[0]) < 1e-10);
      CHECK(std::abs(p.b - ls[1]) < 1e-10);
      CHECK(std::abs(p.c - ls[2]) < 1e-8);
    }
  }

  TEST_CASE("fit_plane is translation equivariant in z") {
    const auto c = random_cloud(80, 9);
    std::vector<Point3> shifted(c.points().begin(), c.points().end());
    for (auto& p : shifted) p.z += 123.25;
    const Plane p0 = fit_plane(c), p1 = fit_plane(shifted);
    CHECK(std::abs(p1.a - p0.a) < 1e-9);
    CHECK(std::abs(p1.b - p0.b) < 1e-9);
    CHECK(std::abs(p1.c - p0.c - 123.25) < 1e-9);
  }

  TEST_CASE("detrend of exact plane and constant clouds is all zero") {
    std::vector<Point3> pts;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) pts.push_back({i * 1.0, j * 2.0, 2.0 * i - 2.0 * j + 5});
    }
    const PointCloud plane_cloud(pts);
    for (const auto& p : detrend(plane_cloud, fit_plane(plane_cloud)).points()) CHECK(std::abs(p.z) < 1e-9);

    const PointCloud flat({{0, 0, 7}, {1, 0, 7}, {0, 1, 7}, {3, 3, 7}});
    for (const auto& p : detrend(flat, Plane{0, 0, 7}).points()) CHECK(p.z == 0.0);
  }

  TEST_CASE("detrend properties on random clouds") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto c = random_cloud(120, seed);
      const Plane plane = fit_plane(c);
      const auto d = detrend(c, plane);
      REQUIRE(d.size() == c.size());
      double zmin = INFINITY;
      std::vector<double> in_res, out_z;
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(d[i].x == c[i].x);
        CHECK(d[i].y == c[i].y);
        zmin = std::min(zmin, d[i].z);
        in_res.push_back(c[i].z - plane.at(c[i].x, c[i].y));
        out_z.push_back(d[i].z);
      }
      CHECK(zmin == 0.0);
      CHECK(std::abs(oracle::sample_sd(in_res) - oracle::sample_sd(out_z)) < 1e-9);
      for (std::size_t i = 1; i < c.size(); ++i) {
        const double expected = (c[i].z - c[0].z) - (plane.at(c[i].x, c[i].y) - plane.at(c[0].x, c[0].y));
        CHECK(std::abs((d[i].z - d[0].z) - expected) < 1e-9);
      }
      // Refitting the detrended cloud finds no remaining trend.
      const Plane again = fit_plane(d);
      const double zr = 10.0, span = 100.0;
      CHECK(std::abs(again.a) <= 1e-9 * zr / span + 1e-15);
      CHECK(std::abs(again.b) <= 1e-9 * zr / span + 1e-15);
    }
  }

  TEST_CASE("dedup keeps only the last sample per location, in input order") {
    const PointCloud c({{0, 0, 1}, {1, 0, 2}, {0, 0, 3}, {0, 1, 4}, {1, 0, 5}});
    const auto d = dedup_xy(c);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == Point3{0, 0, 3});
    CHECK(d[1] == Point3{0, 1, 4});
    CHECK(d[2] == Point3{1, 0, 5});
  }
}
