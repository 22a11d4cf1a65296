#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "terrarough/analysis.hpp"
#include "terrarough/error.hpp"

using namespace terrarough;

namespace {

Grid from_values(std::size_t rows, std::size_t cols, std::vector<double> v) {
  Grid g(rows, cols, 0, 0, 1);
  std::copy(v.begin(), v.end(), g.values().begin());
  return g;
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

PointCloud planar_cloud() {
  std::vector<Point3> pts;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int j = 0; j < 30; ++j) {
    for (int i = 0; i < 30; ++i) {
      const double x = (i + u(rng)) * 0.7, y = (j + u(rng)) * 0.7;
      pts.push_back({x, y, 0.2 * x - 0.1 * y});
    }
  }
  return PointCloud(std::move(pts));
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("normalize01") {
    Grid g = from_values(1, 4, {2, 4, kNodata, 6});
    const Grid n = normalize01(g);
    CHECK(n(0, 0) == 0.0);
    CHECK(n(0, 1) == 0.5);
    CHECK(std::isnan(n(0, 2)));
    CHECK(n(0, 3) == 1.0);
    const Grid c = normalize01(from_values(1, 2, {5, 5}));
    CHECK(c(0, 0) == 0.0);
    CHECK(c(0, 1) == 0.0);
    try {
      normalize01(Grid(2, 2, 0, 0, 1));
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::empty_map);
      CHECK(std::string(e.what()) == "empty map");
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Grid r = normalize01(oracle::random_dem(6, 9, seed));
      double lo = 1, hi = 0;
      for (double v : r.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      CHECK(lo == 0.0);
      CHECK(hi == 1.0);
    }
  }

  TEST_CASE("pearson hand examples") {
    const Grid a = from_values(2, 2, {1, 2, 3, 4});
    const Grid b = from_values(2, 2, {1, 3, 2, 4});
    const auto r = pearson(a, b);
    CHECK(std::abs(r.r - 0.8) < 1e-15);
    CHECK(r.n_pixels == 4);
    CHECK(pearson(a, a).r == 1.0);
    Grid lin = a, neg = a;
    for (double& v : lin.values()) v = 2 * v + 3;
    for (double& v : neg.values()) v = -v;
    CHECK(std::abs(pearson(a, lin).r - 1.0) < 1e-15);
    CHECK(std::abs(pearson(a, neg).r + 1.0) < 1e-15);
  }

  TEST_CASE("pearson errors") {
    const Grid a = from_values(2, 2, {1, 2, 3, 4});
    CHECK(kind_of([&] { pearson(a, Grid(2, 3, 0, 0, 1, 1.0)); }) == ErrorKind::dimension_mismatch);
    CHECK(kind_of([&] { pearson(a, Grid(2, 2, 0, 0, 1, 1.0)); }) == ErrorKind::undefined_correlation);
    const Grid sparse = from_values(2, 2, {1, kNodata, kNodata, kNodata});
    CHECK(kind_of([&] { pearson(a, sparse); }) == ErrorKind::undefined_correlation);
    try {
      pearson(a, Grid(3, 2, 0, 0, 1, 0.0));
    } catch (const Error& e) {
      CHECK(std::string(e.what()) == "dimension mismatch");
    }
  }

  TEST_CASE("pearson uses jointly valid pixels only") {
    const Grid a = from_values(1, 5, {1, 2, 3, 100, 4});
    const Grid b = from_values(1, 5, {2, 4, 6, kNodata, 8});
    const auto r = pearson(a, b);
    CHECK(r.n_pixels == 4);
    CHECK(std::abs(r.r - 1.0) < 1e-15);
  }

  TEST_CASE("pearson matches the oracle and is symmetric and affine invariant") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-5, 5);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      Grid a = oracle::random_dem(12, 9, seed), b = oracle::random_dem(12, 9, seed + 1000);
      for (std::size_t i = 0; i < a.size(); ++i) b.values()[i] += 0.5 * a.values()[i];
      if (seed % 4 == 0) a(3, 3) = kNodata;
      const double r = pearson(a, b).r;
      CHECK(std::abs(r - oracle::pearson(a, b)) < 1e-12);
      CHECK(pearson(b, a).r == r);
      double alpha = coef(rng);
      if (std::abs(alpha) < 0.1) alpha = 1.5;
      const double beta = coef(rng);
      Grid t = b;
      for (double& v : t.values()) v = alpha * v + beta;
      CHECK(std::abs(pearson(a, t).r - (alpha > 0 ? r : -r)) < 1e-12);
      CHECK(std::abs(pearson(normalize01(a), normalize01(b)).r - r) < 1e-12);
    }
  }

  TEST_CASE("report context strings") {
    CHECK(ReportContext{}.to_string().empty());
    ReportContext c{"flat_rough", 5, "natural_neighbour", "rmsh"};
    CHECK(c.to_string() == "terrain=flat_rough;w=5;method=natural_neighbour;descriptor=rmsh");
    ReportContext w;
    w.window = 7;
    CHECK(w.to_string() == "w=7");
  }

  TEST_CASE("descriptor comparison structure") {
    const Grid dem = oracle::random_dem(64, 64, 3);
    const auto report = descriptor_comparison(dem, WindowSpec(5));
    REQUIRE(report.entries.size() == 10);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : report.entries) {
      CHECK(e.label_a < e.label_b);
      CHECK(std::abs(e.r) <= 1.0);
      CHECK(e.n_pixels == 144);
      CHECK(seen.insert({e.label_a, e.label_b}).second);
    }
    CHECK(report.entries.front().label_a == "curvature_sd");
    CHECK(report.entries.front().label_b == "ldre");
    CHECK(report.entries.back().label_a == "rt");
    CHECK(report.entries.back().label_b == "slope_sd");
    CHECK(report.context.window == 5);

    const auto means = report.mean_by_label();
    REQUIRE(means.size() == 5);
    double rmsh_sum = 0;
    for (const auto& e : report.entries) {
      if (e.label_a == "rmsh" || e.label_b == "rmsh") rmsh_sum += e.r;
    }
    CHECK(std::abs(means.at("rmsh") - rmsh_sum / 4) < 1e-15);
    CHECK(report.find("slope_sd", "rt") == report.find("rt", "slope_sd"));
    CHECK(report.find("rmsh", "rmsh") == nullptr);
  }

  TEST_CASE("descriptor comparison entries match independent correlations") {
    const Grid dem = oracle::random_dem(40, 40, 9);
    const auto report = descriptor_comparison(dem, WindowSpec(5));
    for (const auto& e : report.entries) {
      const Grid a = oracle::roughness(dem, e.label_a, 5), b = oracle::roughness(dem, e.label_b, 5);
      CHECK(std::abs(e.r - oracle::pearson(a, b)) < 1e-9);
    }
    const auto again = descriptor_comparison(dem, WindowSpec(5));
    for (std::size_t i = 0; i < 10; ++i) CHECK(again.entries[i].r == report.entries[i].r);
  }

  TEST_CASE("scale sweep") {
    Grid dem = oracle::random_dem(60, 60, 4, 1.0, 0.2);
    for (std::size_t r = 0; r < 60; ++r) {
      for (std::size_t c = 0; c < 60; ++c) dem(r, c) += 5.0;
    }
    const std::vector<WindowSpec> two = {WindowSpec(5), WindowSpec(3)};
    const auto sweep = scale_sweep(dem, two);
    REQUIRE(sweep.reports.size() == 2);
    CHECK(sweep.reports[0].context.window == 3);
    CHECK(sweep.reports[1].context.window == 5);
    REQUIRE(sweep.ranges.size() == 10);
    for (const auto& pr : sweep.ranges) {
      CHECK(std::isfinite(pr.range()));
      CHECK(pr.range() >= 0.0);
      const double r3 = sweep.reports[0].find(pr.label_a, pr.label_b)->r;
      const double r5 = sweep.reports[1].find(pr.label_a, pr.label_b)->r;
      CHECK(pr.min_r == std::min(r3, r5));
      CHECK(pr.max_r == std::max(r3, r5));
    }
  }

  TEST_CASE("interpolation comparison") {
    std::vector<Point3> pts;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    std::normal_distribution<double> n(0, 0.3);
    for (int j = 0; j < 40; ++j) {
      for (int i = 0; i < 40; ++i) pts.push_back({(i + u(rng)) * 0.64, (j + u(rng)) * 0.64, n(rng)});
    }
    const PointCloud cloud(pts);
    const std::vector<InterpMethod> same = {InterpMethod::tin_linear, InterpMethod::tin_linear};
    const auto r1 = interpolation_comparison(cloud, same, Descriptor::rmsh, WindowSpec(3), 1.0);
    REQUIRE(r1.entries.size() == 1);
    CHECK(r1.entries[0].r == 1.0);
    CHECK(r1.context.descriptor == "rmsh");

    const std::vector<InterpMethod> all = {InterpMethod::natural_neighbour, InterpMethod::nearest_neighbour,
                                           InterpMethod::tin_linear};
    const auto r3 = interpolation_comparison(cloud, all, Descriptor::rt, WindowSpec(3), 1.0);
    REQUIRE(r3.entries.size() == 3);
    CHECK(r3.entries[0].label_a == "natural_neighbour");
    CHECK(r3.entries[0].label_b == "nearest_neighbour");
    CHECK(r3.entries[2].label_a == "nearest_neighbour");
    CHECK(r3.entries[2].label_b == "tin_linear");

    CHECK(kind_of([&] {
            interpolation_comparison(cloud, std::vector<InterpMethod>{InterpMethod::tin_linear}, Descriptor::rt,
                                     WindowSpec(3), 1.0);
          }) == ErrorKind::invalid_argument);
  }

  TEST_CASE("planar cloud: degenerate descriptors surface as undefined correlation") {
    const auto cloud = planar_cloud();
    const std::vector<InterpMethod> m = {InterpMethod::natural_neighbour, InterpMethod::tin_linear};
    CHECK(kind_of([&] { interpolation_comparison(cloud, m, Descriptor::ldre, WindowSpec(3), 1.0); }) ==
          ErrorKind::undefined_correlation);
    const Grid nn = rasterize(cloud, InterpMethod::natural_neighbour, 1.0);
    const Grid tin = rasterize(cloud, InterpMethod::tin_linear, 1.0);
    for (std::size_t i = 0; i < nn.size(); ++i) {
      if (!is_nodata(nn.values()[i])) CHECK(std::abs(nn.values()[i] - tin.values()[i]) < 1e-6);
    }
  }

  TEST_CASE("CSV output") {
    CorrelationReport report;
    report.context.terrain = "flat_smooth";
    report.context.window = 5;
    report.entries = {{"ldre", "rmsh", 0.123456789, 100}, {"rmsh", "rt", -1.0, 3}};
    std::ostringstream out;
    write_csv(out, report);
    CHECK(out.str() ==
          "context,label_a,label_b,r,n_pixels\n"
          "terrain=flat_smooth;w=5,ldre,rmsh,0.123457,100\n"
          "terrain=flat_smooth;w=5,rmsh,rt,-1.000000,3\n");

    SweepReport sweep;
    CorrelationReport a = report, b = report;
    b.context.window = 7;
    sweep.reports = {a, b};
    std::ostringstream s;
    write_csv(s, sweep);
    const std::string text = s.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.find("context,", 1) == std::string::npos);
  }
}
