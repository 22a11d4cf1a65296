#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "terrarough/error.hpp"
#include "terrarough/grid.hpp"

using namespace terrarough;

TEST_SUITE("rasterize") {
  TEST_CASE("cell centres run north to south by row") {
    const Grid g(3, 4, 10.0, 20.0, 2.0);
    CHECK(g.cell_center(0, 0) == Point2{11.0, 25.0});
    CHECK(g.cell_center(2, 3) == Point2{17.0, 21.0});
    CHECK(g.valid_count() == 0);
    CHECK_THROWS_AS(Grid(2, 2, 0, 0, 0.0), Error);
  }

  TEST_CASE("ASCII grid text layout") {
    Grid g(2, 3, 0.5, -1.0, 1.0);
    g(0, 0) = 1.0;
    g(0, 1) = -0.0;
    g(0, 2) = 1.0 / 3.0;
    g(1, 0) = 1234567.0;
    g(1, 2) = 2.5e-7;
    std::ostringstream out;
    write_ascii_grid(out, g);
    CHECK(out.str() ==
          "ncols 3\nnrows 2\nxllcorner 0.5\nyllcorner -1\ncellsize 1\nNODATA_value -9999\n"
          "1 0 0.333333\n1.23457e+06 -9999 2.5e-07\n");
  }

  TEST_CASE("ASCII grid round trip is stable after one write") {
    const Grid g = oracle::random_dem(9, 7, 4, 0.5);
    std::ostringstream first;
    write_ascii_grid(first, g);
    std::istringstream in(first.str());
    const Grid back = read_ascii_grid(in);
    CHECK(back.same_geometry(g));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(back.values()[i] - g.values()[i]) <= 5e-6 * 10);
    std::ostringstream second;
    write_ascii_grid(second, back);
    CHECK(second.str() == first.str());
  }

  TEST_CASE("ASCII grid reader variants and errors") {
    std::istringstream centred("ncols 2\nnrows 1\nxllcenter 1\nyllcenter 1\ncellsize 2\n5 -9999\n");
    const Grid g = read_ascii_grid(centred);
    CHECK(g.x0() == 0.0);
    CHECK(g.y0() == 0.0);
    CHECK(g(0, 0) == 5.0);
    CHECK(std::isnan(g(0, 1)));

    std::istringstream truncated("ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n1 2 3\n");
    CHECK_THROWS_AS(read_ascii_grid(truncated), Error);
    std::istringstream junk("ncols 2\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\n1 x\n");
    CHECK_THROWS_AS(read_ascii_grid(junk), Error);
  }
}
