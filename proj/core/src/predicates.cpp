#include "terrarough/predicates.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace terrarough::predicates {

namespace {

using boost::multiprecision::cpp_int;

// Static error bounds for the plain floating-point evaluation (Shewchuk 1997).
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccBound = (10.0 + 96.0 * kEps) * kEps;

// Maps a batch of doubles onto integers sharing one binary exponent so that
// every subsequent difference and product is exact.
template <std::size_t N>
std::array<cpp_int, N> to_scaled_integers(const std::array<double, N>& values) {
  std::array<std::int64_t, N> mantissa{};
  std::array<int, N> exponent{};
  int lowest = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < N; ++i) {
    if (values[i] == 0.0) continue;
    int e = 0;
    const double m = std::frexp(values[i], &e);
    mantissa[i] = static_cast<std::int64_t>(std::ldexp(m, 53));
    exponent[i] = e - 53;
    lowest = std::min(lowest, exponent[i]);
  }
  std::array<cpp_int, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    if (values[i] == 0.0) continue;
    out[i] = cpp_int(mantissa[i]) << (exponent[i] - lowest);
  }
  return out;
}

int sign_of(const cpp_int& v) { return v.sign(); }

int orient2d_exact(Point2 a, Point2 b, Point2 c) {
  const auto v = to_scaled_integers<6>({a.x, a.y, b.x, b.y, c.x, c.y});
  const cpp_int acx = v[0] - v[4];
  const cpp_int bcx = v[2] - v[4];
  const cpp_int acy = v[1] - v[5];
  const cpp_int bcy = v[3] - v[5];
  return sign_of(acx * bcy - acy * bcx);
}

int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
  const auto v = to_scaled_integers<8>({a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y});
  const cpp_int adx = v[0] - v[6], ady = v[1] - v[7];
  const cpp_int bdx = v[2] - v[6], bdy = v[3] - v[7];
  const cpp_int cdx = v[4] - v[6], cdy = v[5] - v[7];
  const cpp_int alift = adx * adx + ady * ady;
  const cpp_int blift = bdx * bdx + bdy * bdy;
  const cpp_int clift = cdx * cdx + cdy * cdy;
  const cpp_int det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                      clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::abs(detleft) + std::abs(detright);
  if (std::abs(det) > kCcwBound * detsum) return sign_of(det);
  return orient2d_exact(a, b, c);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  if (std::abs(det) > kIccBound * permanent) return sign_of(det);
  return incircle_exact(a, b, c, d);
}

}  // namespace terrarough::predicates
