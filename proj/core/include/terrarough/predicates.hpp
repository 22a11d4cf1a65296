#pragma once

#include "terrarough/pointcloud.hpp"

namespace terrarough::predicates {

/// Sign of the orientation determinant: +1 if (a, b, c) turn counter-clockwise,
/// -1 if clockwise, 0 if collinear. Exact for all finite double inputs.
int orient2d(Point2 a, Point2 b, Point2 c);

/// +1 if d lies strictly inside the circle through the counter-clockwise
/// triangle (a, b, c), -1 if strictly outside, 0 if co-circular. Exact.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace terrarough::predicates
