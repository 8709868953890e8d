#pragma once

#include <Eigen/Core>
#include <vector>

namespace spatch {

using Point2 = Eigen::Vector2d;
using Point3 = Eigen::Vector3d;

/// Exact binomial coefficient as a double (exact for n <= 40).
double binomial(int n, int k);

double bounding_box_diagonal(const std::vector<Point3>& pts);

/// Deviation relative to a model scale; falls back to the absolute value
/// when the scale is degenerate.
inline double relative_to(double deviation, double scale) {
  return scale > 1e-300 ? deviation / scale : deviation;
}

}  // namespace spatch
