#pragma once

#include <vector>

#include "spatch/types.hh"

namespace spatch {

enum class CoordScheme { Wachspress, MeanValue };

/// Generalized barycentric coordinates: n non-negative weights summing to 1.
struct Barycentric {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }
  double sum() const;
};

/// Regular n-gon inscribed in the unit circle. Vertex k (0-based) sits at
/// angle 2*pi*(k+1)/n, so the last vertex is exactly (1, 0). Vertices are
/// counter-clockwise and indexed cyclically; side k runs from vertex k to
/// vertex k+1.
class DomainPolygon {
 public:
  explicit DomainPolygon(int n);

  int size() const { return n_; }
  const Point2& vertex(int k) const;

  /// (1-t) * vertex(side) + t * vertex(side+1); t must lie in [0,1].
  Point2 edge_point(int side, double t) const;

  Point2 inward_edge_normal(int side) const;

  /// Signed distance to the nearest edge line: positive inside.
  double min_edge_distance(const Point2& x) const;

  /// Closest point of the polygon boundary.
  Point2 nearest_boundary_point(const Point2& x) const;

  bool contains(const Point2& x) const;

  /// Points within 1e-12 of the boundary are snapped onto it; points
  /// farther outside are rejected.
  Point2 clamp_to_domain(const Point2& x) const;

  Barycentric barycentric(const Point2& x, CoordScheme scheme = CoordScheme::Wachspress) const;

 private:
  Barycentric wachspress(const Point2& x) const;
  Barycentric mean_value(const Point2& x) const;

  int n_ = 0;
  std::vector<Point2> vertices_;
  std::vector<double> corner_areas_;
};

}  // namespace spatch
