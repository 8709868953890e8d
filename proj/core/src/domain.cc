#include "spatch/domain.hh"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "spatch/errors.hh"

namespace spatch {

namespace {

constexpr double kBoundaryTol = 1e-12;

double cross2(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

double triangle_area(const Point2& a, const Point2& b, const Point2& c) {
  return 0.5 * cross2(b - a, c - a);
}

}  // namespace

double Barycentric::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

DomainPolygon::DomainPolygon(int n) : n_(n) {
  if (n < 3)
    throw ValidationError("domain polygon needs at least 3 sides, got " + std::to_string(n));
  vertices_.reserve(n);
  for (int k = 0; k < n; ++k) {
    // reduce the angle first so the last vertex is exactly (1, 0)
    int m = (k + 1) % n;
    double theta = 2.0 * std::numbers::pi * m / n;
    vertices_.emplace_back(std::cos(theta), std::sin(theta));
  }
  corner_areas_.resize(n);
  for (int i = 0; i < n; ++i)
    corner_areas_[i] = triangle_area(vertex(i - 1), vertex(i), vertex(i + 1));
}

const Point2& DomainPolygon::vertex(int k) const { return vertices_[((k % n_) + n_) % n_]; }

Point2 DomainPolygon::edge_point(int side, double t) const {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("edge parameter " + std::to_string(t) + " outside [0,1]");
  return (1.0 - t) * vertex(side) + t * vertex(side + 1);
}

Point2 DomainPolygon::inward_edge_normal(int side) const {
  Point2 e = (vertex(side + 1) - vertex(side)).normalized();
  return {-e.y(), e.x()};
}

double DomainPolygon::min_edge_distance(const Point2& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_; ++i) {
    Point2 e = vertex(i + 1) - vertex(i);
    best = std::min(best, cross2(e, x - vertex(i)) / e.norm());
  }
  return best;
}

Point2 DomainPolygon::nearest_boundary_point(const Point2& x) const {
  Point2 best = vertex(0);
  double best_d2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_; ++i) {
    const Point2& a = vertex(i);
    Point2 e = vertex(i + 1) - a;
    double t = (x - a).dot(e) / e.squaredNorm();
    t = std::clamp(t, 0.0, 1.0);
    Point2 p = a + t * e;
    double d2 = (x - p).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = p;
    }
  }
  return best;
}

bool DomainPolygon::contains(const Point2& x) const {
  return min_edge_distance(x) >= -kBoundaryTol;
}

Point2 DomainPolygon::clamp_to_domain(const Point2& x) const {
  Point2 nearest = nearest_boundary_point(x);
  if ((x - nearest).norm() <= kBoundaryTol) return nearest;
  if (min_edge_distance(x) < -kBoundaryTol)
    throw ValidationError("point (" + std::to_string(x.x()) + ", " + std::to_string(x.y()) +
                          ") lies outside the domain polygon");
  return x;
}

Barycentric DomainPolygon::barycentric(const Point2& x, CoordScheme scheme) const {
  Point2 p = clamp_to_domain(x);
  return scheme == CoordScheme::Wachspress ? wachspress(p) : mean_value(p);
}

// Cleared-denominator form: w_i is the corner area at vertex i times the
// product of all edge-triangle areas not incident to vertex i. Vanishing
// edge areas on the boundary need no special-casing.
Barycentric DomainPolygon::wachspress(const Point2& x) const {
  std::vector<double> area(n_);
  for (int i = 0; i < n_; ++i) area[i] = triangle_area(x, vertex(i), vertex(i + 1));

  Barycentric out;
  out.values.resize(n_);
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    double w = corner_areas_[i];
    int skip_a = (i + n_ - 1) % n_;  // edges incident to vertex i
    for (int j = 0; j < n_; ++j) {
      if (j == i || j == skip_a) continue;
      w *= area[j];
    }
    out.values[i] = w;
    total += w;
  }
  for (double& v : out.values) v /= total;
  return out;
}

Barycentric DomainPolygon::mean_value(const Point2& x) const {
  Barycentric out;
  out.values.assign(n_, 0.0);

  // Kronecker coordinates at (or within 1e-12 of) a vertex.
  for (int i = 0; i < n_; ++i) {
    if ((x - vertex(i)).norm() <= kBoundaryTol) {
      out.values[i] = 1.0;
      return out;
    }
  }

  // Linear interpolation on (or within 1e-12 of) an edge; the half-angle
  // weights divide by distances that vanish there.
  for (int i = 0; i < n_; ++i) {
    const Point2& a = vertex(i);
    Point2 e = vertex(i + 1) - a;
    double t = (x - a).dot(e) / e.squaredNorm();
    if (t < -kBoundaryTol || t > 1.0 + kBoundaryTol) continue;
    double tc = std::clamp(t, 0.0, 1.0);
    if ((x - (a + tc * e)).norm() <= kBoundaryTol) {
      out.values[i] = 1.0 - tc;
      out.values[(i + 1) % n_] = tc;
      return out;
    }
  }

  std::vector<Point2> d(n_);
  std::vector<double> r(n_), half_tan(n_);
  for (int i = 0; i < n_; ++i) {
    d[i] = vertex(i) - x;
    r[i] = d[i].norm();
  }
  for (int i = 0; i < n_; ++i) {
    const Point2& di = d[i];
    const Point2& dj = d[(i + 1) % n_];
    half_tan[i] = cross2(di, dj) / (r[i] * r[(i + 1) % n_] + di.dot(dj));
  }
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    double w = (half_tan[(i + n_ - 1) % n_] + half_tan[i]) / r[i];
    out.values[i] = w;
    total += w;
  }
  for (double& v : out.values) v /= total;
  return out;
}

}  // namespace spatch
