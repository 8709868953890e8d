#pragma once

#include <vector>

#include "spatch/bezier.hh"
#include "spatch/domain.hh"
#include "spatch/labels.hh"
#include "spatch/types.hh"

namespace spatch {

/// Multinomial coefficient depth! / prod(s_i!) of a label, exact in double
/// arithmetic for the supported depths.
double multinomial(const Label&);

/// Multinomial Bernstein basis function B_s^d(lambda), with 0^0 = 1.
double bernstein_basis(const Label&, const Barycentric&);

/// A complete multi-sided control net: one 3D point per label of L_{n,depth}.
class SPatchNet {
 public:
  SPatchNet(int n, int depth);
  SPatchNet(LabelIndex index, std::vector<Point3> points);

  int n() const { return index_.n(); }
  int depth() const { return index_.depth(); }
  int size() const { return index_.size(); }
  const LabelIndex& labels() const { return index_; }

  const std::vector<Point3>& points() const { return points_; }
  std::vector<Point3>& points() { return points_; }
  const Point3& point(int ordinal) const { return points_[ordinal]; }
  Point3& point(int ordinal) { return points_[ordinal]; }
  const Point3& point(const Label&) const;
  Point3& point(const Label&);

  /// sum of P_s * B_s^d(lambda) over all labels.
  Point3 eval(const Barycentric&) const;

 private:
  LabelIndex index_;
  std::vector<Point3> points_;
  std::vector<double> coeffs_;  // cached multinomials, canonical order
};

Point3 eval_at_domain_point(const SPatchNet&, const DomainPolygon&, const Point2& x,
                            CoordScheme scheme = CoordScheme::Wachspress);

/// The D+1 control points at boundary labels of the given side, in order;
/// the surface restricted to domain edge `side` is this Bezier curve.
BezierCurve boundary_curve(const SPatchNet&, int side);

/// Unit normal from central differences of the surface along the two planar
/// axes with step h. Requires x farther than 2h from the domain boundary.
Point3 sampled_normal(const SPatchNet&, const DomainPolygon&, const Point2& x, double h,
                      CoordScheme scheme = CoordScheme::Wachspress);

}  // namespace spatch
