#include "spatch/spatch.hh"

#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>
#include <string>

#include "spatch/errors.hh"

namespace spatch {

double multinomial(const Label& lab) {
  double acc = 1.0;
  int sum = 0;
  for (int e : lab.s) {
    sum += e;
    acc *= binomial(sum, e);
  }
  return acc;
}

double bernstein_basis(const Label& lab, const Barycentric& bary) {
  if (lab.n() != bary.size())
    throw std::invalid_argument("basis: label and coordinates disagree on n");
  double acc = multinomial(lab);
  for (int i = 0; i < lab.n(); ++i)
    for (int k = 0; k < lab.s[i]; ++k) acc *= bary[i];
  return acc;
}

SPatchNet::SPatchNet(int n, int depth) : SPatchNet(LabelIndex(n, depth), {}) {}

SPatchNet::SPatchNet(LabelIndex index, std::vector<Point3> points)
    : index_(std::move(index)), points_(std::move(points)) {
  if (points_.empty()) points_.assign(index_.size(), Point3::Zero());
  if (static_cast<int>(points_.size()) != index_.size())
    throw ValidationError("control net needs " + std::to_string(index_.size()) +
                          " points, got " + std::to_string(points_.size()));
  coeffs_.resize(index_.size());
  for (int o = 0; o < index_.size(); ++o) coeffs_[o] = multinomial(index_.label(o));
}

const Point3& SPatchNet::point(const Label& lab) const { return points_[index_.ordinal(lab)]; }

Point3& SPatchNet::point(const Label& lab) { return points_[index_.ordinal(lab)]; }

Point3 SPatchNet::eval(const Barycentric& bary) const {
  const int n = index_.n();
  const int d = index_.depth();
  if (bary.size() != n)
    throw std::invalid_argument("eval: expected " + std::to_string(n) + " coordinates, got " +
                                std::to_string(bary.size()));

  // powers[i * (d+1) + k] = lambda_i^k
  std::vector<double> powers(static_cast<std::size_t>(n) * (d + 1));
  for (int i = 0; i < n; ++i) {
    powers[static_cast<std::size_t>(i) * (d + 1)] = 1.0;
    for (int k = 1; k <= d; ++k)
      powers[static_cast<std::size_t>(i) * (d + 1) + k] =
          powers[static_cast<std::size_t>(i) * (d + 1) + k - 1] * bary[i];
  }

  Point3 acc = Point3::Zero();
  for (int o = 0; o < index_.size(); ++o) {
    double w = coeffs_[o];
    for (int i = 0; i < n; ++i)
      w *= powers[static_cast<std::size_t>(i) * (d + 1) + index_.entry(o, i)];
    acc += w * points_[o];
  }
  return acc;
}

Point3 eval_at_domain_point(const SPatchNet& net, const DomainPolygon& poly, const Point2& x,
                            CoordScheme scheme) {
  if (poly.size() != net.n())
    throw std::invalid_argument("eval: domain polygon and net disagree on n");
  return net.eval(poly.barycentric(x, scheme));
}

BezierCurve boundary_curve(const SPatchNet& net, int side) {
  int d = net.depth();
  BezierCurve out;
  out.ctrl.reserve(d + 1);
  for (int j = 0; j <= d; ++j)
    out.ctrl.push_back(net.point(boundary_label(side, j, net.n(), d)));
  return out;
}

Point3 sampled_normal(const SPatchNet& net, const DomainPolygon& poly, const Point2& x, double h,
                      CoordScheme scheme) {
  if (h <= 0.0) throw std::invalid_argument("sampled_normal: step must be positive");
  if (poly.min_edge_distance(x) <= 2.0 * h)
    throw ValidationError("sampled_normal: point closer than 2h to the domain boundary");

  Point2 ex(h, 0.0), ey(0.0, h);
  Point3 du = (eval_at_domain_point(net, poly, x + ex, scheme) -
               eval_at_domain_point(net, poly, x - ex, scheme)) /
              (2.0 * h);
  Point3 dv = (eval_at_domain_point(net, poly, x + ey, scheme) -
               eval_at_domain_point(net, poly, x - ey, scheme)) /
              (2.0 * h);
  Point3 cross = du.cross(dv);
  double denom = du.norm() * dv.norm();
  if (denom < 1e-300 || cross.norm() < 1e-12 * denom)
    throw NumericalError("degenerate surface normal at (" + std::to_string(x.x()) + ", " +
                         std::to_string(x.y()) + ")");
  return cross.normalized();
}

}  // namespace spatch
