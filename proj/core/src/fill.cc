#include "spatch/fill.hh"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spatch/domain.hh"
#include "spatch/errors.hh"

namespace spatch {

namespace {

std::string fmt(const Point3& p) {
  return "(" + std::to_string(p.x()) + ", " + std::to_string(p.y()) + ", " +
         std::to_string(p.z()) + ")";
}

void require_compatible(const RibbonValidation& rep) {
  if (!rep.passed)
    throw ValidationError("ribbon is not twist-compatible: " + rep.violations.front());
}

}  // namespace

PartialNet::PartialNet(LabelIndex idx)
    : index(std::move(idx)),
      points(index.size(), Point3::Zero()),
      is_fixed(index.size(), 0) {}

int PartialNet::fixed_count() const {
  return static_cast<int>(std::count(is_fixed.begin(), is_fixed.end(), 1));
}

void PartialNet::fix(int ordinal, const Point3& p) {
  points[ordinal] = p;
  is_fixed[ordinal] = 1;
}

PartialNet fill_c0(Ribbon r, double tol) {
  RibbonValidation rep = validate_ribbon(r, tol);
  require_compatible(rep);
  const int n = r.n();
  const int d = r.degree();

  PartialNet net{LabelIndex(n, d)};
  net.scale = rep.bbox_diagonal;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= d; ++j)
      net.fix(net.index.ordinal(boundary_label(i, j, n, d)), r.sides[i].outer[j]);
  return net;
}

Point3 PanelFrame::at(const Point2& v) const { return m * Point3(v.x(), v.y(), 1.0); }

PanelFrame panel_frame(const Point3& p_last, const Point3& p_first, const Point3& p_second,
                       int n) {
  DomainPolygon poly(n);
  Eigen::Matrix3d a;
  const Point2& v0 = poly.vertex(n - 1);  // angle 0
  const Point2& v1 = poly.vertex(0);      // angle 2*pi/n
  const Point2& v2 = poly.vertex(1);      // angle 4*pi/n
  a << v0.x(), v0.y(), 1.0, v1.x(), v1.y(), 1.0, v2.x(), v2.y(), 1.0;
  if (std::abs(a.determinant()) < 1e-12)
    throw NumericalError("panel frame: singular vertex system");

  Eigen::Matrix3d b;
  b.row(0) = p_last.transpose();
  b.row(1) = p_first.transpose();
  b.row(2) = p_second.transpose();

  PanelFrame frame;
  frame.m = a.partialPivLu().solve(b).transpose();

  double scale = std::max({p_last.norm(), p_first.norm(), p_second.norm(), 1.0});
  double res = std::max({(frame.at(v0) - p_last).norm(), (frame.at(v1) - p_first).norm(),
                         (frame.at(v2) - p_second).norm()});
  if (res > 1e-9 * scale)
    throw NumericalError("panel frame does not reproduce its defining points");
  return frame;
}

std::vector<Point3> affine_complete(const Point3& p_last, const Point3& p_first,
                                    const Point3& p_second, int n) {
  PanelFrame frame = panel_frame(p_last, p_first, p_second, n);
  DomainPolygon poly(n);
  std::vector<Point3> out;
  out.reserve(std::max(0, n - 3));
  for (int e = 2; e <= n - 2; ++e) out.push_back(frame.at(poly.vertex(e)));
  return out;
}

PartialNet g1_panels(Ribbon r, double tol, PanelBuildInfo* info) {
  RibbonValidation rep = validate_ribbon(r, tol);
  require_compatible(rep);
  const int n = r.n();
  const int d = r.degree();
  const int depth = d + 3;

  PartialNet net{LabelIndex(n, depth)};
  net.scale = rep.bbox_diagonal;
  const double scale = rep.bbox_diagonal;

  std::vector<std::vector<Point3>> elevated(n);
  for (int i = 0; i < n; ++i)
    elevated[i] = degree_elevate(BezierCurve{r.sides[i].outer}, 3).ctrl;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= depth; ++j)
      net.fix(net.index.ordinal(boundary_label(i, j, n, depth)), elevated[i][j]);

  PanelBuildInfo local;
  PanelBuildInfo& track = info ? *info : local;
  track = {};

  // Panels of adjacent sides share labels around the corners; the first
  // writer (elevated boundary, then the lower side) wins, later values only
  // have to agree.
  auto place = [&](const Label& lab, const Point3& value) {
    int o = net.index.ordinal(lab);
    if (!net.is_fixed[o]) {
      net.fix(o, value);
      return;
    }
    ++track.overlap_checks;
    double dev = relative_to((net.points[o] - value).norm(), scale);
    if (dev > track.worst_corner_deviation) {
      track.worst_corner_deviation = dev;
      track.worst_label = lab.str();
    }
    if (dev > tol)
      throw ValidationError("inconsistent panel value at label " + lab.str() + ": kept " +
                            fmt(net.points[o]) + " vs recomputed " + fmt(value) +
                            ", deviation " + std::to_string(dev) +
                            " rel (non-Sabin input or transcription bug)");
  };

  const double c = -std::cos(2.0 * std::numbers::pi / n);
  const double lead = static_cast<double>(d) / (d + 3);

  for (int i = 0; i < n; ++i) {
    const std::vector<Point3>& outer = r.sides[i].outer;
    const std::vector<Point3>& inner = r.sides[i].inner;
    for (int j = 0; j <= depth - 1; ++j) {
      // Last panel point from the explicit formula; the delta gates keep
      // every row index of the original degree-d ribbon in range.
      Point3 acc = Point3::Zero();
      if (j >= 1 && j <= d)
        acc += (outer[j] - outer[j - 1]) * (2.0 * c * binomial(d - 1, j - 1));
      if (j >= 2 && j <= d + 1)
        acc += (outer[j - 1] - outer[j - 2]) * (4.0 * c * binomial(d - 1, j - 2));
      if (j >= 3 && j <= d + 2)
        acc += (outer[j - 2] - outer[j - 3]) * (2.0 * c * binomial(d - 1, j - 3));
      if (j <= d) acc += (inner[j] - outer[j]) * binomial(d, j);
      if (j >= 1 && j <= d + 1)
        acc += (inner[j - 1] - outer[j - 1]) * ((2.0 + 2.0 * c) * binomial(d, j - 1));
      if (j >= 2 && j <= d + 2) acc += (inner[j - 2] - outer[j - 2]) * binomial(d, j - 2);
      Point3 p_last = elevated[i][j] + acc * (lead / binomial(d + 2, j));

      std::vector<Label> labs = panel_labels(i, j, n, depth);
      place(labs[n - 1], p_last);
      std::vector<Point3> completed = affine_complete(p_last, elevated[i][j], elevated[i][j + 1], n);
      for (int e = 2; e <= n - 2; ++e) place(labs[e], completed[e - 2]);
    }
  }
  return net;
}

SPatchNet fill_g1(Ribbon r, MaskKind mask, double tol, PanelBuildInfo* info) {
  PartialNet partial = g1_panels(std::move(r), tol, info);
  return solve_interior(partial, mask);
}

}  // namespace spatch
