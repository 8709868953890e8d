#pragma once

#include <array>
#include <string>
#include <vector>

#include "spatch/labels.hh"
#include "spatch/types.hh"

namespace spatch {

struct BezierCurve {
  std::vector<Point3> ctrl;

  int degree() const { return static_cast<int>(ctrl.size()) - 1; }
};

double bernstein(int degree, int j, double t);

Point3 bezier_eval(const BezierCurve&, double t);
Point3 bezier_derivative(const BezierCurve&, double t);

/// Repeated convex-combination elevation; traced curve is unchanged and
/// endpoints are preserved exactly.
BezierCurve degree_elevate(const BezierCurve&, int times);

struct RibbonSide {
  std::vector<Point3> outer;  // boundary row C_{j,0}
  std::vector<Point3> inner;  // cross-derivative row C_{j,1}
};

/// Boundary constraints around an n-sided hole: per side the two control
/// rows of a d x d tensor Bezier patch. A twist-compatible loop of these
/// (loop closure plus the three corner identities) is a Sabin net.
struct Ribbon {
  std::vector<RibbonSide> sides;

  int n() const { return static_cast<int>(sides.size()); }
  int degree() const;
  double bbox_diagonal() const;
};

struct RibbonValidation {
  bool passed = false;
  double bbox_diagonal = 0;
  // Worst deviations relative to the bounding-box diagonal, one per identity:
  double loop_closure = 0;  // C_{0,0}^i = C_{d,0}^{i-1}
  double twist = 0;         // C_{1,1}^i = C_{d-1,1}^{i-1}
  double inner_end = 0;     // C_{1,0}^i = C_{d,1}^{i-1}
  double inner_start = 0;   // C_{0,1}^i = C_{d-1,0}^{i-1}
  std::vector<std::string> violations;
};

/// Checks the structural shape plus the four sharing identities. On pass the
/// shared copies are snapped to a single representative (the one stored at
/// the lexicographically smallest (side, j, row) slot) so downstream math
/// sees exact equality.
RibbonValidation validate_ribbon(Ribbon&, double tol = 1e-9);

struct BoundaryFrame {
  Point3 point;
  Point3 tangent;
  Point3 cross;  // v-partial of the two-row tensor patch at v = 0
};

BoundaryFrame ribbon_boundary_frame(const Ribbon&, int side, double t);

/// Control net over L_{3,depth}; the three-sided evaluation oracle.
struct BezierTriangle {
  LabelIndex index;
  std::vector<Point3> points;  // canonical label order

  explicit BezierTriangle(int depth);
};

/// Triangular de Casteljau.
Point3 bezier_triangle_eval(const BezierTriangle&, const std::array<double, 3>& bary);

}  // namespace spatch
