#pragma once

#include <string>
#include <vector>

#include "spatch/bezier.hh"
#include "spatch/interior.hh"
#include "spatch/labels.hh"
#include "spatch/spatch.hh"

namespace spatch {

/// Control net with the constrained part assigned; the rest is left to the
/// interior solver.
struct PartialNet {
  LabelIndex index;
  std::vector<Point3> points;
  std::vector<char> is_fixed;
  double scale = 0;  // ribbon bounding-box diagonal, for relative checks

  explicit PartialNet(LabelIndex idx);

  int n() const { return index.n(); }
  int depth() const { return index.depth(); }
  int fixed_count() const;
  int free_count() const { return index.size() - fixed_count(); }
  void fix(int ordinal, const Point3& p);
};

/// Positional interpolation only: boundary labels take the outer rows,
/// everything else stays free. Depth equals the ribbon degree.
PartialNet fill_c0(Ribbon r, double tol = 1e-9);

struct PanelBuildInfo {
  double worst_corner_deviation = 0;  // relative to the ribbon bbox diagonal
  int overlap_checks = 0;
  std::string worst_label;
};

/// Affine frame of one boundary panel: maps homogeneous planar coordinates
/// (cos a, sin a, 1) to 3D. Solved from panel elements n, 1 and 2 at angles
/// 0, 2*pi/n and 4*pi/n; reproduces them to roundoff.
struct PanelFrame {
  Eigen::Matrix3d m;

  Point3 at(const Point2& domain_vertex) const;
};

PanelFrame panel_frame(const Point3& p_last, const Point3& p_first, const Point3& p_second,
                       int n);

/// Remaining panel points (elements 3..n-1) from the three defining ones.
std::vector<Point3> affine_complete(const Point3& p_last, const Point3& p_first,
                                    const Point3& p_second, int n);

/// Tangential-continuity constraints: depth rises to d+3, boundary labels
/// take the 3-times-elevated outer rows, and every boundary panel is filled
/// from its explicit last point plus affine completion. Panels of adjacent
/// sides overlap around corners; the independently computed values must
/// agree within tol (relative), and the first writer (elevated boundary,
/// then the lower side index) wins.
PartialNet g1_panels(Ribbon r, double tol = 1e-9, PanelBuildInfo* info = nullptr);

/// g1_panels followed by the interior solve.
SPatchNet fill_g1(Ribbon r, MaskKind mask = MaskKind::Biharmonic, double tol = 1e-9,
                  PanelBuildInfo* info = nullptr);

}  // namespace spatch
