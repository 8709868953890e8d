#include "spatch/bezier.hh"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spatch/errors.hh"

namespace spatch {

namespace {

void require_curve(const BezierCurve& c) {
  if (c.ctrl.size() < 2) throw std::invalid_argument("bezier curve needs at least 2 control points");
}

void require_param(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("curve parameter " + std::to_string(t) + " outside [0,1]");
}

Point3 de_casteljau(std::vector<Point3> pts, double t) {
  for (std::size_t level = pts.size() - 1; level > 0; --level)
    for (std::size_t j = 0; j < level; ++j) pts[j] = (1.0 - t) * pts[j] + t * pts[j + 1];
  return pts[0];
}

}  // namespace

double bernstein(int degree, int j, double t) {
  if (j < 0 || j > degree) return 0.0;
  return binomial(degree, j) * std::pow(t, j) * std::pow(1.0 - t, degree - j);
}

Point3 bezier_eval(const BezierCurve& c, double t) {
  require_curve(c);
  require_param(t);
  return de_casteljau(c.ctrl, t);
}

Point3 bezier_derivative(const BezierCurve& c, double t) {
  require_curve(c);
  require_param(t);
  int d = c.degree();
  std::vector<Point3> diff(d);
  for (int j = 0; j < d; ++j) diff[j] = static_cast<double>(d) * (c.ctrl[j + 1] - c.ctrl[j]);
  if (diff.size() == 1) return diff[0];
  return de_casteljau(std::move(diff), t);
}

BezierCurve degree_elevate(const BezierCurve& c, int times) {
  require_curve(c);
  if (times < 0) throw std::invalid_argument("degree_elevate: negative count");
  BezierCurve out = c;
  for (int step = 0; step < times; ++step) {
    int d = out.degree();
    std::vector<Point3> next(d + 2);
    next[0] = out.ctrl[0];
    next[d + 1] = out.ctrl[d];
    for (int i = 1; i <= d; ++i) {
      double a = static_cast<double>(i) / (d + 1);
      next[i] = a * out.ctrl[i - 1] + (1.0 - a) * out.ctrl[i];
    }
    out.ctrl = std::move(next);
  }
  return out;
}

int Ribbon::degree() const {
  if (sides.empty()) return 0;
  return static_cast<int>(sides[0].outer.size()) - 1;
}

double Ribbon::bbox_diagonal() const {
  std::vector<Point3> all;
  for (const RibbonSide& s : sides) {
    all.insert(all.end(), s.outer.begin(), s.outer.end());
    all.insert(all.end(), s.inner.begin(), s.inner.end());
  }
  return bounding_box_diagonal(all);
}

namespace {

// Slot ids order rows as (side, position, row) so the smallest id in a
// shared class is the snapping source.
struct SlotMap {
  int n, d;
  int id(int side, int j, int row) const { return (side * (d + 1) + j) * 2 + row; }
  Point3& value(Ribbon& r, int slot) const {
    int row = slot % 2;
    int j = (slot / 2) % (d + 1);
    int side = slot / (2 * (d + 1));
    return row == 0 ? r.sides[side].outer[j] : r.sides[side].inner[j];
  }
};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RibbonValidation validate_ribbon(Ribbon& r, double tol) {
  int n = r.n();
  if (n < 3)
    throw ValidationError("malformed ribbon: needs at least 3 sides, got " + std::to_string(n));
  int d = r.degree();
  if (d < 1) throw ValidationError("malformed ribbon: side rows need at least 2 points");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(r.sides[i].outer.size()) != d + 1 ||
        static_cast<int>(r.sides[i].inner.size()) != d + 1)
      throw ValidationError("malformed ribbon: side " + std::to_string(i) +
                            " rows must hold " + std::to_string(d + 1) + " points");
  }

  RibbonValidation report;
  report.bbox_diagonal = r.bbox_diagonal();
  double scale = report.bbox_diagonal;

  SlotMap slots{n, d};
  struct Identity {
    const char* name;
    double RibbonValidation::* worst;
    int a_j, a_row, b_j, b_row;  // side i slot vs side i-1 slot
  };
  const Identity identities[] = {
      {"loop closure C[0,0] = C[d,0](prev)", &RibbonValidation::loop_closure, 0, 0, d, 0},
      {"twist C[1,1] = C[d-1,1](prev)", &RibbonValidation::twist, 1, 1, d - 1, 1},
      {"inner end C[1,0] = C[d,1](prev)", &RibbonValidation::inner_end, 1, 0, d, 1},
      {"inner start C[0,1] = C[d-1,0](prev)", &RibbonValidation::inner_start, 0, 1, d - 1, 0},
  };

  Dsu dsu(2 * n * (d + 1));
  for (const Identity& ident : identities) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      int prev = (i + n - 1) % n;
      int a = slots.id(i, ident.a_j, ident.a_row);
      int b = slots.id(prev, ident.b_j, ident.b_row);
      double dev = relative_to((slots.value(r, a) - slots.value(r, b)).norm(), scale);
      worst = std::max(worst, dev);
      if (dev > tol)
        report.violations.push_back(std::string(ident.name) + " violated between sides " +
                                    std::to_string(i) + " and " + std::to_string(prev) +
                                    " (deviation " + std::to_string(dev) + " rel)");
      dsu.merge(a, b);
    }
    report.*(ident.worst) = worst;
  }

  report.passed = report.violations.empty();
  if (!report.passed) return report;

  // Snap every shared class to its smallest slot's value.
  int total = 2 * n * (d + 1);
  std::vector<int> source(total, -1);
  for (int slot = 0; slot < total; ++slot) {
    int root = dsu.find(slot);
    if (source[root] < 0 || slot < source[root]) source[root] = slot;
  }
  for (int slot = 0; slot < total; ++slot) {
    int src = source[dsu.find(slot)];
    if (src != slot) slots.value(r, slot) = slots.value(r, src);
  }
  return report;
}

BoundaryFrame ribbon_boundary_frame(const Ribbon& r, int side, double t) {
  require_param(t);
  int n = r.n();
  side = ((side % n) + n) % n;
  const RibbonSide& s = r.sides[side];
  int d = r.degree();

  BoundaryFrame frame;
  BezierCurve outer{s.outer};
  frame.point = bezier_eval(outer, t);
  frame.tangent = bezier_derivative(outer, t);
  frame.cross = Point3::Zero();
  for (int j = 0; j <= d; ++j)
    frame.cross += bernstein(d, j, t) * (s.inner[j] - s.outer[j]);
  frame.cross *= static_cast<double>(d);
  return frame;
}

BezierTriangle::BezierTriangle(int depth) : index(3, depth), points(index.size(), Point3::Zero()) {}

Point3 bezier_triangle_eval(const BezierTriangle& tri, const std::array<double, 3>& bary) {
  double sum = bary[0] + bary[1] + bary[2];
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("triangle barycentric coordinates must sum to 1");
  for (double b : bary)
    if (b < -1e-12) throw std::invalid_argument("triangle barycentric coordinates must be non-negative");

  int depth = tri.index.depth();
  std::vector<Point3> cur = tri.points;
  for (int m = depth; m >= 2; --m) {
    LabelIndex hi(3, m), lo(3, m - 1);
    std::vector<Point3> next(lo.size());
    for (int o = 0; o < lo.size(); ++o) {
      Label base = lo.label(o);
      Point3 acc = Point3::Zero();
      for (int i = 0; i < 3; ++i) {
        Label up = base;
        ++up.s[i];
        acc += bary[i] * cur[hi.ordinal(up)];
      }
      next[o] = acc;
    }
    cur = std::move(next);
  }
  // last level: L_{3,1} holds the three unit labels in canonical order
  return bary[0] * cur[0] + bary[1] * cur[1] + bary[2] * cur[2];
}

}  // namespace spatch
