#include "spatch/verify.hh"

#include <Eigen/Geometry>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "spatch/errors.hh"
#include "spatch/parallel.hh"

namespace spatch {

namespace {

using json = nlohmann::ordered_json;

int elevations_for(const SPatchNet& net, const Ribbon& r) {
  if (net.n() != r.n())
    throw ValidationError("check: net and ribbon disagree on the side count");
  int d = r.degree();
  if (net.depth() == d) return 0;
  if (net.depth() == d + 3) return 3;
  throw ValidationError("check: net depth " + std::to_string(net.depth()) +
                        " matches neither the ribbon degree " + std::to_string(d) +
                        " nor degree+3");
}

}  // namespace

std::vector<double> check_c0(const SPatchNet& net, const Ribbon& r, int samples) {
  int elevations = elevations_for(net, r);
  samples = std::max(2, samples);
  double scale = r.bbox_diagonal();

  std::vector<double> out(r.n(), 0.0);
  for (int i = 0; i < r.n(); ++i) {
    BezierCurve net_curve = boundary_curve(net, i);
    BezierCurve row = degree_elevate(BezierCurve{r.sides[i].outer}, elevations);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      double t = static_cast<double>(k) / (samples - 1);
      worst = std::max(worst, (bezier_eval(net_curve, t) - bezier_eval(row, t)).norm());
    }
    out[i] = relative_to(worst, scale);
  }
  return out;
}

std::vector<G1SideReport> check_g1(const SPatchNet& net, const Ribbon& r,
                                   const CheckOptions& opt) {
  DomainPolygon poly(net.n());
  int n = r.n();
  int samples = std::max(1, opt.samples);
  int n_offsets = static_cast<int>(opt.offsets.size());

  std::vector<G1SideReport> out(n);
  for (int i = 0; i < n; ++i) {
    // angle per (sample, offset); -1 marks a skipped degenerate sample
    std::vector<double> angles(static_cast<std::size_t>(samples) * n_offsets, -1.0);
    parallel_for(samples, [&](int k) {
      double t = static_cast<double>(k + 1) / (samples + 1);
      BoundaryFrame frame = ribbon_boundary_frame(r, i, t);
      Point3 reference = frame.tangent.cross(frame.cross);
      double denom = frame.tangent.norm() * frame.cross.norm();
      if (denom < 1e-300 || reference.norm() < 1e-12 * denom) return;
      reference.normalize();
      Point2 edge = poly.edge_point(i, t);
      Point2 inward = poly.inward_edge_normal(i);
      for (int e = 0; e < n_offsets; ++e) {
        double eps = opt.offsets[e];
        try {
          Point3 normal = sampled_normal(net, poly, edge + eps * inward, eps / 10.0, opt.scheme);
          // G1 compares tangent planes; align orientation before measuring
          double dot = std::abs(normal.dot(reference));
          angles[static_cast<std::size_t>(k) * n_offsets + e] =
              std::atan2(normal.cross(reference).norm(), dot);
        } catch (const NumericalError&) {
        }
      }
    });

    G1SideReport& side = out[i];
    side.max_angle.assign(n_offsets, 0.0);
    for (int k = 0; k < samples; ++k)
      for (int e = 0; e < n_offsets; ++e) {
        double a = angles[static_cast<std::size_t>(k) * n_offsets + e];
        if (a < 0)
          ++side.degenerate;
        else
          side.max_angle[e] = std::max(side.max_angle[e], a);
      }
    for (int e = 0; e + 1 < n_offsets; ++e)
      side.shrink_ratio.push_back(side.max_angle[e] > 1e-300
                                      ? side.max_angle[e + 1] / side.max_angle[e]
                                      : 0.0);
  }
  return out;
}

std::vector<std::vector<double>> check_panels(const SPatchNet& net) {
  const int n = net.n();
  const int depth = net.depth();
  DomainPolygon poly(n);
  double scale = bounding_box_diagonal(net.points());

  // Least-squares affine fit: panel element e corresponds to domain vertex e.
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  std::vector<Point3> h(n);
  for (int e = 0; e < n; ++e) {
    h[e] = Point3(poly.vertex(e).x(), poly.vertex(e).y(), 1.0);
    ata += h[e] * h[e].transpose();
  }
  Eigen::LDLT<Eigen::Matrix3d> solver(ata);

  std::vector<std::vector<double>> out(n, std::vector<double>(depth, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < depth; ++j) {
      std::vector<Label> labs = panel_labels(i, j, n, depth);
      Eigen::Matrix3d atb = Eigen::Matrix3d::Zero();
      for (int e = 0; e < n; ++e) atb += h[e] * net.point(labs[e]).transpose();
      Eigen::Matrix3d m = solver.solve(atb);
      double worst = 0.0;
      for (int e = 0; e < n; ++e)
        worst = std::max(worst, (m.transpose() * h[e] - net.point(labs[e])).norm());
      out[i][j] = relative_to(worst, scale);
    }
  return out;
}

CheckReport run_checks(const SPatchNet& net, const Ribbon& ribbon, const CheckOptions& opt) {
  Ribbon r = ribbon;
  RibbonValidation rep = validate_ribbon(r, opt.tol);
  if (!rep.passed)
    throw ValidationError("check: ribbon is not twist-compatible: " + rep.violations.front());

  CheckReport out;
  out.n = net.n();
  out.depth = net.depth();
  out.continuity = opt.continuity;
  out.bbox_diagonal = rep.bbox_diagonal;
  out.samples = opt.samples;

  int elevations = elevations_for(net, r);
  if (opt.continuity == Continuity::G1 && elevations != 3)
    throw ValidationError("check: a G1 net must have depth = ribbon degree + 3");
  if (opt.continuity == Continuity::C0 && elevations != 0)
    throw ValidationError("check: a C0 net must have depth = ribbon degree");

  out.c0_per_side = check_c0(net, r, opt.samples);
  out.c0_pass = *std::max_element(out.c0_per_side.begin(), out.c0_per_side.end()) <= opt.tol;
  out.pass = out.c0_pass;
  if (opt.continuity == Continuity::C0) return out;

  out.offsets = opt.offsets;
  out.g1_per_side = check_g1(net, r, opt);
  out.g1_pass = true;
  for (const G1SideReport& side : out.g1_per_side) {
    for (std::size_t e = 0; e + 1 < side.max_angle.size(); ++e) {
      // deviations must shrink with the offset unless already flat
      if (!(side.max_angle[e + 1] < side.max_angle[e] || side.max_angle[e] < 1e-9))
        out.g1_pass = false;
    }
    if (!side.max_angle.empty() && !(side.max_angle.back() < opt.g1_tol_rad)) out.g1_pass = false;
  }

  out.panel_residuals = check_panels(net);
  out.panels_pass = true;
  for (const auto& side : out.panel_residuals)
    for (double v : side)
      if (v > opt.tol) out.panels_pass = false;

  PanelBuildInfo info;
  g1_panels(r, 1e300, &info);  // measurement pass, tolerance disabled
  out.corner_consistency = info.worst_corner_deviation;
  out.corner_pass = out.corner_consistency <= opt.tol;

  out.pass = out.c0_pass && out.g1_pass && out.panels_pass && out.corner_pass;
  return out;
}

std::string report_json(const CheckReport& report) {
  json j;
  j["n"] = report.n;
  j["depth"] = report.depth;
  j["continuity"] = report.continuity == Continuity::G1 ? "g1" : "c0";
  j["bbox_diagonal"] = report.bbox_diagonal;
  j["samples"] = report.samples;
  j["c0"] = json{{"per_side", report.c0_per_side}, {"pass", report.c0_pass}};
  if (report.continuity == Continuity::G1) {
    json sides = json::array();
    for (const G1SideReport& side : report.g1_per_side)
      sides.push_back(json{{"max_angle_rad", side.max_angle},
                           {"shrink_ratio", side.shrink_ratio},
                           {"degenerate", side.degenerate}});
    j["g1"] = json{{"offsets", report.offsets}, {"per_side", std::move(sides)},
                   {"pass", report.g1_pass}};
    j["panels"] = json{{"per_panel", report.panel_residuals}, {"pass", report.panels_pass}};
    j["corner_consistency"] =
        json{{"worst", report.corner_consistency}, {"pass", report.corner_pass}};
  }
  j["pass"] = report.pass;
  return j.dump(2);
}

}  // namespace spatch
