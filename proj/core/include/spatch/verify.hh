#pragma once

#include <string>
#include <vector>

#include "spatch/bezier.hh"
#include "spatch/domain.hh"
#include "spatch/fill.hh"
#include "spatch/spatch.hh"

namespace spatch {

enum class Continuity { C0, G1 };

struct CheckOptions {
  Continuity continuity = Continuity::G1;
  CoordScheme scheme = CoordScheme::Wachspress;
  int samples = 33;
  std::vector<double> offsets = {1e-2, 1e-3};  // inward domain offsets, largest first
  double tol = 1e-9;       // c0 / panel / corner tolerance, relative to bbox
  double g1_tol_rad = 2e-3;  // normal deviation cap at the smallest offset
};

struct G1SideReport {
  std::vector<double> max_angle;      // radians, one per offset
  std::vector<double> shrink_ratio;   // max_angle[k+1] / max_angle[k]
  int degenerate = 0;                 // samples skipped for a degenerate frame
};

struct CheckReport {
  int n = 0, depth = 0;
  Continuity continuity = Continuity::G1;
  double bbox_diagonal = 0;
  int samples = 0;

  std::vector<double> c0_per_side;  // max deviation relative to bbox
  bool c0_pass = false;

  std::vector<double> offsets;
  std::vector<G1SideReport> g1_per_side;
  bool g1_pass = false;

  std::vector<std::vector<double>> panel_residuals;  // [side][panel], relative
  bool panels_pass = false;

  double corner_consistency = 0;  // worst panel-overlap deviation, relative
  bool corner_pass = false;

  bool pass = false;
};

/// Max |net boundary curve - ribbon outer row| per side over `samples`
/// uniform parameters, relative to the ribbon bbox diagonal. Net depth must
/// equal the ribbon degree (C0 fill) or degree+3 (G1 fill; rows are elevated
/// before comparison).
std::vector<double> check_c0(const SPatchNet&, const Ribbon&, int samples);

/// Angle between the sampled surface normal just inside each boundary and
/// the ribbon frame normal, per side and inward offset. The finite
/// difference step is offset/10; orientation is sign-aligned before
/// measuring.
std::vector<G1SideReport> check_g1(const SPatchNet&, const Ribbon&, const CheckOptions&);

/// Least-squares affine fit of every boundary panel against the domain
/// polygon (element k at angle 2*k*pi/n); max point residual relative to the
/// net bbox diagonal.
std::vector<std::vector<double>> check_panels(const SPatchNet&);

CheckReport run_checks(const SPatchNet&, const Ribbon&, const CheckOptions& = {});

std::string report_json(const CheckReport&);

}  // namespace spatch
