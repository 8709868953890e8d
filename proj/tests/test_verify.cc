#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "spatch/errors.hh"
#include "spatch/fill.hh"
#include "spatch/generator.hh"
#include "spatch/verify.hh"
#include "test_util.hh"

using namespace spatch;

TEST_SUITE_BEGIN("verify");

TEST_CASE("fresh g1 fill passes every check") {
  Ribbon r = make_ribbon({.n = 5, .degree = 5, .seed = 1});
  SPatchNet net = fill_g1(r);
  CheckReport report = run_checks(net, r);
  CHECK(report.pass);
  CHECK(report.c0_pass);
  CHECK(report.g1_pass);
  CHECK(report.panels_pass);
  CHECK(report.corner_pass);
  CHECK(report.corner_consistency < 1e-12);
  for (double dev : report.c0_per_side) CHECK(dev < 1e-11);
  for (const auto& side : report.panel_residuals)
    for (double res : side) CHECK(res < 1e-9);

  // determinism
  CheckReport again = run_checks(net, r);
  CHECK(report_json(report) == report_json(again));
}

TEST_CASE("planar ribbon gives numerically flat normals") {
  Ribbon r = make_ribbon({.n = 4, .degree = 3, .seed = 2, .amplitude = 0.0});
  SPatchNet net = fill_g1(r);
  CheckOptions opt;
  auto g1 = check_g1(net, r, opt);
  for (const G1SideReport& side : g1)
    for (double angle : side.max_angle) CHECK(angle < 1e-9);
}

TEST_CASE("angles shrink with the offset") {
  Ribbon r = make_ribbon({.n = 6, .degree = 5, .seed = 3});
  SPatchNet net = fill_g1(r);
  CheckOptions opt;
  auto g1 = check_g1(net, r, opt);
  for (const G1SideReport& side : g1) {
    REQUIRE(side.max_angle.size() == 2);
    CHECK(side.max_angle[1] < side.max_angle[0]);
    CHECK(side.degenerate == 0);
    // deviations shrink roughly linearly in the offset (factor 10 here)
    REQUIRE(side.shrink_ratio.size() == 1);
    CHECK(side.shrink_ratio[0] > 0.02);
    CHECK(side.shrink_ratio[0] < 0.5);
  }
}

TEST_CASE("c0-only fills fail the g1 probe") {
  Ribbon r = make_ribbon({.n = 5, .degree = 5, .seed = 4});
  SPatchNet c0net = solve_interior(fill_c0(r), MaskKind::Harmonic);
  CheckOptions opt;
  auto g1 = check_g1(c0net, r, opt);
  double worst = 0;
  for (const G1SideReport& side : g1) worst = std::max(worst, side.max_angle.back());
  CHECK(worst > 1e-2);
}

TEST_CASE("c0 deviations track perturbations") {
  Ribbon r = make_ribbon({.n = 5, .degree = 3, .seed = 5});
  SPatchNet net = fill_g1(r);
  std::vector<double> clean = check_c0(net, r, 33);
  for (double dev : clean) CHECK(dev < 1e-11);

  double scale = r.bbox_diagonal();
  net.point(boundary_label(2, 3, 5, net.depth())) += Point3(0.01 * scale, 0, 0);
  std::vector<double> dirty = check_c0(net, r, 33);
  CHECK(dirty[2] > 1e-3);
  CHECK(dirty[0] < 1e-11);  // other sides untouched
}

TEST_CASE("c0 depth contract") {
  Ribbon r = make_ribbon({.n = 4, .degree = 3, .seed = 6});
  SPatchNet wrong(4, 5);
  CHECK_THROWS_AS(check_c0(wrong, r, 10), ValidationError);

  // c0 fill compares against the unelevated rows
  SPatchNet c0net = solve_interior(fill_c0(r), MaskKind::Harmonic);
  std::vector<double> devs = check_c0(c0net, r, 25);
  for (double dev : devs) CHECK(dev < 1e-11);
}

TEST_CASE("panel residuals") {
  // three points always fit an affine frame exactly
  Ribbon tri = make_ribbon({.n = 3, .degree = 3, .seed = 7});
  SPatchNet tri_net = fill_g1(tri);
  for (const auto& side : check_panels(tri_net))
    for (double res : side) CHECK(res < 1e-12);

  Ribbon r = make_ribbon({.n = 5, .degree = 3, .seed = 8});
  SPatchNet net = fill_g1(r);
  auto clean = check_panels(net);
  for (const auto& side : clean)
    for (double res : side) CHECK(res < 1e-9);

  // perturbing one ring point shows up in the residuals
  Label ring = panel_labels(1, 2, 5, net.depth())[3];
  REQUIRE(classify_label(ring) == LabelClass::PanelRing);
  net.point(ring) += Point3(0, 0, 0.05 * r.bbox_diagonal());
  auto dirty = check_panels(net);
  double worst = 0;
  for (const auto& side : dirty)
    for (double res : side) worst = std::max(worst, res);
  CHECK(worst > 1e-3);
}

TEST_CASE("run_checks rejects mismatched inputs") {
  Ribbon r = make_ribbon({.n = 5, .degree = 3, .seed = 9});
  SPatchNet c0net = solve_interior(fill_c0(r), MaskKind::Harmonic);
  CheckOptions opt;
  opt.continuity = Continuity::G1;
  CHECK_THROWS_AS(run_checks(c0net, r, opt), ValidationError);

  opt.continuity = Continuity::C0;
  CheckReport report = run_checks(c0net, r, opt);
  CHECK(report.c0_pass);
  CHECK(report.pass);
}

TEST_CASE("report serialization carries the fixed keys") {
  Ribbon r = make_ribbon({.n = 4, .degree = 3, .seed = 10});
  SPatchNet net = fill_g1(r);
  CheckReport report = run_checks(net, r);
  auto j = nlohmann::json::parse(report_json(report));
  CHECK(j.at("n") == 4);
  CHECK(j.at("depth") == 6);
  CHECK(j.at("continuity") == "g1");
  CHECK(j.at("pass") == true);
  CHECK(j.at("c0").at("per_side").size() == 4);
  CHECK(j.at("g1").at("per_side").size() == 4);
  CHECK(j.at("g1").at("per_side")[0].contains("shrink_ratio"));
  CHECK(j.at("panels").at("per_panel").size() == 4);
  CHECK(j.at("corner_consistency").contains("worst"));
}

TEST_SUITE_END();
