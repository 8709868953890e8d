#include <random>

#include "doctest.h"
#include "spatch/errors.hh"
#include "spatch/fill.hh"
#include "spatch/generator.hh"
#include "spatch/interior.hh"
#include "test_util.hh"

using namespace spatch;
using test::random_point;

namespace {

// Dense |L| x |L| harmonic matrix, the brute-force reference.
Eigen::MatrixXi harmonic_matrix(const LabelIndex& index) {
  Eigen::MatrixXi h = Eigen::MatrixXi::Zero(index.size(), index.size());
  for (int o = 0; o < index.size(); ++o) {
    auto neighbors = label_neighbors(index.label(o));
    h(o, o) = -static_cast<int>(neighbors.size());
    for (const Label& nb : neighbors) h(o, index.ordinal(nb)) = 1;
  }
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("interior");

TEST_CASE("harmonic mask shape") {
  LabelIndex index(3, 2);
  Mask mask = harmonic_mask(Label({1, 1, 0}), index);
  CHECK(mask.weight_of(index.ordinal(Label({0, 2, 0}))) == 1);
  CHECK(mask.weight_of(index.ordinal(Label({0, 1, 1}))) == 1);
  CHECK(mask.weight_of(index.ordinal(Label({1, 0, 1}))) == 1);
  CHECK(mask.weight_of(index.ordinal(Label({2, 0, 0}))) == 1);
  CHECK(mask.weight_of(index.ordinal(Label({1, 1, 0}))) == -4);
  CHECK(mask.weights.size() == 5);

  // corner labels have exactly two neighbors
  Mask corner = harmonic_mask(Label({2, 0, 0}), index);
  CHECK(corner.weight_of(index.ordinal(Label({2, 0, 0}))) == -2);
  CHECK(corner.weights.size() == 3);
}

TEST_CASE("masks sum to zero everywhere") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 4}, {5, 8}, {6, 8}}) {
    LabelIndex index(n, d);
    for (int o = 0; o < index.size(); ++o) {
      Label lab = index.label(o);
      CHECK(harmonic_mask(lab, index).weight_sum() == 0);
      CHECK(biharmonic_mask(lab, index).weight_sum() == 0);
    }
  }
}

TEST_CASE("biharmonic equals harmonic of harmonic") {
  LabelIndex index(5, 8);
  Eigen::MatrixXi h = harmonic_matrix(index);
  Eigen::MatrixXi h2 = h * h;
  for (int o = 0; o < index.size(); ++o) {
    Mask mask = biharmonic_mask(index.label(o), index);
    int listed = 0;
    for (const auto& [k, w] : mask.weights) {
      CHECK(w == h2(o, k));
      ++listed;
    }
    int nonzero = 0;
    for (int k = 0; k < index.size(); ++k) nonzero += h2(o, k) != 0;
    CHECK(listed == nonzero);
  }
}

TEST_CASE("biharmonic center weight is valence^2 + valence") {
  LabelIndex index(5, 8);
  for (int o = 0; o < index.size(); o += 7) {
    Label lab = index.label(o);
    int valence = static_cast<int>(label_neighbors(lab).size());
    CHECK(biharmonic_mask(lab, index).weight_of(o) == valence * valence + valence);
  }
}

TEST_CASE("assembly") {
  // everything fixed: no equations
  PartialNet full{LabelIndex(3, 2)};
  for (int o = 0; o < full.index.size(); ++o) full.fix(o, Point3(o, 0, 0));
  CHECK(assemble(full, MaskKind::Harmonic).unknowns == 0);

  // the paper-scale case: 360 equations
  Ribbon r = make_ribbon({.n = 5, .degree = 5, .seed = 2});
  PartialNet partial = g1_panels(r);
  InteriorSystem sys = assemble(partial, MaskKind::Biharmonic);
  CHECK(sys.unknowns == 360);
  CHECK(sys.free_ordinals.size() == 360);

  // integer masks make the matrix exactly symmetric
  Eigen::MatrixXd a = sys.dense();
  CHECK((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0);
  Eigen::MatrixXd ah = assemble(partial, MaskKind::Harmonic).dense();
  CHECK((ah - ah.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("planar fixed data stays planar") {
  Ribbon r = make_ribbon({.n = 5, .degree = 4, .seed = 31, .amplitude = 0.0});
  PartialNet partial = g1_panels(r);
  Point3 normal = test::ribbon_plane_normal(r);
  Point3 origin = r.sides[0].outer.front();

  for (MaskKind kind : {MaskKind::Harmonic, MaskKind::Biharmonic}) {
    SPatchNet net = solve_interior(partial, kind);
    for (const Point3& p : net.points())
      CHECK(std::abs(normal.dot(p - origin)) < 1e-9 * partial.scale);
  }
}

TEST_CASE("label-affine data is reproduced where all shifts apply") {
  // For n = 3 every free label has strictly positive entries, so the mask's
  // first moment vanishes and A*s + b solves the system exactly.
  std::mt19937_64 rng(55);
  for (int depth : {6, 7, 8}) {
    LabelIndex index(3, depth);
    Eigen::Matrix3d a;
    for (int row = 0; row < 3; ++row) a.row(row) = random_point(rng).transpose();
    Point3 b = random_point(rng);
    auto affine = [&](const Label& lab) {
      return Point3(a * Point3(lab.s[0], lab.s[1], lab.s[2]) + b);
    };

    PartialNet partial{index};
    int free_total = 0;
    for (int o = 0; o < index.size(); ++o) {
      Label lab = index.label(o);
      if (classify_label(lab) == LabelClass::Free) {
        ++free_total;
        continue;
      }
      partial.fix(o, affine(lab));
    }
    REQUIRE(free_total > 0);

    for (MaskKind kind : {MaskKind::Harmonic, MaskKind::Biharmonic}) {
      SPatchNet net = solve_interior(partial, kind);
      double scale = bounding_box_diagonal(net.points());
      for (int o = 0; o < index.size(); ++o)
        CHECK((net.point(o) - affine(index.label(o))).norm() < 1e-9 * scale);
    }
  }
}

TEST_CASE("harmonic solve satisfies the discrete maximum principle") {
  LabelIndex index(5, 8);
  PartialNet partial{index};
  double lo = 1e300, hi = -1e300;
  for (int o = 0; o < index.size(); ++o) {
    Label lab = index.label(o);
    if (classify_label(lab) == LabelClass::Free) continue;
    double ramp = lab.s[0];  // monotone in the first entry
    partial.fix(o, Point3(lab.s[0], lab.s[1], ramp));
    lo = std::min(lo, ramp);
    hi = std::max(hi, ramp);
  }
  SPatchNet net = solve_interior(partial, MaskKind::Harmonic);
  for (const Point3& p : net.points()) {
    CHECK(p.z() >= lo - 1e-9);
    CHECK(p.z() <= hi + 1e-9);
  }
}

TEST_CASE("solve is deterministic and accurate") {
  Ribbon r = make_ribbon({.n = 5, .degree = 5, .seed = 4});
  PartialNet partial = g1_panels(r);

  SolveStats stats1, stats2;
  SPatchNet first = solve_interior(partial, MaskKind::Biharmonic, &stats1);
  SPatchNet second = solve_interior(partial, MaskKind::Biharmonic, &stats2);
  CHECK(stats1.max_residual < 1e-9);
  CHECK_FALSE(stats1.iterative);
  for (int o = 0; o < first.size(); ++o) CHECK(first.point(o) == second.point(o));  // bit-identical
}

TEST_CASE("iterative path agrees with the direct one") {
  Ribbon r = make_ribbon({.n = 5, .degree = 5, .seed = 6});
  PartialNet partial = g1_panels(r);
  for (MaskKind kind : {MaskKind::Harmonic, MaskKind::Biharmonic}) {
    SolveStats it_stats;
    SPatchNet direct = solve_interior(partial, kind);
    SPatchNet iterative = solve_interior(partial, kind, &it_stats, /*dense_limit=*/0);
    CHECK(it_stats.iterative);
    CHECK(it_stats.max_residual < 1e-9);
    for (int o = 0; o < direct.size(); ++o)
      CHECK((direct.point(o) - iterative.point(o)).norm() < 1e-9 * partial.scale);
  }
}

TEST_CASE("affine equivariance of the solve") {
  std::mt19937_64 rng(66);
  Ribbon r = make_ribbon({.n = 4, .degree = 3, .seed = 7});
  PartialNet partial = g1_panels(r);

  Eigen::Matrix3d a;
  for (int row = 0; row < 3; ++row) a.row(row) = random_point(rng).transpose();
  Point3 b = random_point(rng);

  PartialNet mapped = partial;
  for (int o = 0; o < mapped.index.size(); ++o)
    if (mapped.is_fixed[o]) mapped.points[o] = a * mapped.points[o] + b;

  SPatchNet plain = solve_interior(partial, MaskKind::Biharmonic);
  SPatchNet transformed = solve_interior(mapped, MaskKind::Biharmonic);
  double scale = bounding_box_diagonal(transformed.points());
  for (int o = 0; o < plain.size(); ++o)
    CHECK((transformed.point(o) - (a * plain.point(o) + b)).norm() < 1e-9 * scale);
}

TEST_SUITE_END();
