#include "spatch/interior.hh"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <algorithm>
#include <unordered_map>

#include "spatch/errors.hh"
#include "spatch/fill.hh"

namespace spatch {

int Mask::weight_sum() const {
  int sum = 0;
  for (const auto& [o, w] : weights) sum += w;
  return sum;
}

int Mask::weight_of(int ordinal) const {
  auto it = std::lower_bound(weights.begin(), weights.end(), ordinal,
                             [](const auto& entry, int o) { return entry.first < o; });
  return (it != weights.end() && it->first == ordinal) ? it->second : 0;
}

Mask harmonic_mask(const Label& center, const LabelIndex& index) {
  Mask mask;
  mask.center = center;
  auto neighbors = label_neighbors(center);
  mask.weights.reserve(neighbors.size() + 1);
  for (const Label& nb : neighbors) mask.weights.emplace_back(index.ordinal(nb), 1);
  mask.weights.emplace_back(index.ordinal(center), -static_cast<int>(neighbors.size()));
  std::sort(mask.weights.begin(), mask.weights.end());
  return mask;
}

Mask biharmonic_mask(const Label& center, const LabelIndex& index) {
  Mask inner = harmonic_mask(center, index);
  std::unordered_map<int, int> acc;
  acc.reserve(inner.weights.size() * inner.weights.size());
  for (const auto& [j, wj] : inner.weights) {
    Mask hop = harmonic_mask(index.label(j), index);
    for (const auto& [k, wk] : hop.weights) acc[k] += wj * wk;
  }
  Mask mask;
  mask.center = center;
  mask.weights.reserve(acc.size());
  for (const auto& [o, w] : acc)
    if (w != 0) mask.weights.emplace_back(o, w);
  std::sort(mask.weights.begin(), mask.weights.end());
  return mask;
}

InteriorSystem assemble(const PartialNet& p, MaskKind kind) {
  InteriorSystem sys;
  std::vector<int> unknown_of(p.index.size(), -1);
  for (int o = 0; o < p.index.size(); ++o) {
    if (!p.is_fixed[o]) {
      unknown_of[o] = static_cast<int>(sys.free_ordinals.size());
      sys.free_ordinals.push_back(o);
    }
  }
  sys.unknowns = static_cast<int>(sys.free_ordinals.size());
  sys.rhs = Eigen::MatrixX3d::Zero(sys.unknowns, 3);

  for (int row = 0; row < sys.unknowns; ++row) {
    Label center = p.index.label(sys.free_ordinals[row]);
    Mask mask = kind == MaskKind::Harmonic ? harmonic_mask(center, p.index)
                                           : biharmonic_mask(center, p.index);
    for (const auto& [o, w] : mask.weights) {
      if (unknown_of[o] >= 0)
        sys.entries.push_back({row, unknown_of[o], static_cast<double>(w)});
      else
        sys.rhs.row(row) -= static_cast<double>(w) * p.points[o].transpose();
    }
  }
  return sys;
}

Eigen::MatrixXd InteriorSystem::dense() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(unknowns, unknowns);
  for (const Entry& e : entries) a(e.row, e.col) += e.w;
  return a;
}

SPatchNet solve_interior(const PartialNet& p, MaskKind kind, SolveStats* stats, int dense_limit) {
  std::vector<Point3> points = p.points;
  InteriorSystem sys = assemble(p, kind);
  int nf = sys.unknowns;

  SolveStats local;
  SolveStats& out = stats ? *stats : local;
  out = {};
  out.unknowns = nf;
  if (nf == 0) return SPatchNet(p.index, std::move(points));

  Eigen::MatrixX3d solution;
  if (nf <= dense_limit) {
    Eigen::MatrixXd a = sys.dense();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
    if (ldlt.info() != Eigen::Success)
      throw NumericalError("interior solve: factorization failed");
    solution = ldlt.solve(sys.rhs);
  } else {
    out.iterative = true;
    // The mask matrix restricted to the free set is definite; flip signs if
    // the diagonal is negative so conjugate gradients sees an SPD system.
    double diag_sum = 0;
    for (const auto& e : sys.entries)
      if (e.row == e.col) diag_sum += e.w;
    double sign = diag_sum < 0 ? -1.0 : 1.0;

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(sys.entries.size());
    for (const auto& e : sys.entries) triplets.emplace_back(e.row, e.col, sign * e.w);
    Eigen::SparseMatrix<double> a(nf, nf);
    a.setFromTriplets(triplets.begin(), triplets.end());

    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(1e-12);
    cg.setMaxIterations(10LL * nf);
    cg.compute(a);
    solution = cg.solve((sign * sys.rhs).eval());
    if (cg.info() != Eigen::Success && cg.info() != Eigen::NoConvergence)
      throw NumericalError("interior solve: conjugate gradients failed");
  }

  if (!solution.allFinite()) {
    for (int row = 0; row < nf; ++row) {
      if (!solution.row(row).allFinite())
        throw NumericalError("interior solve produced a non-finite value at label " +
                             p.index.label(sys.free_ordinals[row]).str());
    }
  }

  for (int row = 0; row < nf; ++row) points[sys.free_ordinals[row]] = solution.row(row).transpose();

  double scale = p.scale > 0 ? p.scale : bounding_box_diagonal(points);
  Eigen::MatrixX3d residual = -sys.rhs;
  for (const auto& e : sys.entries) residual.row(e.row) += e.w * solution.row(e.col);
  double worst = 0;
  for (int row = 0; row < nf; ++row) worst = std::max(worst, residual.row(row).norm());
  out.max_residual = relative_to(worst, scale);
  if (out.max_residual > 1e-9)
    throw NumericalError("interior solve residual " + std::to_string(out.max_residual) +
                         " exceeds 1e-9 of the model scale");

  return SPatchNet(p.index, std::move(points));
}

}  // namespace spatch
