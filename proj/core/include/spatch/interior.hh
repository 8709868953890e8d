#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "spatch/labels.hh"
#include "spatch/spatch.hh"

namespace spatch {

struct PartialNet;

enum class MaskKind { Harmonic, Biharmonic };

/// Zero-sum integer stencil over the control-net adjacency graph.
struct Mask {
  Label center;
  std::vector<std::pair<int, int>> weights;  // (ordinal, weight), ordinal-sorted

  int weight_sum() const;
  int weight_of(int ordinal) const;  // 0 if absent
};

/// Weight 1 on every neighbor, minus the valence on the center.
Mask harmonic_mask(const Label& center, const LabelIndex&);

/// The harmonic mask applied to itself: for each (j, wj) of the center's
/// harmonic mask, accumulate wj * wk over (k, wk) of j's harmonic mask.
Mask biharmonic_mask(const Label& center, const LabelIndex&);

/// One mask equation per free label; fixed terms are moved to the
/// right-hand side. Rows and columns follow canonical label order.
struct InteriorSystem {
  struct Entry {
    int row, col;
    double w;
  };

  int unknowns = 0;
  std::vector<int> free_ordinals;
  std::vector<Entry> entries;
  Eigen::MatrixX3d rhs;

  Eigen::MatrixXd dense() const;
};

InteriorSystem assemble(const PartialNet&, MaskKind);

struct SolveStats {
  int unknowns = 0;
  double max_residual = 0;  // worst mask-equation residual, relative
  bool iterative = false;
};

/// Places every free control point. Deterministic; the residual of every
/// mask equation stays below 1e-9 of the model scale or the solve fails.
/// Systems up to dense_limit unknowns use a direct symmetric factorization,
/// larger ones a conjugate-gradient iteration.
SPatchNet solve_interior(const PartialNet&, MaskKind, SolveStats* stats = nullptr,
                         int dense_limit = 5000);

}  // namespace spatch
