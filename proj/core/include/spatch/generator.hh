#pragma once

#include <cstdint>
#include <random>

#include "spatch/bezier.hh"

namespace spatch {

/// Uniform double in [lo, hi) with an implementation-independent mapping,
/// so seeded data is identical across standard libraries.
double uniform(std::mt19937_64& rng, double lo, double hi);

struct RibbonSpec {
  int n = 5;
  int degree = 5;  // at least 2
  std::uint64_t seed = 1;
  double amplitude = 0.3;
};

/// Seeded twist-compatible ribbon (a Sabin net). The sides are sampled from
/// one smooth polynomial height field over the domain polygon with a
/// quadratic in-plane cross field chosen so the corner identities close
/// exactly; a random rotation, scale and translation are applied on top.
/// The result is validated and snapped before it is returned.
Ribbon make_ribbon(const RibbonSpec&);

}  // namespace spatch
