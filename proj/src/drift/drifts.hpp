#pragma once

#include "core/noise.hpp"
#include "drift/kernels.hpp"

namespace hcpca {

// Two-step lower bound for the n=2 (0,0) boundary: the one-step bound plus
// the class-resolved second step (star masses resolved through the minimum
// of their refinements, which the one-step bound dominates).
Drift two_step_00_n2();

// Two-step lower bound from (1,0,0,0): second step resolved through the
// exact one-step means and the (0,0,0,0) lower bound.
Drift two_step_1000();

// Two-step lower bounds from (0,0,0,0); the star mass can resolve to either
// the (0,0,0,0) bound or the (1,0,0,0) drift, whichever is smaller, so both
// branches are produced and certified separately.
struct TwoStep0000 {
  Drift min_is_0000_bound;  // star mass taken at the 0000 bound
  Drift min_is_1000;        // star mass taken at the 1000 drift
};
TwoStep0000 two_step_0000();

// One-step drift (or bound) conditioning class -> symbolic value.
// Valid classes: n=2 {p00,p01,p10,p11}, n=3 {q0000,q1000,other}.
Drift class_drift(int n, BoundaryClass cls);

struct ClassValue {
  double value = 0;
  bool is_bound = false;
};
// Exact rational evaluation of class_drift at the given noise, as double.
ClassValue class_drift_at(int n, BoundaryClass cls, const NoiseParams& p);

}  // namespace hcpca
