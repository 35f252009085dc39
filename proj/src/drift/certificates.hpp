#pragma once

#include "drift/kernels.hpp"
#include "symbolic/poly.hpp"

#include <string>
#include <vector>

namespace hcpca {

// A replayable positivity proof for target > floor on [0,1/2]^2 \ {(0,0)}
// (r > 0). The target is written floor + d (1-r)^p / r + polynomial; the
// replay exchanges the polynomial for a pointwise-smaller one through three
// kinds of certified-nonnegative moves, then demands a coefficientwise
// nonnegative residual with strictly positive terms on both axes.
struct CertStep {
  enum Kind {
    group,   // remove c*m_a, add back c*m_b with m_a | m_b   (c(m_a - m_b) >= 0 on [0,1]^2)
    square,  // remove c*m_a + c*m_b, add 2c*sqrt(m_a m_b)    (c(sqrt..-sqrt..)^2 >= 0)
    halve,   // add back c*m_a, remove c (1/2)^{k0+k1} m_a/(e0^k0 e1^k1)  (eps <= 1/2)
  } kind;
  Rat c;
  Mono a, b;       // b unused for halve
  unsigned k0 = 0, k1 = 0;  // halve only
};

struct Certificate {
  std::string name;
  RatFn target;
  Rat floor_;
  Rat series_d;       // coefficient of the (1-r)^p / r part; 0 when absent
  unsigned series_p = 0;
  unsigned series_trunc = 0;  // keep d * sum_{k=p..K} (e0+e1)^k
  std::vector<CertStep> steps;
};

struct CertReplay {
  bool pass = false;
  std::string gap;      // first unabsorbed negative term, empty on pass
  Poly residual;        // final nonnegative combination
  Poly pre_square;      // residual before square extraction (plus squares)
  Poly squares;         // sum of extracted squares, expanded
};

// Replays the moves; Pass needs every residual coefficient >= 0 plus a
// positive pure-e0 term and a positive pure-e1 term (strictness off the
// origin; the d (1-r)^p / r part dominates the r -> 0 corner when d > 0).
CertReplay verify_certificate(const Certificate& cert);

// The shipped fixtures: the five drift-bound inequalities (the 0000 two-step
// bound carries its two min-branches as separate replays).
std::vector<Certificate> builtin_certificates();

struct GridScan {
  Rat minimum;          // min of target - floor over the grid
  Rat at_eps0, at_eps1;
  bool positive = false;
  uint64_t points = 0;
};

// Exact rational evaluation of target - floor over {(a s, b s)} in
// [0,1/2]^2 minus the origin, r > 0 points only.
GridScan grid_scan(const RatFn& target, const Rat& floor_, const Rat& step);

}  // namespace hcpca
