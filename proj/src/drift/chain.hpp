#pragma once

#include "core/noise.hpp"
#include "core/rng.hpp"
#include "symbolic/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcpca {

// Finite boundary chain (j_t, f_t) whose increment law depends on f_t only.
// `jumps[f]` is the increment distribution from state f, drawn independently
// of the successor state; `drift2` is derived: E[J+J'|f] = d1(f) + sum_g
// P(f,g) d1(g).
struct ChainSpec {
  std::vector<std::string> states;
  std::vector<std::vector<Rat>> trans;                  // row-stochastic
  std::vector<std::vector<std::pair<Rat, Rat>>> jumps;  // (value, prob)
  std::vector<Rat> drift1;
  std::vector<Rat> drift2;
};

// Builds drift1/drift2 from jumps and trans; validates stochasticity.
ChainSpec make_chain(std::vector<std::string> states,
                     std::vector<std::vector<Rat>> trans,
                     std::vector<std::vector<std::pair<Rat, Rat>>> jumps);

// As make_chain but with the two-step means supplied directly (used when the
// drift2 entries are sharper bounds than the tower-derived values).
ChainSpec make_chain_with_drift2(std::vector<std::string> states,
                                 std::vector<std::vector<Rat>> trans,
                                 std::vector<std::vector<std::pair<Rat, Rat>>> jumps,
                                 std::vector<Rat> drift2);

// min over states of max(E[J|f], E[J+J'|f] / 2); a lower bound for the
// asymptotic mean increment R.
Rat minmax_bound(const ChainSpec& c);

// Pass iff bound > -(n-1)/2.
bool goal_check(const Rat& bound, int n);

// Exact stationary distribution (dense elimination; the chains here are small).
std::vector<Rat> stationary(const ChainSpec& c);

// Exact asymptotic mean increment sum_f pi(f) d1(f).
Rat stationary_drift(const ChainSpec& c);

struct AuxOccupation {
  uint64_t with_wait = 0;  // tau(f, 1)
  uint64_t without = 0;    // tau(f, 0)
};

struct AuxSimResult {
  double r_hat = 0;       // long-run mean increment of the waiting chain
  double r_raw = 0;       // long-run mean increment of the plain chain
  double se_hat = 0, se_raw = 0;  // batch-mean standard errors
  std::vector<AuxOccupation> occupation;  // per state
  std::vector<bool> in_f2;
};

// Simulates the plain chain and its waiting companion: states with
// d1(f) < d2(f)/2 hold one step, then advance two steps at once.
AuxSimResult aux_chain_simulate(const ChainSpec& c, uint64_t steps, SeedSpec seed);

// Boundary-class chains at exact noise values, drifts taken from the kernel
// bounds; star masses folded onto the states carrying their bounds.
ChainSpec boundary_chain(int n, const NoiseParams& p);

struct GridCheckResult {
  bool all_pass = true;
  Rat worst_bound;     // smallest min-max bound seen
  Rat at_eps0, at_eps1;
  uint64_t points = 0;
};

// Evaluates the min-max bound over the grid {(a s, b s)} in [0,1/2]^2 minus
// the origin and the r=0 corner; Pass needs bound > -(n-1)/2 everywhere.
GridCheckResult boundary_grid_check(int n, const Rat& step);

}  // namespace hcpca
