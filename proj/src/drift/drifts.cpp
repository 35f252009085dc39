#include "drift/drifts.hpp"

namespace hcpca {

namespace {

RatFn marginal(const std::map<BoundaryClass, RatFn>& m, BoundaryClass c) {
  auto it = m.find(c);
  return it == m.end() ? RatFn() : it->second;
}

}  // namespace

Drift two_step_00_n2() {
  Drift one = drift1(kernel_n2_00());
  Drift gen = drift1(kernel_n2_general());
  auto m = class_marginals(kernel_n2_00());
  RatFn p_star0 = marginal(m, BoundaryClass::star0);
  RatFn p_00 = marginal(m, BoundaryClass::p00);
  RatFn p_rest = RatFn(1) - p_star0 - p_00;
  // star0 refines to {(0,0),(1,0)}; both one-step means dominate the (0,0)
  // bound, so the bound itself stands in for the star mass.
  Drift d;
  d.value = one.value + (p_star0 + p_00) * one.value + p_rest * gen.value;
  d.lower_bound = true;
  return d;
}

Drift two_step_1000() {
  Drift d10 = drift1(kernel_n3_1000());
  Drift ds1 = drift1(kernel_n3_recent_one());
  Drift d00 = drift1(kernel_n3_0000());
  auto m = class_marginals(kernel_n3_1000());
  Drift d;
  d.value = d10.value + marginal(m, BoundaryClass::other) * ds1.value +
            marginal(m, BoundaryClass::q1000) * d10.value +
            marginal(m, BoundaryClass::q0000) * d00.value;
  d.lower_bound = true;  // the second-step 0000 term is itself a bound
  return d;
}

TwoStep0000 two_step_0000() {
  Drift d10 = drift1(kernel_n3_1000());
  Drift ds1 = drift1(kernel_n3_recent_one());
  Drift d00 = drift1(kernel_n3_0000());
  auto m = class_marginals(kernel_n3_0000());
  RatFn p_s1 = marginal(m, BoundaryClass::other);
  RatFn p_0000 = marginal(m, BoundaryClass::q0000);
  RatFn p_1000 = marginal(m, BoundaryClass::q1000) + marginal(m, BoundaryClass::one_star00);
  RatFn p_star = marginal(m, BoundaryClass::star000) + marginal(m, BoundaryClass::star_pair00);

  RatFn common = d00.value + p_0000 * d00.value + p_s1 * ds1.value + p_1000 * d10.value;
  TwoStep0000 out;
  out.min_is_0000_bound.value = common + p_star * d00.value;
  out.min_is_0000_bound.lower_bound = true;
  out.min_is_1000.value = common + p_star * d10.value;
  out.min_is_1000.lower_bound = true;
  return out;
}

Drift class_drift(int n, BoundaryClass cls) {
  if (n == 2) {
    switch (cls) {
      case BoundaryClass::p00: return drift1(kernel_n2_00());
      case BoundaryClass::p01:
      case BoundaryClass::p10:
      case BoundaryClass::p11: return drift1(kernel_n2_general());
      default: break;
    }
  } else if (n == 3) {
    switch (cls) {
      case BoundaryClass::q0000: return drift1(kernel_n3_0000());
      case BoundaryClass::q1000: return drift1(kernel_n3_1000());
      case BoundaryClass::other: return drift1(kernel_n3_recent_one());
      default: break;
    }
  }
  throw std::invalid_argument("no one-step drift for this class");
}

ClassValue class_drift_at(int n, BoundaryClass cls, const NoiseParams& p) {
  Drift d = class_drift(n, cls);
  ClassValue out;
  out.is_bound = d.lower_bound;
  out.value = rat_double(d.value.eval(p.eps0, p.eps1));
  return out;
}

}  // namespace hcpca
