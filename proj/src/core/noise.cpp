#include "core/noise.hpp"

namespace hcpca {

NoiseParams validate_noise(const Rat& eps0, const Rat& eps1) {
  if (eps0 < 0 || eps1 < 0)
    throw NoiseError(NoiseError::negative_probability,
                     "noise probabilities must be nonnegative");
  if (eps0 + eps1 > 1)
    throw NoiseError(NoiseError::mass_exceeded, "eps0 + eps1 exceeds 1");
  NoiseParams p;
  p.eps0 = eps0;
  p.eps1 = eps1;
  p.r = rat(1) - eps0 - eps1;
  Rat half = rat(1, 2);
  p.theorem_scope = eps0 <= half && eps1 <= half && !(eps0 == 0 && eps1 == 0);
  p.eps0_d = rat_double(eps0);
  p.eps1_d = rat_double(eps1);
  p.r_d = rat_double(p.r);
  p.thr_trap = p.eps1_d;
  p.thr_target = rat_double(eps1 + eps0);
  return p;
}

}  // namespace hcpca
