#pragma once

#include "symbolic/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace hcpca {

struct NoiseError : std::invalid_argument {
  enum Kind { negative_probability, mass_exceeded } kind;
  NoiseError(Kind k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
};

// The noise pair (eps0, eps1) with r = 1 - eps0 - eps1, kept exact. The
// cached doubles feed the simulation fast path only; symbolic code reads
// the rationals.
struct NoiseParams {
  Rat eps0, eps1, r;
  bool theorem_scope = false;  // (eps0, eps1) in [0,1/2]^2 \ {(0,0)}
  double eps0_d = 0, eps1_d = 0, r_d = 1;
  double thr_trap = 0, thr_target = 0;  // label thresholds on [0,1)
};

// Never clamps: throws NoiseError on eps < 0 or eps0 + eps1 > 1.
NoiseParams validate_noise(const Rat& eps0, const Rat& eps1);

enum class SiteLabel : uint8_t { trap, target, open_site };

// Fixed interval convention on the unit draw: [0, eps1) -> trap,
// [eps1, eps1+eps0) -> target, rest open. Game boards and PCA noise share
// this so the two consume one stream identically.
inline SiteLabel site_label(const NoiseParams& p, double u) {
  if (u < p.thr_trap) return SiteLabel::trap;
  if (u < p.thr_target) return SiteLabel::target;
  return SiteLabel::open_site;
}

}  // namespace hcpca
