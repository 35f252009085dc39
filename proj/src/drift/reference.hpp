#pragma once

#include "symbolic/poly.hpp"

namespace hcpca {

// Frozen closed-form expansions the kernel sums must reproduce exactly.
// Each was computed independently (term-by-term transcription of the
// derivations plus a separate computer-algebra pass) before being frozen
// here; the engine never derives these, it is checked against them.
namespace ref {

// One-step mean increment of the n=2 mixed boundary equals
// -1/2 + (1-r)^2/r + this polynomial.
Poly one_step_n2_general();

// One-step bound for the n=2 (0,0) boundary:
// -r^2/2 - 2 e0 r + e0^2 r + e1^2/2 + (1-r)^2/r, as an exact RatFn.
RatFn one_step_n2_00_bound();

// Mixed-boundary drift minus the (0,0) bound (manifestly nonnegative form).
Poly n2_general_minus_00_bound();

// n=3 one-step means equal (1-r)^3/r + these polynomials.
Poly one_step_recent_one();
Poly one_step_1000();
Poly one_step_0000_bound();  // lower bound through the star rows

// Two-step bounds equal floor + 2(1-r)^p/r + these polynomials
// (p = 2 for n=2 with floor -1, p = 3 for n=3 with floor -2).
Poly two_step_00_n2();
Poly two_step_1000();
Poly two_step_0000_min_i0();    // branch: star mass resolved to the 0000 bound
Poly two_step_0000_min_1000();  // branch: star mass resolved to the 1000 drift

// Differences of one-step polynomials, as displayed before certification.
Poly gap_recent_one_minus_0000_bound();
Poly gap_recent_one_minus_1000();
// Their certified remainders (nonnegative combinations incl. (e0-e1)^2).
Poly gap_recent_one_minus_0000_bound_final();
Poly gap_recent_one_minus_1000_final();

}  // namespace ref

}  // namespace hcpca
