#pragma once

#include "core/row.hpp"
#include "islands/tracker.hpp"
#include "symbolic/poly.hpp"

#include <map>
#include <vector>

namespace hcpca {

// One line of a boundary transition table. Finite entries move the modified
// position by `delta` with probability `prob`. Geometric entries describe a
// family indexed by k >= 0: increment delta + k with per-k probability
// prob * (1-r)^k (the (eps0+eps1)^k run of freshly decided cells).
// `lower_bound` marks rows whose increment is only bounded below (the
// star-state rows); any drift through them is a bound, not an expectation.
struct KernelEntry {
  HalfPos delta;
  BoundaryClass next;
  Poly prob;
  bool geometric = false;
  bool lower_bound = false;
};

struct Kernel {
  int n = 2;
  const char* source = "";
  std::vector<KernelEntry> entries;
};

Kernel kernel_n2_general();  // right boundary in {(0,1),(1,0),(1,1)}
Kernel kernel_n2_00();       // right boundary (0,0), includes star rows
Kernel kernel_n3_recent_one();  // a one among the last three cells
Kernel kernel_n3_1000();
Kernel kernel_n3_0000();     // includes star rows

// Total probability mass; must equal 1 exactly for every table.
RatFn kernel_mass(const Kernel& k);

struct Drift {
  RatFn value;
  bool lower_bound = false;
};

// Expected one-step increment: finite deltas plus closed geometric tails.
Drift drift1(const Kernel& k);

// Arrival mass per successor class; masses sum to 1.
std::map<BoundaryClass, RatFn> class_marginals(const Kernel& k);

}  // namespace hcpca
