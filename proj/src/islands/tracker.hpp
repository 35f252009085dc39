#pragma once

#include "pca/engine.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hcpca {

struct AllBinaryRow : std::domain_error {
  using std::domain_error::domain_error;
};
struct InsufficientContext : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadArity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptySample : std::domain_error {
  using std::domain_error::domain_error;
};

// Maximal run of consecutive binary cells, flanked by ? on both sides.
// Positions are ring positions with i in [0, width); j >= i may reach past
// width-1 when the run wraps.
struct Island {
  int64_t i = 0, j = 0;
  int64_t length() const { return j - i + 1; }
};

// Maximal binary runs on the ring; empty iff the row is all-?.
// Throws AllBinaryRow when no ? remains (no flank exists).
std::vector<Island> find_islands(const Row& row);

// Right-boundary state classes used to condition drifts. The n=3 grouping
// "other" collects the 14 tuples with a one among the last three cells.
enum class BoundaryClass : uint8_t {
  // n = 2 pairs (x_{j-1}, x_j)
  p00,
  p01,
  p10,
  p11,
  star0,  // (*, 0): leading cell forgotten
  star1,  // (*, 1)
  // n = 3 tuples (x_{j-3}, .., x_j)
  q0000,
  q1000,
  other,           // a one among the last three cells
  star000,         // (*, 0, 0, 0)
  one_star00,      // (1, *, 0, 0)
  star_pair00,     // ({0,*}, *, 0, 0)
};

const char* boundary_class_name(BoundaryClass c);

// Offset added to the raw right boundary j to obtain the modified position.
// `tail` holds the island's rightmost cells in ring order (ending at j);
// needs >= 2 of them for n=2 and >= 3 for n=3.
HalfPos modified_right(std::span<const Cell> tail, int n);

// Mirror image: `head` holds the leftmost cells in ring order (starting at
// i); the offset is added to the raw left boundary i.
HalfPos modified_left(std::span<const Cell> head, int n);

// f = the m = 2 (n=2) or 4 (n=3) rightmost island cells, in ring order.
BoundaryClass classify_right(std::span<const Cell> f, int n);

struct BoundaryRecord {
  int t = 0;
  int64_t i = 0, j = 0;  // lifted positions (continuous across the ring)
  HalfPos i_mod, j_mod;
  uint8_t f_left = 0, f_right = 0;  // m cells packed LSB-first from the flank inward
  BoundaryClass class_right = BoundaryClass::p00;
  bool has_class = false;  // island long enough for the m-cell tuples
  bool gap_ok = false;     // j - i >= 5 (n=2) / 9 (n=3)
  bool alive = true;       // successor found (false marks a death/restart)
  bool clean_right = false, clean_left = false;  // ?-pure flank neighborhoods
};

inline constexpr int kCleanHorizon = 8;  // flank cells checked beyond the adjacent ?

// Follow one island through the trajectory: the successor at t+1 is the
// maximal run containing cell j_t - (n-1), which is binary whenever the
// island has length >= n. Starts at the first row containing an island
// (row 0 for planted inits). Tracking restarts after a death and stops if a
// row loses all ? cells.
std::vector<BoundaryRecord> track(const Trajectory& traj);

struct DriftEstimate {
  BoundaryClass condition;
  int k_steps = 1;
  double mean = 0, stderr_ = 0;
  uint64_t count = 0;
};

// Conditional mean of the modified right-boundary increment (k_steps = 1) or
// of the two-step sum over non-overlapping pairs (k_steps = 2). Only gap_ok
// records with clean right context enter; throws EmptySample when none match.
DriftEstimate empirical_drifts(const std::vector<BoundaryRecord>& records,
                               BoundaryClass condition, int k_steps);

}  // namespace hcpca
