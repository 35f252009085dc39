#pragma once

#include "core/noise.hpp"
#include "core/rng.hpp"
#include "core/row.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace hcpca {

struct PcaSpec {
  int n = 2;  // neighborhood size, >= 2
  NoiseParams params;
};

// The three-state transition: the site's own label decides between the
// deterministic branch value and the error value, identically for the
// envelope process and for quenched game boards.
inline Cell envelope_cell(SiteLabel lab, bool window_has_one, bool window_has_undet) {
  switch (lab) {
    case SiteLabel::trap: return Cell::one;
    case SiteLabel::target: return Cell::zero;
    default:
      if (window_has_one) return Cell::zero;
      return window_has_undet ? Cell::undet : Cell::one;
  }
}

// One synchronous update of the three-state process on the ring. The draw
// for output cell i is keyed (trial, time_key, i); callers choose time_key
// (normally the output row's time index).
void envelope_step(const Row& in, Row& out, const PcaSpec& spec, SeedSpec seed,
                   uint64_t trial, uint64_t time_key);

struct QuestionInBinary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Binary restriction: rejects rows containing '?'. On such rows the update
// coincides with envelope_step under the same seed context.
void hardcore_step(const Row& in, Row& out, const PcaSpec& spec, SeedSpec seed,
                   uint64_t trial, uint64_t time_key);

struct WidthTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Trajectory {
  PcaSpec spec;
  SeedSpec seed;
  uint64_t trial = 0;
  std::vector<Row> rows;  // rows[t], t = 0..steps
};

// steps+1 rows starting from init; deterministic in (spec, init, seed, trial).
// Requires width >= max(n, 64).
Trajectory run(const PcaSpec& spec, int width, int steps, const Row& init,
               SeedSpec seed, uint64_t trial = 0);

// Fraction of '?' cells per time step.
std::vector<double> question_density(const Trajectory& traj);
std::vector<double> one_density(const Trajectory& traj);

}  // namespace hcpca
