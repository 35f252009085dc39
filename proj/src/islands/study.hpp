#pragma once

#include "islands/tracker.hpp"

#include <map>
#include <vector>

namespace hcpca {

// Monte-Carlo boundary-drift measurement: many short trajectories, each
// starting from a planted island in an all-? ring, accumulating conditional
// increments of the modified boundary positions. Trials parallelize; the
// integer accumulators make the merged result schedule-independent.
struct DriftStudyConfig {
  int n = 2;
  NoiseParams params;
  int width = 4096;
  int steps = 6;
  uint64_t trials = 20000;
  SeedSpec seed;
  int plant_len = 24;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct Accum {
  int64_t count = 0;
  int64_t sum = 0;    // doubled increments, exact
  int64_t sumsq = 0;  // squares of doubled increments
  void add(int64_t doubled) {
    ++count;
    sum += doubled;
    sumsq += doubled * doubled;
  }
  void merge(const Accum& o) {
    count += o.count;
    sum += o.sum;
    sumsq += o.sumsq;
  }
  double mean() const;
  double stderr_() const;
};

struct DriftStudyResult {
  int n = 2;
  // modified right-boundary increments conditioned on (class, k_steps),
  // gap_ok and clean right flank
  std::map<std::pair<BoundaryClass, int>, Accum> right;
  // modified left-boundary increments conditioned on the mirrored class,
  // gap_ok and clean left flank
  std::map<std::pair<BoundaryClass, int>, Accum> left;
  // raw (unmodified) boundary increments over all alive gap_ok steps,
  // unconditioned; feeds the island-growth identity D = 2R + (n-1)
  Accum raw_right, raw_left;
  uint64_t trajectories = 0;
  uint64_t deaths = 0;

  uint64_t conditioned_samples() const;
};

DriftStudyResult drift_study(const DriftStudyConfig& cfg);

// One tracked trajectory's records, for CSV export and inspection. Runs the
// same planted-island setup as the study (all-? init when plant_len == 0).
std::vector<BoundaryRecord> study_track_one(const DriftStudyConfig& cfg, uint64_t trial);

}  // namespace hcpca
