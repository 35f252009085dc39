#pragma once

#include "pca/engine.hpp"

#include <string>
#include <vector>

namespace hcpca {

// Random trap/target/open board. Sites are indexed (column i, row j) with
// moves from (i, j) to {(i+k, j+1) : 0 <= k < n}, columns periodic. Labels
// are drawn from the shared counter stream keyed (trial, row, column), so a
// board and an envelope run can consume identical draws.
struct Board {
  int n = 2;
  int width = 0, height = 0;
  NoiseParams params;
  SeedSpec seed;
  uint64_t trial = 0;
  std::vector<SiteLabel> labels;  // row-major, labels[j * width + i]

  SiteLabel at(int i, int j) const { return labels[static_cast<size_t>(j) * width + i]; }
};

Board generate_board(int width, int height, const NoiseParams& params, int n,
                     SeedSpec seed, uint64_t trial = 0);

struct OutcomeGrid {
  int width = 0, height = 0;
  std::vector<Cell> cells;  // row-major
  Cell at(int i, int j) const { return cells[static_cast<size_t>(j) * width + i]; }
};

// Backward induction: the top row is the all-? horizon; below it,
// trap -> 1, target -> 0, open -> 0/1/? from the moves' states (the quenched
// form of the three-state transition).
OutcomeGrid solve_board(const Board& board);

struct DrawEstimate {
  double estimate = 0, lo = 0, hi = 0;  // 95% binomial CI
  uint64_t trials = 0;
};

// P(bottom-center site is still undecided after `height` rows of play),
// i.e. `height` quenched steps below the all-? horizon.
DrawEstimate draw_probability(int width, int height, const NoiseParams& params,
                              int n, uint64_t trials, SeedSpec seed);

// Exact per-site equality between solve_board and the envelope run driven by
// the same draws, over `boards` independent boards.
bool games_match_pca(const NoiseParams& params, int n, int width, int height,
                     uint64_t boards, SeedSpec seed);

std::string board_text(const Board& b);          // rows top-down, {T,G,.}
std::string outcome_text(const OutcomeGrid& g);  // rows top-down, {0,1,?}

}  // namespace hcpca
