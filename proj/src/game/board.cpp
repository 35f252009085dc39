#include "game/board.hpp"

#include <cmath>

namespace hcpca {

Board generate_board(int width, int height, const NoiseParams& params, int n,
                     SeedSpec seed, uint64_t trial) {
  if (width < n || height < 1) throw std::invalid_argument("board dimensions too small");
  Board b;
  b.n = n;
  b.width = width;
  b.height = height;
  b.params = params;
  b.seed = seed;
  b.trial = trial;
  b.labels.resize(static_cast<size_t>(width) * height);
  for (int j = 0; j < height; ++j)
    for (int i = 0; i < width; ++i)
      b.labels[static_cast<size_t>(j) * width + i] =
          site_label(params, draw_unit(seed, trial, static_cast<uint64_t>(j),
                                       static_cast<uint64_t>(i)));
  return b;
}

namespace {

// One quenched row: states of row j from the labels of row j and the states
// of row j+1 (the move targets). Shared with solve_board and the streaming
// draw estimator.
void quench_row(const Board& b, const std::vector<Cell>& above, int j,
                std::vector<Cell>& out) {
  const int w = b.width;
  out.resize(static_cast<size_t>(w));
  for (int i = 0; i < w; ++i) {
    bool has_one = false, has_q = false;
    for (int k = 0; k < b.n; ++k) {
      Cell c = above[static_cast<size_t>((i + k) % w)];
      has_one |= c == Cell::one;
      has_q |= c == Cell::undet;
    }
    SiteLabel lab = b.at(i, j);
    out[static_cast<size_t>(i)] = envelope_cell(lab, has_one, has_q);
  }
}

}  // namespace

OutcomeGrid solve_board(const Board& board) {
  OutcomeGrid g;
  g.width = board.width;
  g.height = board.height;
  g.cells.assign(static_cast<size_t>(board.width) * board.height, Cell::undet);
  std::vector<Cell> above(static_cast<size_t>(board.width), Cell::undet);
  std::vector<Cell> cur;
  // top row stays all-? (the unknown horizon); solve downward
  for (int j = board.height - 2; j >= 0; --j) {
    quench_row(board, above, j, cur);
    for (int i = 0; i < board.width; ++i)
      g.cells[static_cast<size_t>(j) * board.width + i] = cur[static_cast<size_t>(i)];
    above = cur;
  }
  return g;
}

DrawEstimate draw_probability(int width, int height, const NoiseParams& params,
                              int n, uint64_t trials, SeedSpec seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  uint64_t undecided = 0;
  for (uint64_t t = 0; t < trials; ++t) {
    // A height-h study evaluates h quenched rows below the all-? horizon.
    Board b = generate_board(width, height + 1, params, n, seed, t);
    std::vector<Cell> above(static_cast<size_t>(width), Cell::undet);
    std::vector<Cell> cur;
    for (int j = height - 1; j >= 0; --j) {
      quench_row(b, above, j, cur);
      above.swap(cur);
    }
    if (above[static_cast<size_t>(width / 2)] == Cell::undet) ++undecided;
  }
  DrawEstimate est;
  est.trials = trials;
  est.estimate = static_cast<double>(undecided) / static_cast<double>(trials);
  double se = std::sqrt(est.estimate * (1.0 - est.estimate) /
                        static_cast<double>(trials));
  est.lo = std::max(0.0, est.estimate - 1.96 * se);
  est.hi = std::min(1.0, est.estimate + 1.96 * se);
  return est;
}

bool games_match_pca(const NoiseParams& params, int n, int width, int height,
                     uint64_t boards, SeedSpec seed) {
  PcaSpec spec{n, params};
  for (uint64_t t = 0; t < boards; ++t) {
    Board b = generate_board(width, height, params, n, seed, t);
    OutcomeGrid g = solve_board(b);
    // Envelope run consuming the same draws: output row at time s takes the
    // board row j = height-1-s as its key, so grid row j == envelope row
    // height-1-j exactly.
    Row row(width, Cell::undet);
    Row next(width, Cell::zero);
    for (int s = 1; s < height; ++s) {
      uint64_t key = static_cast<uint64_t>(height - 1 - s);
      envelope_step(row, next, spec, seed, t, key);
      std::swap(row, next);
      int j = height - 1 - s;
      for (int i = 0; i < width; ++i)
        if (row.get(i) != g.at(i, j)) return false;
    }
  }
  return true;
}

std::string board_text(const Board& b) {
  std::string s;
  s.reserve(static_cast<size_t>(b.width + 1) * b.height);
  for (int j = b.height - 1; j >= 0; --j) {
    for (int i = 0; i < b.width; ++i) {
      SiteLabel lab = b.at(i, j);
      s += lab == SiteLabel::trap ? 'T' : (lab == SiteLabel::target ? 'G' : '.');
    }
    s += '\n';
  }
  return s;
}

std::string outcome_text(const OutcomeGrid& g) {
  std::string s;
  s.reserve(static_cast<size_t>(g.width + 1) * g.height);
  for (int j = g.height - 1; j >= 0; --j) {
    for (int i = 0; i < g.width; ++i) {
      Cell c = g.at(i, j);
      s += c == Cell::zero ? '0' : (c == Cell::one ? '1' : '?');
    }
    s += '\n';
  }
  return s;
}

}  // namespace hcpca
