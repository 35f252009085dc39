#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "game/board.hpp"

#include <cmath>

using namespace hcpca;

namespace {

NoiseParams np(long a, long b, long c, long d) {
  return validate_noise(rat(a, b), rat(c, d));
}

}  // namespace

TEST_CASE("degenerate boards") {
  Board all_open = generate_board(8, 6, np(0, 1, 0, 1), 2, SeedSpec{1});
  for (SiteLabel l : all_open.labels) CHECK(l == SiteLabel::open_site);

  Board all_trap = generate_board(8, 6, np(0, 1, 1, 1), 2, SeedSpec{1});
  for (SiteLabel l : all_trap.labels) CHECK(l == SiteLabel::trap);
  OutcomeGrid g = solve_board(all_trap);
  for (int j = 0; j < 5; ++j)  // below the horizon row every site is a losing one
    for (int i = 0; i < 8; ++i) CHECK(g.at(i, j) == Cell::one);

  Board all_target = generate_board(8, 6, np(1, 1, 0, 1), 2, SeedSpec{1});
  OutcomeGrid gt = solve_board(all_target);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 8; ++i) CHECK(gt.at(i, j) == Cell::zero);

  CHECK_THROWS(generate_board(1, 0, np(0, 1, 0, 1), 2, SeedSpec{1}));
}

TEST_CASE("label frequencies on a large board") {
  Board b = generate_board(1000, 1000, np(1, 5, 3, 10), 2, SeedSpec{5});
  int traps = 0, targets = 0;
  for (SiteLabel l : b.labels) {
    traps += l == SiteLabel::trap;
    targets += l == SiteLabel::target;
  }
  const double N = 1e6;
  CHECK(std::abs(traps - 0.3 * N) < 4 * std::sqrt(0.3 * 0.7 * N));
  CHECK(std::abs(targets - 0.2 * N) < 4 * std::sqrt(0.2 * 0.8 * N));
}

TEST_CASE("solving is pure") {
  Board b = generate_board(32, 32, np(1, 10, 1, 10), 2, SeedSpec{17});
  OutcomeGrid g1 = solve_board(b);
  OutcomeGrid g2 = solve_board(b);
  CHECK(g1.cells == g2.cells);
}

TEST_CASE("solved boards equal the shared-stream runs exactly") {
  CHECK(games_match_pca(np(1, 10, 1, 10), 2, 64, 64, 20, SeedSpec{31}));
  CHECK(games_match_pca(np(1, 4, 1, 10), 3, 64, 64, 20, SeedSpec{32}));
  CHECK(games_match_pca(np(0, 1, 1, 2), 2, 64, 32, 5, SeedSpec{33}));
}

TEST_CASE("draw probability endpoints") {
  // no noise: nothing ever resolves
  DrawEstimate frozen = draw_probability(64, 10, np(0, 1, 0, 1), 2, 50, SeedSpec{2});
  CHECK(frozen.estimate == 1.0);

  // height 1 is a single quenched step from the unknown horizon: P(?) = r
  DrawEstimate one = draw_probability(64, 1, np(1, 4, 1, 4), 2, 4000, SeedSpec{3});
  double sigma = std::sqrt(0.5 * 0.5 / 4000);
  CHECK(std::abs(one.estimate - 0.5) < 4 * sigma);
  CHECK(one.lo <= one.estimate);
  CHECK(one.estimate <= one.hi);

  CHECK_THROWS(draw_probability(64, 1, np(0, 1, 0, 1), 2, 0, SeedSpec{1}));
}

TEST_CASE("draw probability decays with height") {
  NoiseParams p = np(1, 10, 1, 10);
  DrawEstimate h10 = draw_probability(128, 10, p, 2, 400, SeedSpec{7});
  DrawEstimate h50 = draw_probability(128, 50, p, 2, 400, SeedSpec{7});
  CHECK(h50.estimate < h10.estimate);
}

TEST_CASE("undecided sites shrink as the horizon moves up") {
  // same labels, taller board: the bottom row loses ? cells, never gains
  NoiseParams p = np(1, 10, 1, 10);
  SeedSpec seed{91};
  Board small = generate_board(64, 12, p, 2, seed);
  Board tall = generate_board(64, 20, p, 2, seed);  // same labels on shared rows
  OutcomeGrid gs = solve_board(small);
  OutcomeGrid gt = solve_board(tall);
  for (int i = 0; i < 64; ++i) {
    if (gt.at(i, 0) == Cell::undet) CHECK(gs.at(i, 0) == Cell::undet);
    if (gs.at(i, 0) != Cell::undet) CHECK(gt.at(i, 0) == gs.at(i, 0));
  }
}

TEST_CASE("board and outcome text rendering") {
  Board b = generate_board(6, 4, np(1, 4, 1, 4), 2, SeedSpec{12});
  std::string labels = board_text(b);
  CHECK(labels.size() == 7 * 4);
  for (char c : labels) CHECK((c == 'T' || c == 'G' || c == '.' || c == '\n'));
  std::string outs = outcome_text(solve_board(b));
  CHECK(outs.substr(0, 6) == "??????");  // horizon row first
}
