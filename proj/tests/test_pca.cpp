#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pca/engine.hpp"

#include <cmath>
#include <random>

using namespace hcpca;

namespace {

PcaSpec spec(int n, long e0n, long e0d, long e1n, long e1d) {
  return PcaSpec{n, validate_noise(rat(e0n, e0d), rat(e1n, e1d))};
}

Row random_row(std::mt19937_64& rng, int width, bool with_q) {
  Row row(width, Cell::zero);
  std::uniform_int_distribution<int> pick(0, with_q ? 2 : 1);
  for (int i = 0; i < width; ++i) row.set(i, static_cast<Cell>(pick(rng)));
  return row;
}

// straightforward per-cell update used as the oracle for the packed path
Row naive_step(const Row& in, const PcaSpec& sp, SeedSpec seed, uint64_t trial,
               uint64_t key) {
  Row out(in.width(), Cell::zero);
  for (int i = 0; i < in.width(); ++i) {
    bool one = false, q = false;
    for (int k = 0; k < sp.n; ++k) {
      Cell c = in.get(i + k);
      one |= c == Cell::one;
      q |= c == Cell::undet;
    }
    out.set(i, envelope_cell(site_label(sp.params, draw_unit(seed, trial, key, i)),
                             one, q));
  }
  return out;
}

}  // namespace

TEST_CASE("noise-free binary rule is the window NOR") {
  PcaSpec sp = spec(2, 0, 1, 0, 1);
  Row out(5, Cell::zero);

  hardcore_step(Row::from_string("00000"), out, sp, SeedSpec{1}, 0, 1);
  CHECK(out.to_string() == "11111");

  // windows are cells i..i+1: only cells whose window avoids the 1 turn on
  hardcore_step(Row::from_string("00100"), out, sp, SeedSpec{1}, 0, 1);
  CHECK(out.to_string() == "10011");

  CHECK_THROWS_AS(
      hardcore_step(Row::from_string("0?0"), out, spec(2, 0, 1, 0, 1), SeedSpec{1}, 0, 1),
      QuestionInBinary);
}

TEST_CASE("all-zero row flips ones with rate eps0") {
  PcaSpec sp = spec(2, 1, 10, 0, 1);
  const int width = 1 << 20;
  Row in(width, Cell::zero), out(width, Cell::zero);
  envelope_step(in, out, sp, SeedSpec{77}, 0, 1);
  double frac = static_cast<double>(out.count_ones()) / width;
  double sigma = std::sqrt(0.9 * 0.1 / width);
  CHECK(std::abs(frac - 0.9) < 4 * sigma);
  CHECK(out.count_undet() == 0);
}

TEST_CASE("undetermined windows keep ? with probability r") {
  PcaSpec sp = spec(2, 1, 4, 1, 4);  // r = 1/2
  const int width = 1 << 16;
  Row in(width, Cell::undet), out(width, Cell::zero);
  envelope_step(in, out, sp, SeedSpec{3}, 0, 1);
  double frac = static_cast<double>(out.count_undet()) / width;
  double sigma = std::sqrt(0.25 / width);
  CHECK(std::abs(frac - 0.5) < 4 * sigma);

  // zero noise keeps every ?
  PcaSpec frozen = spec(2, 0, 1, 0, 1);
  envelope_step(in, out, frozen, SeedSpec{3}, 0, 1);
  CHECK(out.count_undet() == width);

  // a ?-free input never produces ?
  std::mt19937_64 rng(9);
  Row bin = random_row(rng, 256, false);
  envelope_step(bin, out, sp, SeedSpec{5}, 0, 1);
  CHECK(out.width() == 256);
  CHECK(out.count_undet() == 0);
}

TEST_CASE("packed fast path equals the per-cell rule") {
  std::mt19937_64 rng(31337);
  for (int n : {2, 3, 5}) {
    PcaSpec sp = spec(n, 1, 7, 2, 9);
    for (int width : {64, 128, 192}) {
      for (int it = 0; it < 6; ++it) {
        Row in = random_row(rng, width, true);
        Row out(width, Cell::zero);
        envelope_step(in, out, sp, SeedSpec{11}, 4, 9);
        Row want = naive_step(in, sp, SeedSpec{11}, 4, 9);
        CHECK(out.to_string() == want.to_string());
      }
    }
  }
  Row out(64, Cell::zero);
  CHECK_THROWS(envelope_step(Row(64, Cell::undet), out, spec(1, 0, 1, 0, 1),
                             SeedSpec{1}, 0, 1));
}

TEST_CASE("binary update equals the three-state update on ?-free rows") {
  std::mt19937_64 rng(5);
  PcaSpec sp = spec(3, 1, 10, 1, 5);
  for (int it = 0; it < 10; ++it) {
    Row in = random_row(rng, 192, false);
    Row a(192, Cell::zero), b(192, Cell::zero);
    hardcore_step(in, a, sp, SeedSpec{21}, 2, 7);
    envelope_step(in, b, sp, SeedSpec{21}, 2, 7);
    CHECK(a.to_string() == b.to_string());
  }
}

TEST_CASE("outputs depend only on their window") {
  std::mt19937_64 rng(12);
  PcaSpec sp = spec(3, 1, 6, 1, 6);
  for (int it = 0; it < 10; ++it) {
    Row in = random_row(rng, 128, true);
    Row out(128, Cell::zero);
    envelope_step(in, out, sp, SeedSpec{8}, 0, 3);
    // poke one cell far from a probe position; the probe must not move
    Row poked = in;
    int probe = 10;
    int far = 70;  // outside probe's window for n = 3
    poked.set(far, in.get(far) == Cell::one ? Cell::zero : Cell::one);
    Row out2(128, Cell::zero);
    envelope_step(poked, out2, sp, SeedSpec{8}, 0, 3);
    CHECK(out.get(probe) == out2.get(probe));
  }
}

TEST_CASE("determination is monotone under a shared stream") {
  // replacing a ? input by 0 or 1 never turns a decided output back into ?
  std::mt19937_64 rng(77);
  PcaSpec sp = spec(2, 1, 8, 1, 8);
  for (int it = 0; it < 20; ++it) {
    Row in = random_row(rng, 96, true);
    Row sharper = in;
    for (int i = 0; i < 96; ++i)
      if (in.get(i) == Cell::undet && (rng() & 1))
        sharper.set(i, (rng() & 1) ? Cell::one : Cell::zero);
    Row a(96, Cell::zero), b(96, Cell::zero);
    envelope_step(in, a, sp, SeedSpec{13}, 0, 5);
    envelope_step(sharper, b, sp, SeedSpec{13}, 0, 5);
    for (int i = 0; i < 96; ++i) {
      if (a.get(i) != Cell::undet) CHECK(b.get(i) == a.get(i));
    }
  }
}

TEST_CASE("run is deterministic and checks width") {
  PcaSpec sp = spec(2, 1, 10, 1, 10);
  Row init(64, Cell::undet);
  Trajectory t0 = run(sp, 64, 0, init, SeedSpec{42});
  CHECK(t0.rows.size() == 1);

  Trajectory a = run(sp, 64, 30, init, SeedSpec{42});
  Trajectory b = run(sp, 64, 30, init, SeedSpec{42});
  for (size_t t = 0; t < a.rows.size(); ++t)
    CHECK(a.rows[t].to_string() == b.rows[t].to_string());

  CHECK_THROWS_AS(run(sp, 32, 5, Row(32, Cell::undet), SeedSpec{1}), WidthTooSmall);
}

TEST_CASE("question density series") {
  PcaSpec sp = spec(2, 1, 4, 1, 4);
  Row init(4096, Cell::undet);
  Trajectory traj = run(sp, 4096, 1, init, SeedSpec{6});
  auto dens = question_density(traj);
  CHECK(dens[0] == 1.0);
  double sigma = std::sqrt(0.25 / 4096);
  CHECK(std::abs(dens[1] - 0.5) < 4 * sigma);

  Row binary(64, Cell::zero);
  Trajectory bt = run(sp, 64, 10, binary, SeedSpec{6});
  for (double d : question_density(bt)) CHECK(d == 0.0);
}

TEST_CASE("question density decays at simulation scale") {
  // a lighter version of the long ergodicity run: width 512, 300 steps
  PcaSpec sp = spec(2, 1, 10, 1, 10);
  Row init(512, Cell::undet);
  Trajectory traj = run(sp, 512, 300, init, SeedSpec{99});
  auto dens = question_density(traj);
  CHECK(dens.back() < 0.05);

  PcaSpec frozen = spec(2, 0, 1, 0, 1);
  Trajectory still = run(frozen, 512, 50, init, SeedSpec{99});
  CHECK(question_density(still).back() == 1.0);
}
