#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/noise.hpp"
#include "core/rng.hpp"
#include "core/row.hpp"

#include <cmath>

using namespace hcpca;

TEST_CASE("noise validation") {
  NoiseParams p = validate_noise(rat(1, 10), rat(1, 10));
  CHECK(p.r == rat(4, 5));
  CHECK(p.theorem_scope);

  CHECK_THROWS_AS(validate_noise(rat(3, 5), rat(3, 5)), NoiseError);
  CHECK_THROWS_AS(validate_noise(rat(-1, 10), rat(0)), NoiseError);
  try {
    validate_noise(rat(3, 5), rat(3, 5));
  } catch (const NoiseError& e) {
    CHECK(e.kind == NoiseError::mass_exceeded);
  }

  NoiseParams zero = validate_noise(rat(0), rat(0));
  CHECK(zero.r == rat(1));
  CHECK(!zero.theorem_scope);  // the origin sits outside the theorem domain

  // boundary values are allowed, never clamped
  NoiseParams edge = validate_noise(rat(3, 5), rat(2, 5));
  CHECK(edge.r == rat(0));
  CHECK(!edge.theorem_scope);
}

TEST_CASE("site labels follow the fixed interval order") {
  NoiseParams p = validate_noise(rat(1, 10), rat(1, 5));  // eps0=0.1, eps1=0.2
  CHECK(site_label(p, 0.05) == SiteLabel::trap);     // < eps1
  CHECK(site_label(p, 0.25) == SiteLabel::target);   // eps1 <= u < eps1+eps0
  CHECK(site_label(p, 0.35) == SiteLabel::open_site);

  NoiseParams open_only = validate_noise(rat(0), rat(0));
  CHECK(site_label(open_only, 0.0) == SiteLabel::open_site);
  CHECK(site_label(open_only, 0.999999) == SiteLabel::open_site);
}

TEST_CASE("counter draws are reproducible and schedule-free") {
  SeedSpec seed{123456789};
  for (uint64_t trial : {0ULL, 5ULL}) {
    for (uint64_t t : {0ULL, 17ULL}) {
      for (uint64_t cell : {0ULL, 4095ULL}) {
        CHECK(draw_u64(seed, trial, t, cell) == draw_u64(seed, trial, t, cell));
      }
    }
  }
  CHECK(draw_u64(seed, 0, 0, 0) != draw_u64(seed, 0, 0, 1));
  CHECK(draw_u64(seed, 0, 0, 0) != draw_u64(seed, 0, 1, 0));
  CHECK(draw_u64(seed, 0, 0, 0) != draw_u64(SeedSpec{7}, 0, 0, 0));
}

TEST_CASE("label frequencies match the noise within 4 sigma") {
  NoiseParams p = validate_noise(rat(1, 5), rat(3, 10));  // eps0=0.2, eps1=0.3
  SeedSpec seed{2024};
  const int N = 1000000;
  int traps = 0, targets = 0;
  for (int i = 0; i < N; ++i) {
    SiteLabel lab = site_label(p, draw_unit(seed, 0, 0, static_cast<uint64_t>(i)));
    traps += lab == SiteLabel::trap;
    targets += lab == SiteLabel::target;
  }
  auto within = [&](int count, double prob) {
    double sigma = std::sqrt(prob * (1 - prob) * N);
    return std::abs(count - prob * N) < 4 * sigma;
  };
  CHECK(within(traps, 0.3));
  CHECK(within(targets, 0.2));
}

TEST_CASE("rows pack and round-trip") {
  Row r = Row::from_string("01?10?");
  CHECK(r.width() == 6);
  CHECK(r.get(0) == Cell::zero);
  CHECK(r.get(1) == Cell::one);
  CHECK(r.get(2) == Cell::undet);
  CHECK(r.get(8) == Cell::undet);   // periodic: 8 mod 6 = 2
  CHECK(r.get(-1) == Cell::undet);  // -1 mod 6 = 5
  CHECK(r.count_undet() == 2);
  CHECK(r.count_ones() == 2);
  CHECK(r.to_string() == "01?10?");

  Row wide(130, Cell::undet);
  CHECK(wide.count_undet() == 130);
  wide.set(129, Cell::one);
  CHECK(wide.count_undet() == 129);
  CHECK(wide.is_one(129));
  CHECK_THROWS(Row::from_string("01x"));
}

TEST_CASE("half positions compare and add exactly") {
  HalfPos a = HalfPos::whole(3);
  HalfPos b = HalfPos::halves(-1);  // -1/2
  CHECK((a + b).doubled == 5);
  CHECK(a - b == HalfPos::halves(7));
  CHECK(b < a);
  CHECK(HalfPos::whole(2).doubled % 2 == 0);
  CHECK(a.value() == 3.0);
  CHECK(b.value() == -0.5);
}
