#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symbolic/poly.hpp"

#include <random>

using namespace hcpca;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_terms = 6, int max_deg = 5,
                 int coeff_span = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-coeff_span, coeff_span);
  std::uniform_int_distribution<int> den(1, 4);
  Poly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p.add_term(rat(num(rng), den(rng)), static_cast<unsigned>(deg(rng)),
               static_cast<unsigned>(deg(rng)));
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rat(3, 6)) == "1/2");
  CHECK(rat_str(rat(-4, 2)) == "-2");
  CHECK(*rat_parse("7/21") == rat(1, 3));
  CHECK(*rat_parse("0.125") == rat(1, 8));
  CHECK(*rat_parse("-2.5") == rat(-5, 2));
  CHECK(*rat_parse("  3 ") == rat(3));
  CHECK(!rat_parse("a/b").has_value());
  CHECK(!rat_parse("1/0").has_value());
  CHECK(!rat_parse("").has_value());
  CHECK(rat_round_den(rat(333333333, 1000000000), 10) == rat(3, 10));
  CHECK(rat_round_den(rat(1, 3), 10) == rat(1, 3));  // small den passes through
  CHECK(rat_round_den(rat(1, 8), 1000000) == rat(1, 8));
}

TEST_CASE("polynomial arithmetic basics") {
  Poly s = Poly::e0() + Poly::e1();
  Poly sq = s * s;
  CHECK(sq.coeff(2, 0) == rat(1));
  CHECK(sq.coeff(1, 1) == rat(2));
  CHECK(sq.coeff(0, 2) == rat(1));
  CHECK(sq.total_degree() == 2);

  Poly r = Poly::r_poly();
  CHECK(r.eval(rat(1, 10), rat(1, 10)) == rat(4, 5));
  CHECK((r + s) == Poly(1));
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 60; ++it) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Poly());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  Rat x = rat(2, 7), y = rat(-3, 5);
  for (int it = 0; it < 40; ++it) {
    Poly a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y));
    CHECK((a + b).eval(x, y) == a.eval(x, y) + b.eval(x, y));
  }
}

TEST_CASE("substitution round-trips r") {
  // substituting e0 := e0 into r * p recovers r * p; and replacing e1 by
  // (1 - e0 - r)|_{r -> poly} style checks via explicit identity:
  Poly r = Poly::r_poly();
  Poly p = Poly::mono(rat(3, 2), 1, 2) + Poly(1);
  Poly rp = r * p;
  CHECK(rp.substitute(0, Poly::e0()) == rp);
  // (e0 + e1)^2 expanded then e1 := 0 leaves e0^2
  Poly s2 = (Poly::e0() + Poly::e1()).pow(2);
  CHECK(s2.substitute(1, Poly()) == Poly::e0().pow(2));
}

TEST_CASE("exact division by r") {
  Poly r = Poly::r_poly();
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    Poly q = random_poly(rng);
    Poly p = q * r;
    auto back = p.divide_exact(r);
    if (q.is_zero()) {
      CHECK((!back.has_value() || back->is_zero()));
    } else {
      REQUIRE(back.has_value());
      CHECK(*back == q);
    }
  }
  CHECK(!Poly(1).divide_exact(r).has_value());
  CHECK(!(Poly::e0() + Poly(1)).divide_exact(r).has_value());
}

TEST_CASE("rational functions normalize and compare") {
  Poly r = Poly::r_poly();
  RatFn a(r * r, 1);  // r^2 / r == r
  CHECK(a == RatFn(r));
  CHECK(a.rpow() == 0);

  RatFn one_over_r(Poly(1), 1);
  RatFn sum = one_over_r + RatFn(rat(-1));
  // 1/r - 1 = (1-r)/r
  CHECK(sum == RatFn(Poly(1) - r, 1));

  // equality agrees with evaluation at random rational points with r > 0
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(0, 3);
  for (int it = 0; it < 25; ++it) {
    Poly pa = random_poly(rng);
    RatFn fa(pa, 2), fb(pa * r, 3);
    CHECK(fa == fb);
    Rat x = rat(num(rng), 10), y = rat(num(rng), 10);
    CHECK(fa.eval(x, y) == fb.eval(x, y));
  }
}

TEST_CASE("geometric sums") {
  // c = 0: (1-r)/r evaluates to 1 at r = 1/2; compare a 64-term numeric sum
  RatFn g0 = geom_sum(rat(0), RatFn(1));
  Rat at_half = g0.eval(rat(1, 4), rat(1, 4));  // r = 1/2
  CHECK(at_half == rat(1));
  double truncated = 0;  // sum_k k (1-r)^k r, 64 terms
  for (int k = 0; k <= 64; ++k) truncated += k * std::pow(0.5, k) * 0.5;
  CHECK(std::abs(rat_double(at_half) - truncated) < 1e-12);

  // r = 1: only the k = 0 term survives, value c
  RatFn g = geom_sum(rat(7, 2), RatFn(1));
  CHECK(g.eval(rat(0), rat(0)) == rat(7, 2));

  // mass form: lead/r with lead = r gives total mass 1 at any r in (0,1]
  RatFn mass(Poly::r_poly(), 1);
  CHECK(mass.eval(rat(1, 3), rat(1, 3)) == rat(1));
  CHECK(mass.eval(rat(0), rat(0)) == rat(1));
}

TEST_CASE("canonical strings") {
  Poly p(1);
  p.add_term(rat(-3, 2), 2, 1);
  CHECK(canonical_string(p) == "1 - 3/2*e0^2*e1");
  CHECK(canonical_string(Poly()) == "0");
  CHECK(canonical_string(Poly::e1()) == "e1");
  Poly q = Poly::mono(rat(-1), 0, 4);
  CHECK(canonical_string(q) == "-e1^4");

  RatFn f(Poly(1) - Poly::r_poly(), 1);
  CHECK(canonical_string(f) == "(e0 + e1)/r^1");
}

TEST_CASE("canonical string round-trip") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 80; ++it) {
    Poly p = random_poly(rng);
    auto back = parse_poly(canonical_string(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
    RatFn f(p, static_cast<unsigned>(it % 3));
    auto fb = parse_ratfn(canonical_string(f));
    REQUIRE(fb.has_value());
    CHECK(*fb == f);
  }
  CHECK(!parse_poly("1 + + e0").has_value());
  CHECK(!parse_poly("e2").has_value());
  CHECK(!parse_poly("").has_value());
}

TEST_CASE("json export shape") {
  Poly p(1);
  p.add_term(rat(-3, 2), 2, 1);
  std::string j = to_json(RatFn(p, 2));
  CHECK(j.find("\"rpow\":2") != std::string::npos);
  CHECK(j.find("\"coeff\":\"-3/2\"") != std::string::npos);
}
