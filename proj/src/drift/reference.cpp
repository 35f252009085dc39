#include "drift/reference.hpp"

namespace hcpca::ref {

namespace {

const Poly kE0 = Poly::e0();
const Poly kE1 = Poly::e1();
const Poly kR = Poly::r_poly();
const Poly kS = kE0 + kE1;  // 1 - r

Poly half() { return Poly(rat(1, 2)); }

struct Term {
  long num, den;
  unsigned a0, a1;
};

Poly from_terms(std::initializer_list<Term> ts) {
  Poly p;
  for (const Term& t : ts) p.add_term(rat(t.num, t.den), t.a0, t.a1);
  return p;
}

}  // namespace

Poly one_step_n2_general() {
  // (e0 + e1)/2 + e1 r + e0 (1-e1) r / 2 + e1^2 r / 2 + (1-r)^2 / 2 + e1^2 / 2
  Poly p = half() * (kE0 + kE1);
  p += kE1 * kR;
  p += half() * kE0 * (Poly(1) - kE1) * kR;
  p += half() * kE1 * kE1 * kR;
  p += half() * kS * kS;
  p += half() * kE1 * kE1;
  return p;
}

RatFn one_step_n2_00_bound() {
  RatFn f(rat(-1, 2) * (kR * kR));
  f += RatFn(rat(-2) * (kE0 * kR));
  f += RatFn(kE0 * kE0 * kR);
  f += RatFn(rat(1, 2) * (kE1 * kE1));
  f += RatFn(kS * kS, 1);
  return f;
}

Poly n2_general_minus_00_bound() {
  // (1-r)^2/2 + e1 r/2 + e1^2 r/2 + e0(1-e1) r/2 + e0(3/2 - e0) r
  Poly p = half() * kS * kS;
  p += half() * kE1 * kR;
  p += half() * kE1 * kE1 * kR;
  p += half() * kE0 * (Poly(1) - kE1) * kR;
  p += kE0 * (Poly(rat(3, 2)) - kE0) * kR;
  return p;
}

Poly one_step_recent_one() {
  // -1 + e0 + 2 e1 + e0^2 + 3 e1^2 (1 - e1) + e0 e1 (1 - e0) + e1^4 + e0^3 e1
  Poly p(-1);
  p += kE0;
  p += rat(2) * kE1;
  p += kE0 * kE0;
  p += rat(3) * kE1 * kE1 * (Poly(1) - kE1);
  p += kE0 * kE1 * (Poly(1) - kE0);
  p += kE1.pow(4);
  p += kE0.pow(3) * kE1;
  return p;
}

Poly one_step_1000() {
  return from_terms({{-1, 1, 0, 0},
                     {-1, 1, 1, 0},
                     {1, 1, 0, 1},
                     {1, 1, 2, 0},
                     {1, 1, 0, 2},
                     {2, 1, 1, 1},
                     {2, 1, 3, 0},
                     {2, 1, 1, 2},
                     {-1, 1, 4, 0},
                     {-1, 1, 1, 3}});
}

Poly one_step_0000_bound() {
  return from_terms({{-1, 1, 0, 0},
                     {-1, 1, 1, 0},
                     {1, 1, 0, 1},
                     {-1, 1, 2, 0},
                     {1, 1, 0, 2},
                     {3, 1, 1, 1},
                     {6, 1, 3, 0},
                     {2, 1, 2, 1},
                     {-3, 1, 4, 0},
                     {-3, 1, 3, 1}});
}

Poly two_step_00_n2() {
  return from_terms({{5, 2, 0, 1},  {1, 2, 2, 0},  {-1, 2, 1, 1}, {1, 2, 0, 2},
                     {-1, 2, 3, 0}, {5, 1, 2, 1},  {1, 2, 1, 2},  {-1, 2, 0, 3},
                     {7, 2, 4, 0},  {-4, 1, 3, 1}, {-13, 2, 2, 2}, {1, 1, 1, 3},
                     {-7, 2, 5, 0}, {-3, 2, 4, 1}, {6, 1, 3, 2},  {5, 2, 2, 3},
                     {-3, 2, 1, 4}, {1, 1, 6, 0},  {3, 2, 5, 1},  {-1, 1, 4, 2},
                     {-2, 1, 3, 3}, {1, 2, 1, 5}});
}

Poly two_step_1000() {
  return from_terms({{3, 1, 0, 1},   {4, 1, 0, 2},  {1, 1, 0, 4},  {2, 1, 1, 1},
                     {3, 1, 1, 2},   {5, 1, 1, 3},  {14, 1, 1, 5}, {1, 1, 1, 7},
                     {7, 1, 2, 1},   {13, 1, 2, 3}, {10, 1, 2, 5}, {1, 1, 2, 7},
                     {11, 1, 3, 1},  {26, 1, 3, 3}, {2, 1, 3, 5},  {3, 1, 4, 0},
                     {49, 1, 4, 2},  {18, 1, 4, 4}, {12, 1, 5, 1}, {11, 1, 5, 3},
                     {2, 1, 6, 2},   {3, 1, 7, 0},  {3, 1, 8, 1},  {2, 1, 9, 0},
                     {-3, 1, 0, 3},  {-15, 1, 1, 4}, {-6, 1, 1, 6}, {-13, 1, 2, 2},
                     {-12, 1, 2, 4}, {-5, 1, 2, 6}, {-25, 1, 3, 2}, {-12, 1, 3, 4},
                     {-24, 1, 4, 1}, {-43, 1, 4, 3}, {-3, 1, 4, 5}, {-1, 1, 5, 0},
                     {-19, 1, 5, 2}, {-2, 1, 5, 4}, {-1, 1, 6, 1}, {-1, 1, 6, 3},
                     {-4, 1, 7, 1},  {-5, 1, 8, 0}});
}

Poly two_step_0000_min_i0() {
  return from_terms({{3, 1, 0, 1},  {4, 1, 0, 2},  {1, 1, 0, 4},  {4, 1, 1, 1},
                     {6, 1, 2, 3},  {5, 1, 2, 5},  {4, 1, 3, 0},  {2, 1, 3, 1},
                     {14, 1, 3, 3}, {5, 1, 3, 5},  {15, 1, 4, 1}, {1, 1, 4, 4},
                     {10, 1, 5, 0}, {15, 1, 5, 2}, {2, 1, 5, 4},  {6, 1, 6, 1},
                     {6, 1, 7, 0},  {3, 1, 7, 2},  {8, 1, 8, 1},  {4, 1, 9, 0},
                     {-3, 1, 0, 3}, {-9, 1, 2, 4}, {-1, 1, 2, 6}, {-10, 1, 3, 2},
                     {-11, 1, 3, 4}, {-1, 1, 3, 6}, {-9, 1, 4, 0}, {-7, 1, 4, 2},
                     {-1, 1, 4, 3}, {-18, 1, 5, 1}, {-8, 1, 5, 3}, {-3, 1, 6, 0},
                     {-4, 1, 6, 2}, {-11, 1, 7, 1}, {-10, 1, 8, 0}});
}

Poly two_step_0000_min_1000() {
  return from_terms({{3, 1, 0, 1},  {4, 1, 0, 2},  {1, 1, 0, 4},  {4, 1, 1, 1},
                     {6, 1, 2, 3},  {5, 1, 2, 5},  {4, 1, 3, 0},  {1, 1, 3, 1},
                     {4, 1, 3, 3},  {7, 1, 4, 1},  {5, 1, 4, 2},  {3, 1, 4, 4},
                     {6, 1, 5, 0},  {14, 1, 5, 3}, {10, 1, 6, 1}, {22, 1, 7, 0},
                     {12, 1, 7, 2}, {20, 1, 8, 1}, {8, 1, 9, 0},
                     {-3, 1, 0, 3}, {-9, 1, 2, 4}, {-1, 1, 2, 6}, {-5, 1, 3, 2},
                     {-1, 1, 3, 4}, {-7, 1, 4, 0}, {-9, 1, 4, 3}, {-15, 1, 5, 2},
                     {-4, 1, 5, 4}, {-7, 1, 6, 0}, {-4, 1, 6, 3}, {-36, 1, 7, 1},
                     {-24, 1, 8, 0}});
}

Poly gap_recent_one_minus_0000_bound() {
  return from_terms({{2, 1, 1, 0}, {1, 1, 0, 1}, {2, 1, 2, 0}, {2, 1, 0, 2},
                     {1, 1, 0, 4}, {4, 1, 3, 1}, {3, 1, 4, 0},
                     {-3, 1, 0, 3}, {-2, 1, 1, 1}, {-3, 1, 2, 1}, {-6, 1, 3, 0}});
}

Poly gap_recent_one_minus_1000() {
  return from_terms({{2, 1, 1, 0}, {1, 1, 0, 1}, {2, 1, 0, 2}, {1, 1, 0, 4},
                     {1, 1, 3, 1}, {1, 1, 4, 0}, {1, 1, 1, 3},
                     {-3, 1, 0, 3}, {-1, 1, 1, 1}, {-1, 1, 2, 1}, {-2, 1, 3, 0},
                     {-2, 1, 1, 2}});
}

Poly gap_recent_one_minus_0000_bound_final() {
  // e0/4 + e1/4 + e1^2 + (e0 - e1)^2 + e1^4 + 4 e0^3 e1 + 3 e0^4
  Poly p = from_terms({{1, 4, 1, 0}, {1, 4, 0, 1}, {1, 1, 0, 2},
                       {1, 1, 0, 4}, {4, 1, 3, 1}, {3, 1, 4, 0}});
  Poly diff = kE0 - kE1;
  p += diff * diff;
  return p;
}

Poly gap_recent_one_minus_1000_final() {
  return from_terms({{1, 2, 1, 0}, {2, 1, 0, 2}, {1, 1, 0, 4},
                     {1, 1, 3, 1}, {1, 1, 4, 0}, {1, 1, 1, 3}});
}

}  // namespace hcpca::ref
