#include "drift/kernels.hpp"

namespace hcpca {

namespace {

const Poly kE0 = Poly::e0();
const Poly kE1 = Poly::e1();
const Poly kR = Poly::r_poly();
const Poly kOneMinusE0 = Poly(1) - Poly::e0();
const Poly kOneMinusE1 = Poly(1) - Poly::e1();
const Poly kS = Poly::e0() + Poly::e1();  // 1 - r

HalfPos half(int64_t d) { return HalfPos::halves(d); }
HalfPos whole(int64_t v) { return HalfPos::whole(v); }

void fin(Kernel& k, HalfPos d, BoundaryClass c, Poly p, bool lb = false) {
  k.entries.push_back(KernelEntry{d, c, std::move(p), false, lb});
}
void geo(Kernel& k, HalfPos d, BoundaryClass c, Poly p) {
  k.entries.push_back(KernelEntry{d, c, std::move(p), true, false});
}

}  // namespace

Kernel kernel_n2_general() {
  Kernel k{2, "general", {}};
  fin(k, whole(-1), BoundaryClass::p10, kE1 * kOneMinusE1 * kR);
  fin(k, half(-1), BoundaryClass::p00, kOneMinusE1 * kOneMinusE1 * kR);
  fin(k, whole(0), BoundaryClass::p01, kOneMinusE1 * kE1 * kR);
  fin(k, whole(0), BoundaryClass::p11, kE1 * kE1 * kR);
  fin(k, whole(0), BoundaryClass::p10, kE1 * kE0 * kR);
  fin(k, half(1), BoundaryClass::p00, kOneMinusE1 * kE0 * kR);
  fin(k, whole(1), BoundaryClass::p01, kOneMinusE1 * kE1 * kR);
  fin(k, whole(1), BoundaryClass::p11, kE1 * kE1 * kR);
  geo(k, whole(1), BoundaryClass::p10, kE1 * kE0 * kR);
  geo(k, half(3), BoundaryClass::p00, kE0 * kE0 * kR);
  geo(k, whole(2), BoundaryClass::p01, kE0 * kE1 * kR);
  geo(k, whole(2), BoundaryClass::p11, kE1 * kE1 * kR);
  return k;
}

Kernel kernel_n2_00() {
  Kernel k{2, "00", {}};
  fin(k, half(-3), BoundaryClass::star0, kE0 * kR * kR, /*lb=*/true);
  fin(k, half(-3), BoundaryClass::p10, kE1 * kE0 * kR);
  fin(k, whole(-1), BoundaryClass::p00, kE0 * kE0 * kR);
  fin(k, half(-1), BoundaryClass::p01, kE0 * kOneMinusE0 * kR);
  fin(k, half(-1), BoundaryClass::p11, kE1 * kOneMinusE0 * kR);
  fin(k, half(-1), BoundaryClass::star1, kR * kOneMinusE0 * kR);
  fin(k, half(-1), BoundaryClass::p10, kOneMinusE0 * kE0 * kR);
  fin(k, whole(0), BoundaryClass::p00, kE0 * kE0 * kR);
  fin(k, half(1), BoundaryClass::p01, kE0 * kE1 * kR);
  fin(k, half(1), BoundaryClass::p11, kOneMinusE0 * kE1 * kR);
  geo(k, half(1), BoundaryClass::p10, kE1 * kE0 * kR);
  geo(k, whole(1), BoundaryClass::p00, kE0 * kE0 * kR);
  geo(k, half(3), BoundaryClass::p01, kE0 * kE1 * kR);
  geo(k, half(3), BoundaryClass::p11, kE1 * kE1 * kR);
  return k;
}

Kernel kernel_n3_recent_one() {
  Kernel k{3, "recent-one", {}};
  for (int kk = 0; kk <= 2; ++kk)
    fin(k, whole(-1 + kk), BoundaryClass::star000,
        kOneMinusE1.pow(static_cast<unsigned>(3 - kk)) * kE0.pow(static_cast<unsigned>(kk)) * kR);
  geo(k, whole(2), BoundaryClass::star000, kE0.pow(3) * kR);
  for (int l = 0; l <= 2; ++l)
    for (int kk = 0; kk <= l; ++kk)
      fin(k, whole(-l + kk), BoundaryClass::other,
          kE1 * kOneMinusE1.pow(static_cast<unsigned>(l - kk)) *
              kE0.pow(static_cast<unsigned>(kk)) * kR);
  for (int l = 0; l <= 1; ++l)
    for (int kk = l + 1; kk <= 2; ++kk)
      fin(k, whole(-l + kk), BoundaryClass::other,
          kS.pow(static_cast<unsigned>(kk - l - 1)) * kE1 *
              kE0.pow(static_cast<unsigned>(l)) * kR);
  for (int l = 0; l <= 2; ++l)
    geo(k, whole(3 - l), BoundaryClass::other,
        kS.pow(static_cast<unsigned>(2 - l)) * kE1 * kE0.pow(static_cast<unsigned>(l)) * kR);
  return k;
}

Kernel kernel_n3_1000() {
  Kernel k{3, "1000", {}};
  for (int kk = 0; kk <= 3; ++kk)
    fin(k, whole(-2 + kk), BoundaryClass::q0000,
        kOneMinusE1.pow(static_cast<unsigned>(3 - kk)) *
            kE0.pow(static_cast<unsigned>(1 + kk)) * kR);
  for (int kk = 0; kk <= 2; ++kk)
    fin(k, whole(-2 + kk), BoundaryClass::q1000,
        kE1 * kOneMinusE1.pow(static_cast<unsigned>(2 - kk)) *
            kE0.pow(static_cast<unsigned>(1 + kk)) * kR);
  fin(k, whole(1), BoundaryClass::q1000, kOneMinusE0 * kE0.pow(3) * kR);
  for (int l = 1; l <= 2; ++l)
    for (int kk = 0; kk <= l - 1; ++kk)
      fin(k, whole(-1 + kk - l), BoundaryClass::other,
          kE0.pow(static_cast<unsigned>(kk + 1)) * kE1 *
              kOneMinusE1.pow(static_cast<unsigned>(l - kk - 1)) * kR);
  for (int l = 0; l <= 2; ++l)
    fin(k, whole(-1), BoundaryClass::other, kOneMinusE0 * kE0.pow(static_cast<unsigned>(l)) * kR);
  for (int l = 0; l <= 2; ++l)
    for (int kk = l + 1; kk <= 3; ++kk)
      fin(k, whole(-1 + kk - l), BoundaryClass::other,
          kS.pow(static_cast<unsigned>(kk - l - 1)) * kE1 *
              kE0.pow(static_cast<unsigned>(l)) * kR);
  geo(k, whole(2), BoundaryClass::q0000, kE0.pow(4) * kR);
  geo(k, whole(2), BoundaryClass::q1000, kE1 * kE0.pow(3) * kR);
  for (int l = 0; l <= 2; ++l)
    geo(k, whole(3 - l), BoundaryClass::other,
        kS.pow(static_cast<unsigned>(3 - l)) * kE1 * kE0.pow(static_cast<unsigned>(l)) * kR);
  return k;
}

Kernel kernel_n3_0000() {
  Kernel k{3, "0000", {}};
  fin(k, whole(-3), BoundaryClass::one_star00, kE1 * kR * kE0 * kE0 * kR, /*lb=*/true);
  fin(k, whole(-3), BoundaryClass::star_pair00, kOneMinusE1 * kR * kE0 * kE0 * kR, /*lb=*/true);
  for (int kk = 0; kk <= 1; ++kk)
    fin(k, whole(-2 + kk), BoundaryClass::star000, kR * kE0.pow(3) * kR);
  fin(k, whole(-3), BoundaryClass::other, kE1 * kE0 * kE0 * kR);
  fin(k, whole(-2), BoundaryClass::other, kOneMinusE0 * kE0 * kE0 * kR);
  for (int kk = 0; kk <= 3; ++kk)
    fin(k, whole(-2 + kk), BoundaryClass::q0000, kE0.pow(4) * kR);
  for (int kk = 0; kk <= 1; ++kk)
    fin(k, whole(-2 + kk), BoundaryClass::q1000, kE1 * kE0.pow(3) * kR);
  for (int kk = 2; kk <= 3; ++kk)
    fin(k, whole(-2 + kk), BoundaryClass::q1000, kOneMinusE0 * kE0.pow(3) * kR);
  fin(k, whole(-1), BoundaryClass::other, kOneMinusE0 * kR);
  fin(k, whole(0), BoundaryClass::other, kE1 * kR);
  fin(k, whole(-2), BoundaryClass::other, kOneMinusE0 * kE0 * kR);
  fin(k, whole(-1), BoundaryClass::other, kOneMinusE0 * kE0 * kR);
  for (int kk = 0; kk <= 1; ++kk)
    fin(k, whole(1 + kk), BoundaryClass::other, kS.pow(static_cast<unsigned>(kk + 1)) * kE1 * kR);
  for (int kk = 0; kk <= 1; ++kk)
    fin(k, whole(kk), BoundaryClass::other, kS.pow(static_cast<unsigned>(kk)) * kE1 * kE0 * kR);
  fin(k, whole(-1), BoundaryClass::other, kOneMinusE0 * kE0 * kE0 * kR);
  fin(k, whole(0), BoundaryClass::other, kE1 * kE0 * kE0 * kR);
  geo(k, whole(2), BoundaryClass::q0000, kE0.pow(4) * kR);
  geo(k, whole(2), BoundaryClass::q1000, kE1 * kE0.pow(3) * kR);
  for (int l = 0; l <= 2; ++l)
    geo(k, whole(3 - l), BoundaryClass::other,
        kS.pow(static_cast<unsigned>(3 - l)) * kE1 * kE0.pow(static_cast<unsigned>(l)) * kR);
  return k;
}

RatFn kernel_mass(const Kernel& k) {
  RatFn total;
  for (const auto& e : k.entries) {
    if (e.geometric)
      total += RatFn(e.prob, 1);  // sum_k coeff (1-r)^k = coeff / r
    else
      total += RatFn(e.prob);
  }
  return total;
}

Drift drift1(const Kernel& k) {
  Drift d;
  for (const auto& e : k.entries) {
    Rat c(e.delta.doubled, 2);
    c.canonicalize();
    if (e.geometric)
      d.value += geom_sum(c, RatFn(e.prob, 1));
    else
      d.value += c * RatFn(e.prob);
    d.lower_bound |= e.lower_bound;
  }
  return d;
}

std::map<BoundaryClass, RatFn> class_marginals(const Kernel& k) {
  std::map<BoundaryClass, RatFn> out;
  for (const auto& e : k.entries) {
    RatFn m = e.geometric ? RatFn(e.prob, 1) : RatFn(e.prob);
    out[e.next] += m;
  }
  return out;
}

}  // namespace hcpca
