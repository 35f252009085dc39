#include "drift/certificates.hpp"

#include "drift/drifts.hpp"

namespace hcpca {

namespace {

std::string mono_str(const Mono& m) {
  Poly p = Poly::mono(rat(1), m.a0, m.a1);
  return canonical_string(p);
}

Poly binom_pow(unsigned k) {  // (e0 + e1)^k
  return (Poly::e0() + Poly::e1()).pow(k);
}

}  // namespace

CertReplay verify_certificate(const Certificate& cert) {
  CertReplay out;

  // target - floor - d (1-r)^p / r must reduce to a plain polynomial
  RatFn poly_part = cert.target - RatFn(cert.floor_);
  if (cert.series_d != 0) {
    Poly s = binom_pow(cert.series_p);  // (1-r)^p
    poly_part -= cert.series_d * RatFn(s, 1);
  }
  auto base = poly_part.as_poly();
  if (!base) {
    out.gap = "target does not split as floor + d(1-r)^p/r + polynomial";
    return out;
  }
  Poly w = *base;

  // exchange the series part for its truncated expansion
  if (cert.series_d != 0)
    for (unsigned k = cert.series_p; k <= cert.series_trunc; ++k)
      w += cert.series_d * binom_pow(k);

  for (const CertStep& st : cert.steps) {
    if (st.c <= 0) {
      out.gap = "nonpositive step coefficient";
      return out;
    }
    switch (st.kind) {
      case CertStep::group:
        if (st.b.a0 < st.a.a0 || st.b.a1 < st.a.a1) {
          out.gap = "group step without divisibility: " + mono_str(st.a);
          return out;
        }
        w -= Poly::mono(st.c, st.a.a0, st.a.a1);
        w += Poly::mono(st.c, st.b.a0, st.b.a1);
        break;
      case CertStep::square: {
        unsigned g0 = st.a.a0 + st.b.a0, g1 = st.a.a1 + st.b.a1;
        if (g0 % 2 || g1 % 2) {
          out.gap = "square step with odd product exponents";
          return out;
        }
        Poly sq = Poly::mono(st.c, st.a.a0, st.a.a1) + Poly::mono(st.c, st.b.a0, st.b.a1) -
                  Poly::mono(2 * st.c, g0 / 2, g1 / 2);
        w -= sq;
        out.squares += sq;
        break;
      }
      case CertStep::halve: {
        if (st.a.a0 < st.k0 || st.a.a1 < st.k1) {
          out.gap = "halve step strips more than the monomial holds";
          return out;
        }
        w += Poly::mono(st.c, st.a.a0, st.a.a1);
        Rat scale = st.c;
        for (unsigned i = 0; i < st.k0 + st.k1; ++i) scale /= 2;
        w -= Poly::mono(scale, st.a.a0 - st.k0, st.a.a1 - st.k1);
        break;
      }
    }
  }

  out.pre_square = w + out.squares;
  out.residual = w;

  bool pure_e0 = false, pure_e1 = false;
  for (const auto& [m, c] : w.terms()) {
    if (c < 0) {
      out.gap = "negative residual coefficient " + rat_str(c) + " on " + mono_str(m);
      return out;
    }
    if (m.a1 == 0 && m.a0 > 0 && c > 0) pure_e0 = true;
    if (m.a0 == 0 && m.a1 > 0 && c > 0) pure_e1 = true;
  }
  if (!pure_e0 || !pure_e1) {
    out.gap = "residual lacks strictly positive axis terms";
    return out;
  }
  out.pass = true;
  return out;
}

namespace {

CertStep grp(long c, unsigned a0, unsigned a1, unsigned b0, unsigned b1) {
  return CertStep{CertStep::group, rat(c), Mono{a0, a1}, Mono{b0, b1}, 0, 0};
}
CertStep grp(const Rat& c, unsigned a0, unsigned a1, unsigned b0, unsigned b1) {
  return CertStep{CertStep::group, c, Mono{a0, a1}, Mono{b0, b1}, 0, 0};
}
CertStep sqr(long c, unsigned a0, unsigned a1, unsigned b0, unsigned b1) {
  return CertStep{CertStep::square, rat(c), Mono{a0, a1}, Mono{b0, b1}, 0, 0};
}
CertStep hlv(long c, unsigned a0, unsigned a1, unsigned k0, unsigned k1) {
  return CertStep{CertStep::halve, rat(c), Mono{a0, a1}, Mono{}, k0, k1};
}
CertStep hlv(const Rat& c, unsigned a0, unsigned a1, unsigned k0, unsigned k1) {
  return CertStep{CertStep::halve, c, Mono{a0, a1}, Mono{}, k0, k1};
}

}  // namespace

std::vector<Certificate> builtin_certificates() {
  std::vector<Certificate> certs;

  {
    Certificate c;
    c.name = "two-step-00-n2";
    c.target = two_step_00_n2().value;
    c.floor_ = rat(-1);
    c.series_d = rat(2);
    c.series_p = 2;
    c.series_trunc = 2;
    c.steps = {grp(rat(7, 2), 4, 0, 5, 0), grp(1, 3, 2, 4, 2), grp(2, 3, 2, 3, 3),
               grp(4, 2, 1, 3, 1),        grp(rat(1, 2), 2, 0, 3, 0),
               grp(1, 1, 3, 1, 4),        grp(rat(1, 2), 1, 2, 1, 4),
               grp(rat(3, 2), 0, 1, 4, 1), grp(rat(1, 2), 0, 1, 1, 1),
               grp(rat(1, 2), 0, 2, 0, 3), hlv(rat(13, 2), 2, 2, 2, 0)};
    certs.push_back(std::move(c));
  }
  {
    Certificate c;
    c.name = "two-step-1000";
    c.target = two_step_1000().value;
    c.floor_ = rat(-2);
    c.series_d = rat(2);
    c.series_p = 3;
    c.series_trunc = 8;
    c.steps = {grp(3, 0, 2, 0, 3),  grp(6, 1, 5, 1, 6),  grp(5, 1, 5, 2, 6),
               grp(12, 2, 3, 2, 4), grp(12, 3, 3, 3, 4), grp(3, 3, 3, 4, 5),
               grp(1, 4, 0, 5, 0),  grp(2, 4, 0, 5, 4),  grp(3, 7, 0, 8, 0),
               grp(43, 4, 2, 4, 3), grp(5, 1, 3, 1, 4),  grp(1, 2, 1, 2, 2),
               grp(5, 3, 1, 3, 2),  grp(14, 3, 1, 4, 1), grp(1, 6, 2, 6, 3)};
    certs.push_back(std::move(c));
  }
  {
    Certificate c;
    c.name = "recent-one-vs-0000-bound";
    c.target = drift1(kernel_n3_recent_one()).value - drift1(kernel_n3_0000()).value;
    c.floor_ = rat(0);
    c.series_d = rat(0);
    c.steps = {hlv(3, 0, 3, 0, 2), hlv(3, 2, 1, 1, 1), hlv(4, 3, 0, 2, 0),
               hlv(2, 3, 0, 1, 0), sqr(1, 2, 0, 0, 2)};
    certs.push_back(std::move(c));
  }
  {
    Certificate c;
    c.name = "recent-one-vs-1000";
    c.target = drift1(kernel_n3_recent_one()).value - drift1(kernel_n3_1000()).value;
    c.floor_ = rat(0);
    c.series_d = rat(0);
    c.steps = {hlv(3, 0, 3, 0, 2), hlv(1, 1, 1, 0, 1), hlv(1, 2, 1, 2, 0),
               hlv(2, 3, 0, 2, 0), hlv(2, 1, 2, 0, 2)};
    certs.push_back(std::move(c));
  }
  {
    Certificate c;
    c.name = "two-step-0000-min-i0";
    c.target = two_step_0000().min_is_0000_bound.value;
    c.floor_ = rat(-2);
    c.series_d = rat(2);
    c.series_p = 3;
    c.series_trunc = 8;
    c.steps = {hlv(7, 4, 0, 1, 0),  grp(1, 0, 2, 0, 3), grp(1, 3, 5, 3, 6),
               grp(6, 5, 0, 5, 1),  grp(1, 5, 0, 6, 0), grp(8, 7, 0, 8, 0)};
    certs.push_back(std::move(c));
  }
  {
    Certificate c;
    c.name = "two-step-0000-min-1000";
    c.target = two_step_0000().min_is_1000.value;
    c.floor_ = rat(-2);
    c.series_d = rat(2);
    c.series_p = 3;
    c.series_trunc = 8;
    c.steps = {grp(1, 0, 2, 0, 3),  grp(5, 3, 0, 4, 0),  grp(4, 5, 3, 5, 4),
               grp(5, 5, 0, 6, 0),  grp(4, 6, 2, 6, 3),  grp(20, 6, 1, 7, 1),
               grp(22, 7, 0, 8, 0)};
    certs.push_back(std::move(c));
  }
  return certs;
}

GridScan grid_scan(const RatFn& target, const Rat& floor_, const Rat& step) {
  Rat half = rat(1, 2);
  Rat inv = half / step;
  if (inv.get_den() != 1) throw std::invalid_argument("grid step must divide 1/2");
  long kmax = static_cast<long>(inv.get_num().get_si());
  GridScan out;
  bool first = true;
  for (long a = 0; a <= kmax; ++a) {
    for (long b = 0; b <= kmax; ++b) {
      if (a == 0 && b == 0) continue;
      Rat e0 = rat(a) * step, e1 = rat(b) * step;
      if (e0 + e1 >= 1) continue;  // r = 0 excluded
      Rat v = target.eval(e0, e1) - floor_;
      ++out.points;
      if (first || v < out.minimum) {
        out.minimum = v;
        out.at_eps0 = e0;
        out.at_eps1 = e1;
        first = false;
      }
    }
  }
  out.positive = !first && out.minimum > 0;
  return out;
}

}  // namespace hcpca
