#pragma once

#include "symbolic/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace hcpca {

// Monomial e0^a0 * e1^a1 in the two noise variables.
struct Mono {
  unsigned a0 = 0, a1 = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
};

// Canonical term order: total degree ascending, then a0 descending.
struct MonoOrder {
  bool operator()(const Mono& l, const Mono& r) const {
    unsigned dl = l.a0 + l.a1, dr = r.a0 + r.a1;
    if (dl != dr) return dl < dr;
    return l.a0 > r.a0;
  }
};

// Sparse exact polynomial in (e0, e1) over Rat. Always stored expanded with
// no zero coefficients, so operator== is coefficient-for-coefficient.
class Poly {
 public:
  using Terms = std::map<Mono, Rat, MonoOrder>;

  Poly() = default;
  explicit Poly(const Rat& c) { add_term(c, 0, 0); }
  explicit Poly(long c) { add_term(rat(c), 0, 0); }

  static Poly e0() { return mono(rat(1), 1, 0); }
  static Poly e1() { return mono(rat(1), 0, 1); }
  static Poly r_poly();  // 1 - e0 - e1
  static Poly mono(const Rat& c, unsigned a0, unsigned a1) {
    Poly p;
    p.add_term(c, a0, a1);
    return p;
  }

  void add_term(const Rat& c, unsigned a0, unsigned a1);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend Poly operator-(const Poly& p) { return rat(-1) * p; }
  Poly pow(unsigned k) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  Rat coeff(unsigned a0, unsigned a1) const;
  unsigned total_degree() const;

  Rat eval(const Rat& v0, const Rat& v1) const;
  // Substitute a polynomial for one variable (var 0 -> e0, var 1 -> e1).
  Poly substitute(int var, const Poly& value) const;

  // Exact division; nullopt when the divisor does not divide this polynomial.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  const Terms& terms() const { return terms_; }

 private:
  Terms terms_;
};

// num / r^rpow with r = 1 - e0 - e1, normalized so that r no longer divides
// num while rpow > 0. Equality of normalized forms is structural.
class RatFn {
 public:
  RatFn() = default;
  RatFn(Poly num, unsigned rpow) : num_(std::move(num)), rpow_(rpow) { normalize(); }
  explicit RatFn(const Poly& p) : num_(p), rpow_(0) {}
  explicit RatFn(const Rat& c) : num_(Poly(c)), rpow_(0) {}
  explicit RatFn(long c) : num_(Poly(c)), rpow_(0) {}

  const Poly& num() const { return num_; }
  unsigned rpow() const { return rpow_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const Rat& c, const RatFn& f) { return RatFn(c * f.num_, f.rpow_); }
  friend RatFn operator-(const RatFn& f) { return rat(-1) * f; }

  bool operator==(const RatFn& o) const { return rpow_ == o.rpow_ && num_ == o.num_; }

  // Evaluation requires r(v0, v1) != 0 when rpow > 0.
  Rat eval(const Rat& v0, const Rat& v1) const;

  // The polynomial this reduces to, if rpow normalizes to 0.
  std::optional<Poly> as_poly() const;

 private:
  void normalize();
  Poly num_;
  unsigned rpow_ = 0;
};

// lead * (c + (1-r)/r): closed form of sum_{k>=0} (k+c) (1-r)^k r * lead / r
// -- i.e. the per-family geometric drift tail used by the kernel tables.
RatFn geom_sum(const Rat& c, const RatFn& lead);

// Canonical text form. Terms in canonical order, coefficients "p/q",
// variables "e0"/"e1"; rational functions rendered "(POLY)/r^d".
std::string canonical_string(const Poly& p);
std::string canonical_string(const RatFn& f);
std::optional<Poly> parse_poly(const std::string& text);
std::optional<RatFn> parse_ratfn(const std::string& text);

// JSON export: {"terms":[{"a0":..,"a1":..,"coeff":"p/q"},...],"rpow":d}
std::string to_json(const RatFn& f);

}  // namespace hcpca
