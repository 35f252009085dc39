#include "symbolic/poly.hpp"

#include <json.hpp>

#include <sstream>

namespace hcpca {

Poly Poly::r_poly() {
  Poly p(1);
  p.add_term(rat(-1), 1, 0);
  p.add_term(rat(-1), 0, 1);
  return p;
}

void Poly::add_term(const Rat& c, unsigned a0, unsigned a1) {
  if (c == 0) return;
  Mono m{a0, a1};
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m.a0, m.a1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m.a0, m.a1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(ca * cb, ma.a0 + mb.a0, ma.a1 + mb.a1);
  return out;
}

Poly operator*(const Rat& c, const Poly& p) {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, pc] : p.terms_) out.add_term(c * pc, m.a0, m.a1);
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly out(1);
  Poly base = *this;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

Rat Poly::coeff(unsigned a0, unsigned a1) const {
  auto it = terms_.find(Mono{a0, a1});
  return it == terms_.end() ? rat(0) : it->second;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.a0 + m.a1);
  return d;
}

Rat Poly::eval(const Rat& v0, const Rat& v1) const {
  // Horner is overkill at these degrees; powers are cached instead.
  std::map<unsigned, Rat> p0{{0, rat(1)}}, p1{{0, rat(1)}};
  auto power = [](std::map<unsigned, Rat>& cache, const Rat& v, unsigned k) -> Rat {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto lb = cache.upper_bound(k);
    --lb;  // largest cached exponent below k; key 0 is always present
    Rat acc = lb->second;
    for (unsigned i = lb->first; i < k; ++i) acc *= v;
    cache.emplace(k, acc);
    return acc;
  };
  Rat out = rat(0);
  for (const auto& [m, c] : terms_) out += c * power(p0, v0, m.a0) * power(p1, v1, m.a1);
  return out;
}

Poly Poly::substitute(int var, const Poly& value) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::mono(c, var == 0 ? 0 : m.a0, var == 1 ? 0 : m.a1);
    out += term * value.pow(var == 0 ? m.a0 : m.a1);
  }
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  // Single-divisor multivariate division, cancelling against the divisor's
  // leading term under lex(e0 > e1). For a principal ideal the remainder is
  // canonical, so "divides exactly" is simply "remainder reaches zero".
  auto lex_leading = [](const Poly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
      if (it->first.a0 > best->first.a0 ||
          (it->first.a0 == best->first.a0 && it->first.a1 > best->first.a1))
        best = it;
    }
    return best;
  };
  auto dl = lex_leading(divisor);
  Mono dm = dl->first;
  Rat dc = dl->second;

  Poly rem = *this;
  Poly quot;
  while (!rem.is_zero()) {
    // pick the lex-leading term of rem divisible by dm; if none, fail
    const std::pair<const Mono, Rat>* pick = nullptr;
    for (const auto& t : rem.terms()) {
      if (t.first.a0 >= dm.a0 && t.first.a1 >= dm.a1) {
        if (!pick || t.first.a0 > pick->first.a0 ||
            (t.first.a0 == pick->first.a0 && t.first.a1 > pick->first.a1))
          pick = &t;
      }
    }
    if (!pick) return std::nullopt;
    Rat qc = pick->second / dc;
    Mono qm{pick->first.a0 - dm.a0, pick->first.a1 - dm.a1};
    Poly qt = Poly::mono(qc, qm.a0, qm.a1);
    quot += qt;
    rem -= qt * divisor;
  }
  return quot;
}

void RatFn::normalize() {
  static const Poly r = Poly::r_poly();
  while (rpow_ > 0 && !num_.is_zero()) {
    auto q = num_.divide_exact(r);
    if (!q) break;
    num_ = std::move(*q);
    --rpow_;
  }
  if (num_.is_zero()) rpow_ = 0;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  static const Poly r = Poly::r_poly();
  unsigned p = std::max(rpow_, o.rpow_);
  Poly a = num_ * r.pow(p - rpow_);
  Poly b = o.num_ * r.pow(p - o.rpow_);
  num_ = a + b;
  rpow_ = p;
  normalize();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += rat(-1) * o; }

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.rpow_ + b.rpow_);
}

Rat RatFn::eval(const Rat& v0, const Rat& v1) const {
  Rat out = num_.eval(v0, v1);
  if (rpow_ > 0) {
    Rat rv = rat(1) - v0 - v1;
    if (rv == 0) throw std::domain_error("RatFn::eval at r = 0");
    for (unsigned i = 0; i < rpow_; ++i) out /= rv;
  }
  return out;
}

std::optional<Poly> RatFn::as_poly() const {
  if (rpow_ == 0) return num_;
  return std::nullopt;
}

RatFn geom_sum(const Rat& c, const RatFn& lead) {
  // sum_{k>=0} (k+c)(1-r)^k = (c r + (1-r)) / r^2; the caller's `lead`
  // conventionally carries the family's per-term probability factor.
  Poly r = Poly::r_poly();
  Poly num = c * r + (Poly(1) - r);
  return lead * RatFn(num, 1);
}

namespace {

std::string mono_string(const Rat& c, const Mono& m) {
  std::string var;
  if (m.a0 > 0) {
    var += "e0";
    if (m.a0 > 1) var += "^" + std::to_string(m.a0);
  }
  if (m.a1 > 0) {
    if (!var.empty()) var += "*";
    var += "e1";
    if (m.a1 > 1) var += "^" + std::to_string(m.a1);
  }
  Rat a = c < 0 ? Rat(-c) : c;
  if (var.empty()) return rat_str(a);
  if (a == 1) return var;
  return rat_str(a) + "*" + var;
}

}  // namespace

std::string canonical_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += mono_string(c, m);
  }
  return out;
}

std::string canonical_string(const RatFn& f) {
  if (f.rpow() == 0) return canonical_string(f.num());
  return "(" + canonical_string(f.num()) + ")/r^" + std::to_string(f.rpow());
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::optional<unsigned long> uint_lit() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return std::nullopt;
    unsigned long v = std::stoul(s.substr(i, j - i));
    i = j;
    return v;
  }
};

// term := coeff? ('*'? var)*  with var := ("e0"|"e1") ('^' uint)?
std::optional<Poly> parse_term(Scanner& sc, bool negative) {
  Rat coeff = rat(1);
  unsigned a0 = 0, a1 = 0;
  bool any = false;

  sc.skip_ws();
  if (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))) {
    auto num = sc.uint_lit();
    if (!num) return std::nullopt;
    mpz_class n(std::to_string(*num));
    mpz_class d(1);
    if (sc.eat('/')) {
      auto den = sc.uint_lit();
      if (!den || *den == 0) return std::nullopt;
      d = mpz_class(std::to_string(*den));
    }
    coeff = Rat(n, d);
    coeff.canonicalize();
    any = true;
  }
  while (true) {
    size_t save = sc.i;
    bool star = sc.eat('*');
    sc.skip_ws();
    if (sc.i + 1 < sc.s.size() && sc.s[sc.i] == 'e' &&
        (sc.s[sc.i + 1] == '0' || sc.s[sc.i + 1] == '1')) {
      int var = sc.s[sc.i + 1] - '0';
      sc.i += 2;
      unsigned long k = 1;
      if (sc.eat('^')) {
        auto e = sc.uint_lit();
        if (!e) return std::nullopt;
        k = *e;
      }
      (var == 0 ? a0 : a1) += static_cast<unsigned>(k);
      any = true;
    } else {
      if (star) return std::nullopt;
      sc.i = save;
      break;
    }
  }
  if (!any) return std::nullopt;
  if (negative) coeff = -coeff;
  return Poly::mono(coeff, a0, a1);
}

}  // namespace

std::optional<Poly> parse_poly(const std::string& text) {
  Scanner sc{text};
  sc.skip_ws();
  if (sc.i >= sc.s.size()) return std::nullopt;
  Poly out;
  bool neg = sc.eat('-');
  auto t = parse_term(sc, neg);
  if (!t) return std::nullopt;
  out += *t;
  while (true) {
    sc.skip_ws();
    if (sc.i >= sc.s.size()) break;
    bool minus;
    if (sc.eat('+'))
      minus = false;
    else if (sc.eat('-'))
      minus = true;
    else
      return std::nullopt;
    auto t2 = parse_term(sc, minus);
    if (!t2) return std::nullopt;
    out += *t2;
  }
  return out;
}

std::optional<RatFn> parse_ratfn(const std::string& text) {
  Scanner sc{text};
  sc.skip_ws();
  if (sc.i < sc.s.size() && sc.s[sc.i] == '(') {
    size_t close = text.rfind(')');
    if (close == std::string::npos) return std::nullopt;
    auto inner = parse_poly(text.substr(sc.i + 1, close - sc.i - 1));
    if (!inner) return std::nullopt;
    Scanner rest{text};
    rest.i = close + 1;
    if (!rest.eat('/')) return std::nullopt;
    rest.skip_ws();
    if (rest.i >= text.size() || text[rest.i] != 'r') return std::nullopt;
    ++rest.i;
    unsigned long d = 1;
    if (rest.eat('^')) {
      auto e = rest.uint_lit();
      if (!e) return std::nullopt;
      d = *e;
    }
    rest.skip_ws();
    if (rest.i != text.size()) return std::nullopt;
    return RatFn(*inner, static_cast<unsigned>(d));
  }
  auto p = parse_poly(text);
  if (!p) return std::nullopt;
  return RatFn(*p);
}

std::string to_json(const RatFn& f) {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : f.num().terms())
    j["terms"].push_back({{"a0", m.a0}, {"a1", m.a1}, {"coeff", rat_str(c)}});
  j["rpow"] = f.rpow();
  return j.dump();
}

}  // namespace hcpca
