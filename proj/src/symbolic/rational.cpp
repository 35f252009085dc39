#include "symbolic/rational.hpp"

#include <cctype>

namespace hcpca {

std::string rat_str(const Rat& q) {
  return q.get_str();  // gmp prints "p" or "p/q" in canonical form
}

std::optional<Rat> rat_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return std::nullopt;

  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }

  Rat out;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) return std::nullopt;
    out = Rat(n, d);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) return std::nullopt;
    mpz_class n(ip + fp, 10);
    mpz_class d = 1;
    for (size_t i = 0; i < fp.size(); ++i) d *= 10;
    out = Rat(n, d);
  } else {
    if (!all_digits(s)) return std::nullopt;
    out = Rat(mpz_class(s, 10));
  }
  out.canonicalize();
  if (neg) out = -out;
  return out;
}

Rat rat_round_den(const Rat& q, unsigned long max_den) {
  if (q.get_den() <= max_den) return q;
  // round(q * max_den) / max_den, ties away from zero
  Rat scaled = q * Rat(static_cast<long>(max_den));
  mpz_class n2 = scaled.get_num() * 2 + scaled.get_den();  // floor((2n+d)/(2d))
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), n2.get_mpz_t(), mpz_class(scaled.get_den() * 2).get_mpz_t());
  Rat out(r, mpz_class(static_cast<long>(max_den)));
  out.canonicalize();
  return out;
}

}  // namespace hcpca
