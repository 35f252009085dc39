#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hcpca {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: denominator > 0 and gcd(|num|, den) = 1.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Accepts "p/q", "p", or a plain decimal such as "0.125" / "-3.5e-2" is not
// supported (exponents never appear in configs). Returns nullopt on junk.
std::optional<Rat> rat_parse(const std::string& text);

// Nearest rational with denominator <= max_den (ties round up), used when
// decimals enter through the CLI and must become exact.
Rat rat_round_den(const Rat& q, unsigned long max_den);

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace hcpca
