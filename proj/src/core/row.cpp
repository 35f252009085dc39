#include "core/row.hpp"

#include <bit>
#include <stdexcept>

namespace hcpca {

Row::Row(int width, Cell fill) : width_(width) {
  if (width <= 0) throw std::invalid_argument("row width must be positive");
  size_t words = (static_cast<size_t>(width) + 63) / 64;
  ones_.assign(words, 0);
  qs_.assign(words, 0);
  if (fill != Cell::zero)
    for (int i = 0; i < width; ++i) set(i, fill);
}

void Row::set(int64_t i, Cell c) {
  uint64_t k = index(i);
  uint64_t bit = 1ULL << (k & 63);
  ones_[k >> 6] &= ~bit;
  qs_[k >> 6] &= ~bit;
  if (c == Cell::one) ones_[k >> 6] |= bit;
  if (c == Cell::undet) qs_[k >> 6] |= bit;
}

int Row::count_undet() const {
  int n = 0;
  for (uint64_t w : qs_) n += std::popcount(w);
  return n;
}

int Row::count_ones() const {
  int n = 0;
  for (uint64_t w : ones_) n += std::popcount(w);
  return n;
}

std::string Row::to_string() const {
  std::string s(width_, '0');
  for (int i = 0; i < width_; ++i) {
    Cell c = get(i);
    s[i] = c == Cell::zero ? '0' : (c == Cell::one ? '1' : '?');
  }
  return s;
}

Row Row::from_string(const std::string& s) {
  Row row(static_cast<int>(s.size()), Cell::zero);
  for (size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '0': break;
      case '1': row.set(static_cast<int64_t>(i), Cell::one); break;
      case '?': row.set(static_cast<int64_t>(i), Cell::undet); break;
      default: throw std::invalid_argument("row characters must be 0, 1 or ?");
    }
  }
  return row;
}

}  // namespace hcpca
