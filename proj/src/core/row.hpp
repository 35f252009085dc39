#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcpca {

enum class Cell : uint8_t { zero = 0, one = 1, undet = 2 };  // undet = "?"

// Half-integer lattice position stored as a doubled integer; the modified
// right boundary for neighborhood 2 lives in (1/2)Z and must compare exactly.
struct HalfPos {
  int64_t doubled = 0;
  static HalfPos whole(int64_t v) { return HalfPos{2 * v}; }
  static HalfPos halves(int64_t d) { return HalfPos{d}; }
  friend HalfPos operator+(HalfPos a, HalfPos b) { return HalfPos{a.doubled + b.doubled}; }
  friend HalfPos operator-(HalfPos a, HalfPos b) { return HalfPos{a.doubled - b.doubled}; }
  auto operator<=>(const HalfPos&) const = default;
  double value() const { return static_cast<double>(doubled) / 2.0; }
};

// One periodic lattice row over {0, 1, ?}, stored as two bit planes
// (one-bits and ?-bits) for throughput. Indexing is modulo width.
class Row {
 public:
  Row() = default;
  explicit Row(int width, Cell fill = Cell::undet);

  int width() const { return width_; }

  Cell get(int64_t i) const {
    uint64_t k = index(i);
    if ((qs_[k >> 6] >> (k & 63)) & 1) return Cell::undet;
    return ((ones_[k >> 6] >> (k & 63)) & 1) ? Cell::one : Cell::zero;
  }
  void set(int64_t i, Cell c);

  bool is_one(int64_t i) const {
    uint64_t k = index(i);
    return (ones_[k >> 6] >> (k & 63)) & 1;
  }
  bool is_undet(int64_t i) const {
    uint64_t k = index(i);
    return (qs_[k >> 6] >> (k & 63)) & 1;
  }

  int count_undet() const;
  int count_ones() const;
  bool any_undet() const { return count_undet() > 0; }

  std::string to_string() const;               // over {0,1,?}
  static Row from_string(const std::string&);  // inverse

  const std::vector<uint64_t>& one_bits() const { return ones_; }
  const std::vector<uint64_t>& q_bits() const { return qs_; }
  std::vector<uint64_t>& one_bits() { return ones_; }
  std::vector<uint64_t>& q_bits() { return qs_; }

 private:
  uint64_t index(int64_t i) const {
    int64_t m = i % width_;
    return static_cast<uint64_t>(m < 0 ? m + width_ : m);
  }
  int width_ = 0;
  std::vector<uint64_t> ones_, qs_;
};

}  // namespace hcpca
