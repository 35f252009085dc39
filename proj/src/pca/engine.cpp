#include "pca/engine.hpp"

namespace hcpca {

namespace {

// OR of each bit with the next k-1 bits rightward on the ring, i.e. bit i of
// the result covers cells i..i+k-1 (mod width). Requires width % 64 == 0.
std::vector<uint64_t> window_or(const std::vector<uint64_t>& bits, int k) {
  std::vector<uint64_t> acc = bits;
  size_t words = bits.size();
  std::vector<uint64_t> shifted(words);
  for (int s = 1; s < k; ++s) {
    for (size_t w = 0; w < words; ++w) {
      int64_t base = static_cast<int64_t>(w) * 64 + s;
      // gather bits base .. base+63 (mod width) of `bits`
      uint64_t lo_word = bits[(base / 64) % words];
      uint64_t hi_word = bits[(base / 64 + 1) % words];
      int off = static_cast<int>(base % 64);
      uint64_t v = off == 0 ? lo_word : (lo_word >> off) | (hi_word << (64 - off));
      shifted[w] = v;
    }
    for (size_t w = 0; w < words; ++w) acc[w] |= shifted[w];
  }
  return acc;
}

inline bool bit_at(const std::vector<uint64_t>& bits, uint64_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1;
}

}  // namespace

void envelope_step(const Row& in, Row& out, const PcaSpec& spec, SeedSpec seed,
                   uint64_t trial, uint64_t time_key) {
  const int width = in.width();
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("neighborhood size must be >= 2");
  if (width < n) throw WidthTooSmall("row narrower than the neighborhood");
  if (out.width() != width) out = Row(width, Cell::zero);

  const NoiseParams& p = spec.params;
  const bool packed_ok = width % 64 == 0;

  if (packed_ok) {
    std::vector<uint64_t> win_one = window_or(in.one_bits(), n);
    std::vector<uint64_t> win_q = window_or(in.q_bits(), n);
    auto& ones = out.one_bits();
    auto& qs = out.q_bits();
    size_t words = ones.size();
    for (size_t w = 0; w < words; ++w) {
      uint64_t ob = 0, qb = 0;
      uint64_t base = w << 6;
      for (int b = 0; b < 64; ++b) {
        uint64_t i = base + static_cast<uint64_t>(b);
        double u = draw_unit(seed, trial, time_key, i);
        Cell c = envelope_cell(site_label(p, u), (win_one[w] >> b) & 1,
                               (win_q[w] >> b) & 1);
        ob |= static_cast<uint64_t>(c == Cell::one) << b;
        qb |= static_cast<uint64_t>(c == Cell::undet) << b;
      }
      ones[w] = ob;
      qs[w] = qb;
    }
    return;
  }

  for (int i = 0; i < width; ++i) {
    bool has_one = false, has_q = false;
    for (int k = 0; k < n; ++k) {
      Cell c = in.get(i + k);
      has_one |= c == Cell::one;
      has_q |= c == Cell::undet;
    }
    double u = draw_unit(seed, trial, time_key, static_cast<uint64_t>(i));
    out.set(i, envelope_cell(site_label(p, u), has_one, has_q));
  }
}

void hardcore_step(const Row& in, Row& out, const PcaSpec& spec, SeedSpec seed,
                   uint64_t trial, uint64_t time_key) {
  if (in.any_undet()) throw QuestionInBinary("binary update on a row containing ?");
  envelope_step(in, out, spec, seed, trial, time_key);
}

Trajectory run(const PcaSpec& spec, int width, int steps, const Row& init,
               SeedSpec seed, uint64_t trial) {
  if (width < std::max(spec.n, 64)) throw WidthTooSmall("run width below max(n, 64)");
  if (init.width() != width) throw std::invalid_argument("init row width mismatch");
  Trajectory traj{spec, seed, trial, {}};
  traj.rows.reserve(static_cast<size_t>(steps) + 1);
  traj.rows.push_back(init);
  Row next(width, Cell::zero);
  for (int t = 0; t < steps; ++t) {
    envelope_step(traj.rows.back(), next, spec, seed, trial,
                  static_cast<uint64_t>(t + 1));
    traj.rows.push_back(next);
  }
  return traj;
}

std::vector<double> question_density(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.rows.size());
  for (const Row& r : traj.rows)
    out.push_back(static_cast<double>(r.count_undet()) / r.width());
  return out;
}

std::vector<double> one_density(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.rows.size());
  for (const Row& r : traj.rows)
    out.push_back(static_cast<double>(r.count_ones()) / r.width());
  return out;
}

}  // namespace hcpca
