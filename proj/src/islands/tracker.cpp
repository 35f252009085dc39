#include "islands/tracker.hpp"

#include <cmath>

namespace hcpca {

std::vector<Island> find_islands(const Row& row) {
  const int w = row.width();
  int undet = row.count_undet();
  if (undet == 0) throw AllBinaryRow("row without ? has no island flanks");
  std::vector<Island> out;
  if (undet == w) return out;

  // First ? position anchors the scan so wrap runs stay contiguous.
  int start = 0;
  while (!row.is_undet(start)) ++start;
  int64_t run_begin = -1;
  for (int k = 1; k <= w; ++k) {
    int64_t pos = start + k;
    if (!row.is_undet(pos)) {
      if (run_begin < 0) run_begin = pos;
    } else if (run_begin >= 0) {
      int64_t b = run_begin % w, e = pos - 1;
      out.push_back(Island{b, b + (e - run_begin)});
      run_begin = -1;
    }
  }
  if (run_begin >= 0) {
    int64_t b = run_begin % w;
    out.push_back(Island{b, b + (start + w - 1 - run_begin)});
  }
  return out;
}

const char* boundary_class_name(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::p00: return "00";
    case BoundaryClass::p01: return "01";
    case BoundaryClass::p10: return "10";
    case BoundaryClass::p11: return "11";
    case BoundaryClass::star0: return "*0";
    case BoundaryClass::star1: return "*1";
    case BoundaryClass::q0000: return "0000";
    case BoundaryClass::q1000: return "1000";
    case BoundaryClass::other: return "other";
    case BoundaryClass::star000: return "*000";
    case BoundaryClass::one_star00: return "1*00";
    case BoundaryClass::star_pair00: return "**00";
  }
  return "?";
}

HalfPos modified_right(std::span<const Cell> tail, int n) {
  if (n == 2) {
    if (tail.size() < 2) throw InsufficientContext("need the last 2 cells");
    Cell a = tail[tail.size() - 2], b = tail[tail.size() - 1];
    if (b == Cell::one) return HalfPos::whole(0);          // (0,1), (1,1)
    if (a == Cell::zero) return HalfPos::halves(-1);       // (0,0) -> -1/2
    return HalfPos::whole(-1);                             // (1,0)
  }
  if (n == 3) {
    if (tail.size() < 3) throw InsufficientContext("need the last 3 cells");
    Cell c1 = tail[tail.size() - 3], c2 = tail[tail.size() - 2], c3 = tail[tail.size() - 1];
    if (c3 == Cell::one) return HalfPos::whole(0);
    if (c2 == Cell::one) return HalfPos::whole(-1);              // (·,1,0)
    if (c1 == Cell::zero) return HalfPos::whole(-1);             // (0,0,0)
    return HalfPos::whole(-2);                                   // (1,0,0)
  }
  throw std::invalid_argument("modified positions are defined for n in {2,3}");
}

HalfPos modified_left(std::span<const Cell> head, int n) {
  // Mirror of modified_right: reverse the cells and negate the offset.
  std::vector<Cell> rev(head.rbegin(), head.rend());
  HalfPos off = modified_right(std::span<const Cell>(rev), n);
  return HalfPos::halves(-off.doubled);
}

BoundaryClass classify_right(std::span<const Cell> f, int n) {
  if (n == 2) {
    if (f.size() != 2) throw BadArity("n=2 boundary tuples have 2 cells");
    bool a = f[0] == Cell::one, b = f[1] == Cell::one;
    return a ? (b ? BoundaryClass::p11 : BoundaryClass::p10)
             : (b ? BoundaryClass::p01 : BoundaryClass::p00);
  }
  if (n == 3) {
    if (f.size() != 4) throw BadArity("n=3 boundary tuples have 4 cells");
    bool tail_one = f[1] == Cell::one || f[2] == Cell::one || f[3] == Cell::one;
    if (tail_one) return BoundaryClass::other;
    return f[0] == Cell::one ? BoundaryClass::q1000 : BoundaryClass::q0000;
  }
  throw std::invalid_argument("boundary classes are defined for n in {2,3}");
}

namespace {

uint8_t pack_cells(const Row& row, int64_t from, int count) {
  uint8_t bits = 0;
  for (int k = 0; k < count; ++k)
    bits |= static_cast<uint8_t>(row.is_one(from + k)) << k;
  return bits;
}

BoundaryRecord make_record(const Row& row, int t, int64_t i, int64_t j, int n) {
  const int m = n == 2 ? 2 : 4;
  const int gap_need = n == 2 ? 5 : 9;
  BoundaryRecord rec;
  rec.t = t;
  rec.i = i;
  rec.j = j;
  rec.gap_ok = j - i >= gap_need;
  rec.has_class = j - i + 1 >= m;

  int64_t len = j - i + 1;
  int tail_n = static_cast<int>(std::min<int64_t>(len, n == 2 ? 2 : 3));
  std::vector<Cell> tail(static_cast<size_t>(tail_n));
  for (int k = 0; k < tail_n; ++k) tail[static_cast<size_t>(k)] = row.get(j - tail_n + 1 + k);
  std::vector<Cell> head(static_cast<size_t>(tail_n));
  for (int k = 0; k < tail_n; ++k) head[static_cast<size_t>(k)] = row.get(i + k);
  // Islands shorter than the modification window only occur before any
  // conditional sample is taken; fall back to the raw position then.
  bool mods_ok = tail_n >= (n == 2 ? 2 : 3);
  rec.j_mod = HalfPos::whole(j) + (mods_ok ? modified_right(tail, n) : HalfPos::whole(0));
  rec.i_mod = HalfPos::whole(i) + (mods_ok ? modified_left(head, n) : HalfPos::whole(0));

  if (rec.has_class) {
    std::vector<Cell> f(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) f[static_cast<size_t>(k)] = row.get(j - m + 1 + k);
    rec.class_right = classify_right(f, n);
    rec.f_right = pack_cells(row, j - m + 1, m);
    rec.f_left = pack_cells(row, i, m);
  }

  rec.clean_right = true;
  rec.clean_left = true;
  for (int k = 2; k < 2 + kCleanHorizon; ++k) {
    rec.clean_right &= row.is_undet(j + k);
    rec.clean_left &= row.is_undet(i - k);
  }
  return rec;
}

}  // namespace

std::vector<BoundaryRecord> track(const Trajectory& traj) {
  const int n = traj.spec.n;
  std::vector<BoundaryRecord> records;
  bool following = false;
  int64_t i = 0, j = 0;

  for (size_t t = 0; t < traj.rows.size(); ++t) {
    const Row& row = traj.rows[t];
    if (row.count_undet() == 0) break;  // island flanks gone, nothing to follow

    if (!following) {
      auto islands = find_islands(row);
      if (islands.empty()) continue;
      // focal island: the longest run (leftmost on ties)
      const Island* best = &islands[0];
      for (const auto& is : islands)
        if (is.length() > best->length()) best = &is;
      i = best->i;
      j = best->j;
      following = true;
      records.push_back(make_record(row, static_cast<int>(t), i, j, n));
      continue;
    }

    // successor: the run containing the anchor cell j - (n-1)
    int64_t anchor = j - (n - 1);
    if (row.is_undet(anchor)) {
      if (!records.empty()) records.back().alive = false;
      following = false;
      // re-seed from this row if possible
      auto islands = find_islands(row);
      if (!islands.empty()) {
        const Island* best = &islands[0];
        for (const auto& is : islands)
          if (is.length() > best->length()) best = &is;
        i = best->i;
        j = best->j;
        following = true;
        records.push_back(make_record(row, static_cast<int>(t), i, j, n));
      }
      continue;
    }
    const int w = row.width();
    int64_t right = anchor;
    while (right - anchor < w && !row.is_undet(right + 1)) ++right;
    int64_t left = anchor;
    while (anchor - left < w && !row.is_undet(left - 1)) --left;
    i = left;
    j = right;
    records.push_back(make_record(row, static_cast<int>(t), i, j, n));
  }
  return records;
}

DriftEstimate empirical_drifts(const std::vector<BoundaryRecord>& records,
                               BoundaryClass condition, int k_steps) {
  if (k_steps != 1 && k_steps != 2) throw std::invalid_argument("k_steps must be 1 or 2");
  int64_t count = 0, sum = 0, sumsq = 0;  // doubled increments
  const size_t need = static_cast<size_t>(k_steps);
  const int t_first = records.empty() ? 0 : records.front().t;
  for (size_t k = 0; k + need < records.size(); ++k) {
    const BoundaryRecord& a = records[k];
    if (!a.has_class || a.class_right != condition || !a.gap_ok || !a.alive) continue;
    if (!a.clean_right) continue;
    const BoundaryRecord& b = records[k + 1];
    if (b.t != a.t + 1) continue;
    int64_t d;
    if (k_steps == 1) {
      d = b.j_mod.doubled - a.j_mod.doubled;
    } else {
      // non-overlapping pairs: start times even relative to first observation
      if ((a.t - t_first) % 2 != 0) continue;
      if (!b.alive || !b.clean_right) continue;
      const BoundaryRecord& c = records[k + 2];
      if (c.t != a.t + 2) continue;
      d = c.j_mod.doubled - a.j_mod.doubled;
    }
    ++count;
    sum += d;
    sumsq += d * d;
  }
  if (count == 0) throw EmptySample("no records match the condition");
  DriftEstimate est;
  est.condition = condition;
  est.k_steps = k_steps;
  est.count = static_cast<uint64_t>(count);
  est.mean = static_cast<double>(sum) / (2.0 * static_cast<double>(count));
  if (count > 1) {
    double var4 = (static_cast<double>(sumsq) -
                   static_cast<double>(sum) * static_cast<double>(sum) / static_cast<double>(count)) /
                  static_cast<double>(count - 1);
    est.stderr_ = std::sqrt(std::max(0.0, var4 / 4.0) / static_cast<double>(count));
  }
  return est;
}

}  // namespace hcpca
