#include "islands/study.hpp"

#include <cmath>
#include <thread>

namespace hcpca {

double Accum::mean() const {
  return count == 0 ? 0.0 : static_cast<double>(sum) / (2.0 * static_cast<double>(count));
}

double Accum::stderr_() const {
  if (count < 2) return 0.0;
  double n = static_cast<double>(count);
  double var4 = (static_cast<double>(sumsq) -
                 static_cast<double>(sum) * static_cast<double>(sum) / n) /
                (n - 1.0);
  return std::sqrt(std::max(0.0, var4 / 4.0) / n);
}

uint64_t DriftStudyResult::conditioned_samples() const {
  uint64_t total = 0;
  for (const auto& [key, acc] : right)
    if (key.second == 1) total += static_cast<uint64_t>(acc.count);
  return total;
}

namespace {

Row planted_row(const DriftStudyConfig& cfg, uint64_t trial) {
  Row row(cfg.width, Cell::undet);
  if (cfg.plant_len > 0) {
    int c0 = cfg.width / 2 - cfg.plant_len / 2;
    for (int k = 0; k < cfg.plant_len; ++k) {
      uint64_t u = draw_u64(cfg.seed, trial, kPlantTime, static_cast<uint64_t>(c0 + k));
      row.set(c0 + k, (u & 1) ? Cell::one : Cell::zero);
    }
  }
  return row;
}

BoundaryClass mirror_class(const Row& row, int64_t i, int n) {
  const int m = n == 2 ? 2 : 4;
  std::vector<Cell> f(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) f[static_cast<size_t>(k)] = row.get(i + m - 1 - k);
  return classify_right(f, n);
}

struct LocalAcc {
  std::map<std::pair<BoundaryClass, int>, Accum> right, left;
  Accum raw_right, raw_left;
  uint64_t deaths = 0;
};

void run_trials(const DriftStudyConfig& cfg, uint64_t t_begin, uint64_t t_end,
                LocalAcc& acc) {
  PcaSpec spec{cfg.n, cfg.params};
  const int n = cfg.n;
  Row cur(cfg.width), next(cfg.width, Cell::zero);

  for (uint64_t trial = t_begin; trial < t_end; ++trial) {
    cur = planted_row(cfg, trial);
    auto first = find_islands(cur);
    if (first.empty()) continue;
    int64_t i = first[0].i, j = first[0].j;

    // rolling window of the last three records for the two-step sums
    BoundaryRecord recs[3];
    int have = 0;
    auto push = [&](const BoundaryRecord& r) {
      if (have < 3) {
        recs[have++] = r;
      } else {
        recs[0] = recs[1];
        recs[1] = recs[2];
        recs[2] = r;
      }
    };

    auto record_at = [&](const Row& row, int t) {
      const int m = n == 2 ? 2 : 4;
      BoundaryRecord rec;
      rec.t = t;
      rec.i = i;
      rec.j = j;
      rec.gap_ok = j - i >= (n == 2 ? 5 : 9);
      rec.has_class = j - i + 1 >= m;
      int tn = n == 2 ? 2 : 3;
      if (j - i + 1 >= tn) {
        std::vector<Cell> tail(static_cast<size_t>(tn)), head(static_cast<size_t>(tn));
        for (int k = 0; k < tn; ++k) {
          tail[static_cast<size_t>(k)] = row.get(j - tn + 1 + k);
          head[static_cast<size_t>(k)] = row.get(i + k);
        }
        rec.j_mod = HalfPos::whole(j) + modified_right(tail, n);
        rec.i_mod = HalfPos::whole(i) + modified_left(head, n);
      } else {
        rec.j_mod = HalfPos::whole(j);
        rec.i_mod = HalfPos::whole(i);
      }
      if (rec.has_class) {
        std::vector<Cell> f(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) f[static_cast<size_t>(k)] = row.get(j - m + 1 + k);
        rec.class_right = classify_right(f, n);
      }
      rec.clean_right = true;
      rec.clean_left = true;
      for (int k = 2; k < 2 + kCleanHorizon; ++k) {
        rec.clean_right &= row.is_undet(j + k);
        rec.clean_left &= row.is_undet(i - k);
      }
      return rec;
    };

    auto harvest = [&](const Row& row_prev) {
      // newest record is recs[have-1]; use the pair/triple ending there
      if (have < 2) return;
      const BoundaryRecord& a = recs[have - 2];
      const BoundaryRecord& b = recs[have - 1];
      if (b.t != a.t + 1) return;
      if (a.gap_ok) {
        acc.raw_right.add(2 * (b.j - a.j));
        acc.raw_left.add(2 * (b.i - a.i));
        if (a.has_class) {
          if (a.clean_right)
            acc.right[{a.class_right, 1}].add(b.j_mod.doubled - a.j_mod.doubled);
          if (a.clean_left)
            acc.left[{mirror_class(row_prev, a.i, n), 1}].add(b.i_mod.doubled -
                                                              a.i_mod.doubled);
        }
      }
      if (have == 3) {
        const BoundaryRecord& p = recs[0];
        if (p.t % 2 == 0 && recs[1].t == p.t + 1 && recs[2].t == p.t + 2 &&
            p.gap_ok && p.has_class && p.clean_right && recs[1].clean_right) {
          acc.right[{p.class_right, 2}].add(recs[2].j_mod.doubled - p.j_mod.doubled);
        }
      }
    };

    push(record_at(cur, 0));
    Row prev_row = cur;
    bool dead = false;
    for (int t = 0; t < cfg.steps && !dead; ++t) {
      envelope_step(cur, next, spec, cfg.seed, trial, static_cast<uint64_t>(t + 1));
      std::swap(cur, next);
      if (cur.count_undet() == 0) break;
      int64_t anchor = j - (n - 1);
      if (cur.is_undet(anchor)) {
        ++acc.deaths;
        dead = true;
        break;
      }
      int64_t rgt = anchor, lft = anchor;
      while (rgt - anchor < cfg.width && !cur.is_undet(rgt + 1)) ++rgt;
      while (anchor - lft < cfg.width && !cur.is_undet(lft - 1)) --lft;
      i = lft;
      j = rgt;
      push(record_at(cur, t + 1));
      harvest(prev_row);
      prev_row = cur;
    }
  }
}

}  // namespace

DriftStudyResult drift_study(const DriftStudyConfig& cfg) {
  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = static_cast<unsigned>(
      std::min<uint64_t>(threads, std::max<uint64_t>(1, cfg.trials)));

  std::vector<LocalAcc> locals(threads);
  std::vector<std::thread> pool;
  uint64_t chunk = (cfg.trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    uint64_t b = static_cast<uint64_t>(w) * chunk;
    uint64_t e = std::min(cfg.trials, b + chunk);
    if (b >= e) break;
    pool.emplace_back(run_trials, std::cref(cfg), b, e, std::ref(locals[w]));
  }
  for (auto& th : pool) th.join();

  DriftStudyResult out;
  out.n = cfg.n;
  out.trajectories = cfg.trials;
  for (const auto& loc : locals) {
    for (const auto& [k, a] : loc.right) out.right[k].merge(a);
    for (const auto& [k, a] : loc.left) out.left[k].merge(a);
    out.raw_right.merge(loc.raw_right);
    out.raw_left.merge(loc.raw_left);
    out.deaths += loc.deaths;
  }
  return out;
}

std::vector<BoundaryRecord> study_track_one(const DriftStudyConfig& cfg, uint64_t trial) {
  PcaSpec spec{cfg.n, cfg.params};
  Row init = cfg.plant_len > 0 ? planted_row(cfg, trial) : Row(cfg.width, Cell::undet);
  Trajectory traj = run(spec, cfg.width, cfg.steps, init, cfg.seed, trial);
  return track(traj);
}

}  // namespace hcpca
