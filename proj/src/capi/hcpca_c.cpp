#include "hcpca.h"

#include "drift/drifts.hpp"
#include "drift/report.hpp"
#include "game/board.hpp"
#include "islands/study.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

namespace {

thread_local std::string g_last_error;

template <typename F>
hcpca_status guarded(F&& fn) {
  try {
    return fn();
  } catch (const hcpca::NoiseError& e) {
    g_last_error = e.what();
    return HCPCA_ERR_DOMAIN;
  } catch (const hcpca::EmptySample& e) {
    g_last_error = e.what();
    return HCPCA_ERR_EMPTY_SAMPLE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HCPCA_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return HCPCA_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HCPCA_ERR_INTERNAL;
  }
}

void set_label(char* dst, size_t cap, const char* src) {
  std::snprintf(dst, cap, "%s", src);
}

}  // namespace

struct hcpca_params {
  hcpca::NoiseParams p;
  std::string eps0_text, eps1_text;
};

struct hcpca_sim {
  std::vector<double> q_density, one_density;
  std::vector<std::string> rows;
};

struct hcpca_drift_study {
  std::vector<hcpca_drift_row> rows;
  double d_mean = 0, r_mean = 0, residual = 0, sigma = 0;
  uint64_t samples = 0;
};

struct hcpca_track {
  std::vector<hcpca_track_row> rows;
};

struct hcpca_verify {
  hcpca::VerifyReport rep;
};

struct hcpca_board {
  std::string labels, outcomes;
};

extern "C" {

const char* hcpca_status_message(hcpca_status status) {
  switch (status) {
    case HCPCA_OK: return "ok";
    case HCPCA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HCPCA_ERR_DOMAIN: return "domain error";
    case HCPCA_ERR_VERIFICATION: return "verification failed";
    case HCPCA_ERR_EMPTY_SAMPLE: return "empty sample";
    case HCPCA_ERR_OUT_OF_RANGE: return "index out of range";
    case HCPCA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hcpca_last_error(void) { return g_last_error.c_str(); }

const char* hcpca_version(void) { return "0.1.0"; }

hcpca_status hcpca_params_parse(const char* eps0, const char* eps1,
                                hcpca_params** out) {
  if (!eps0 || !eps1 || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto q0 = hcpca::rat_parse(eps0);
    auto q1 = hcpca::rat_parse(eps1);
    if (!q0 || !q1) {
      g_last_error = "could not parse noise value";
      return HCPCA_ERR_DOMAIN;
    }
    hcpca::Rat r0 = hcpca::rat_round_den(*q0, 1000000);
    hcpca::Rat r1 = hcpca::rat_round_den(*q1, 1000000);
    auto h = std::make_unique<hcpca_params>();
    h->p = hcpca::validate_noise(r0, r1);
    h->eps0_text = hcpca::rat_str(r0);
    h->eps1_text = hcpca::rat_str(r1);
    *out = h.release();
    return HCPCA_OK;
  });
}

void hcpca_params_free(hcpca_params* p) { delete p; }

void hcpca_params_values(const hcpca_params* p, double* eps0, double* eps1,
                         double* r) {
  if (!p) return;
  if (eps0) *eps0 = p->p.eps0_d;
  if (eps1) *eps1 = p->p.eps1_d;
  if (r) *r = p->p.r_d;
}

int hcpca_params_theorem_scope(const hcpca_params* p) {
  return p && p->p.theorem_scope ? 1 : 0;
}

const char* hcpca_params_eps0(const hcpca_params* p) { return p->eps0_text.c_str(); }
const char* hcpca_params_eps1(const hcpca_params* p) { return p->eps1_text.c_str(); }

hcpca_status hcpca_sim_run(const hcpca_params* p, int n, int width, int steps,
                           uint64_t seed, int keep_rows, hcpca_sim** out) {
  if (!p || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hcpca::PcaSpec spec{n, p->p};
    hcpca::Row init(width, hcpca::Cell::undet);
    hcpca::Trajectory traj =
        hcpca::run(spec, width, steps, init, hcpca::SeedSpec{seed});
    auto h = std::make_unique<hcpca_sim>();
    h->q_density = hcpca::question_density(traj);
    h->one_density = hcpca::one_density(traj);
    if (keep_rows)
      for (const auto& row : traj.rows) h->rows.push_back(row.to_string());
    *out = h.release();
    return HCPCA_OK;
  });
}

void hcpca_sim_free(hcpca_sim* s) { delete s; }

int hcpca_sim_steps(const hcpca_sim* s) {
  return s ? static_cast<int>(s->q_density.size()) - 1 : -1;
}

double hcpca_sim_q_density(const hcpca_sim* s, int t) {
  if (!s || t < 0 || t >= static_cast<int>(s->q_density.size())) return -1;
  return s->q_density[static_cast<size_t>(t)];
}

double hcpca_sim_one_density(const hcpca_sim* s, int t) {
  if (!s || t < 0 || t >= static_cast<int>(s->one_density.size())) return -1;
  return s->one_density[static_cast<size_t>(t)];
}

const char* hcpca_sim_row(const hcpca_sim* s, int t) {
  if (!s || t < 0 || t >= static_cast<int>(s->rows.size())) return NULL;
  return s->rows[static_cast<size_t>(t)].c_str();
}

hcpca_status hcpca_drift_study_run(const hcpca_params* p, int n, int width,
                                   int steps, uint64_t trials, uint64_t seed,
                                   hcpca_drift_study** out) {
  if (!p || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hcpca::DriftStudyConfig cfg;
    cfg.n = n;
    cfg.params = p->p;
    cfg.width = width;
    cfg.steps = steps;
    cfg.trials = trials;
    cfg.seed = hcpca::SeedSpec{seed};
    hcpca::DriftStudyResult res = hcpca::drift_study(cfg);

    auto h = std::make_unique<hcpca_drift_study>();
    h->samples = res.conditioned_samples();
    for (const auto& [key, acc] : res.right) {
      if (acc.count == 0) continue;
      hcpca_drift_row row{};
      set_label(row.cls, sizeof row.cls, hcpca::boundary_class_name(key.first));
      row.k_steps = key.second;
      row.count = acc.count;
      row.mean = acc.mean();
      row.se = acc.stderr_();
      if (key.second == 1) {
        hcpca::ClassValue cv = hcpca::class_drift_at(n, key.first, p->p);
        row.exact = cv.value;
        row.exact_is_bound = cv.is_bound;
      } else {
        // two-step references exist only where the one-step value is a bound
        if (key.first == hcpca::BoundaryClass::p00) {
          row.exact =
              hcpca::rat_double(hcpca::two_step_00_n2().value.eval(p->p.eps0, p->p.eps1));
          row.exact_is_bound = 1;
        } else if (key.first == hcpca::BoundaryClass::q1000) {
          row.exact =
              hcpca::rat_double(hcpca::two_step_1000().value.eval(p->p.eps0, p->p.eps1));
          row.exact_is_bound = 1;
        } else if (key.first == hcpca::BoundaryClass::q0000) {
          hcpca::TwoStep0000 ts = hcpca::two_step_0000();
          hcpca::Rat a = ts.min_is_0000_bound.value.eval(p->p.eps0, p->p.eps1);
          hcpca::Rat b = ts.min_is_1000.value.eval(p->p.eps0, p->p.eps1);
          row.exact = hcpca::rat_double(a < b ? a : b);
          row.exact_is_bound = 1;
        } else {
          continue;  // no recorded two-step reference for this class
        }
      }
      row.z = row.se > 0 ? (row.mean - row.exact) / row.se
                         : (row.mean == row.exact ? 0.0 : INFINITY);
      h->rows.push_back(row);
    }
    double dj = res.raw_right.mean(), di = res.raw_left.mean();
    h->r_mean = dj;
    h->d_mean = dj - di;
    h->residual = std::fabs(h->d_mean - (2 * dj + (n - 1)));
    h->sigma = res.raw_right.stderr_() + res.raw_left.stderr_();
    *out = h.release();
    return HCPCA_OK;
  });
}

void hcpca_drift_study_free(hcpca_drift_study* s) { delete s; }

int hcpca_drift_study_rows(const hcpca_drift_study* s) {
  return s ? static_cast<int>(s->rows.size()) : 0;
}

hcpca_status hcpca_drift_study_row(const hcpca_drift_study* s, int idx,
                                   hcpca_drift_row* out) {
  if (!s || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  if (idx < 0 || idx >= static_cast<int>(s->rows.size())) return HCPCA_ERR_OUT_OF_RANGE;
  *out = s->rows[static_cast<size_t>(idx)];
  return HCPCA_OK;
}

void hcpca_drift_study_growth(const hcpca_drift_study* s, double* d_mean,
                              double* r_mean, double* residual, double* sigma) {
  if (!s) return;
  if (d_mean) *d_mean = s->d_mean;
  if (r_mean) *r_mean = s->r_mean;
  if (residual) *residual = s->residual;
  if (sigma) *sigma = s->sigma;
}

uint64_t hcpca_drift_study_samples(const hcpca_drift_study* s) {
  return s ? s->samples : 0;
}

hcpca_status hcpca_track_run(const hcpca_params* p, int n, int width, int steps,
                             uint64_t seed, uint64_t trial, int plant,
                             hcpca_track** out) {
  if (!p || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hcpca::DriftStudyConfig cfg;
    cfg.n = n;
    cfg.params = p->p;
    cfg.width = width;
    cfg.steps = steps;
    cfg.seed = hcpca::SeedSpec{seed};
    cfg.plant_len = plant ? 24 : 0;
    std::vector<hcpca::BoundaryRecord> recs = hcpca::study_track_one(cfg, trial);
    auto h = std::make_unique<hcpca_track>();
    const int m = n == 2 ? 2 : 4;
    for (const auto& r : recs) {
      hcpca_track_row row{};
      row.t = r.t;
      row.i = r.i;
      row.j = r.j;
      row.i_mod_doubled = r.i_mod.doubled;
      row.j_mod_doubled = r.j_mod.doubled;
      if (r.has_class) {
        for (int k = 0; k < m; ++k)
          row.f_right[k] = (r.f_right >> k) & 1 ? '1' : '0';
        row.f_right[m] = '\0';
        set_label(row.cls, sizeof row.cls, hcpca::boundary_class_name(r.class_right));
      } else {
        set_label(row.f_right, sizeof row.f_right, "-");
        set_label(row.cls, sizeof row.cls, "-");
      }
      row.gap_ok = r.gap_ok;
      row.alive = r.alive;
      row.clean_left = r.clean_left;
      row.clean_right = r.clean_right;
      h->rows.push_back(row);
    }
    *out = h.release();
    return HCPCA_OK;
  });
}

void hcpca_track_free(hcpca_track* t) { delete t; }

int hcpca_track_rows(const hcpca_track* t) {
  return t ? static_cast<int>(t->rows.size()) : 0;
}

hcpca_status hcpca_track_row_get(const hcpca_track* t, int idx,
                                 hcpca_track_row* out) {
  if (!t || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  if (idx < 0 || idx >= static_cast<int>(t->rows.size())) return HCPCA_ERR_OUT_OF_RANGE;
  *out = t->rows[static_cast<size_t>(idx)];
  return HCPCA_OK;
}

hcpca_status hcpca_verify_run(const char* grid_step, int corrupt,
                              hcpca_verify** out) {
  if (!out) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto step = hcpca::rat_parse(grid_step ? grid_step : "1/50");
    if (!step || *step <= 0) {
      g_last_error = "bad grid step";
      return HCPCA_ERR_DOMAIN;
    }
    auto h = std::make_unique<hcpca_verify>();
    h->rep = hcpca::run_verify(*step, corrupt != 0);
    *out = h.release();
    return HCPCA_OK;
  });
}

void hcpca_verify_free(hcpca_verify* v) { delete v; }

int hcpca_verify_count(const hcpca_verify* v) {
  return v ? static_cast<int>(v->rep.checks.size()) : 0;
}

int hcpca_verify_all_pass(const hcpca_verify* v) {
  return v && v->rep.all_pass ? 1 : 0;
}

const char* hcpca_verify_name(const hcpca_verify* v, int idx) {
  if (!v || idx < 0 || idx >= static_cast<int>(v->rep.checks.size())) return NULL;
  return v->rep.checks[static_cast<size_t>(idx)].name.c_str();
}

int hcpca_verify_pass(const hcpca_verify* v, int idx) {
  if (!v || idx < 0 || idx >= static_cast<int>(v->rep.checks.size())) return 0;
  return v->rep.checks[static_cast<size_t>(idx)].pass ? 1 : 0;
}

const char* hcpca_verify_detail(const hcpca_verify* v, int idx) {
  if (!v || idx < 0 || idx >= static_cast<int>(v->rep.checks.size())) return NULL;
  return v->rep.checks[static_cast<size_t>(idx)].detail.c_str();
}

const char* hcpca_verify_json(const hcpca_verify* v) {
  return v ? v->rep.json.c_str() : NULL;
}

hcpca_status hcpca_game_draw(const hcpca_params* p, int n, int width, int height,
                             uint64_t trials, uint64_t seed, double* estimate,
                             double* lo, double* hi) {
  if (!p) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hcpca::DrawEstimate est = hcpca::draw_probability(width, height, p->p, n,
                                                      trials, hcpca::SeedSpec{seed});
    if (estimate) *estimate = est.estimate;
    if (lo) *lo = est.lo;
    if (hi) *hi = est.hi;
    return HCPCA_OK;
  });
}

hcpca_status hcpca_game_equivalence(const hcpca_params* p, int n, int width,
                                    int height, uint64_t boards, uint64_t seed,
                                    int* identical) {
  if (!p || !identical) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *identical = hcpca::games_match_pca(p->p, n, width, height, boards,
                                        hcpca::SeedSpec{seed})
                     ? 1
                     : 0;
    return HCPCA_OK;
  });
}

hcpca_status hcpca_board_create(const hcpca_params* p, int n, int width,
                                int height, uint64_t seed, uint64_t trial,
                                hcpca_board** out) {
  if (!p || !out) return HCPCA_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hcpca::Board b = hcpca::generate_board(width, height, p->p, n,
                                           hcpca::SeedSpec{seed}, trial);
    auto h = std::make_unique<hcpca_board>();
    h->labels = hcpca::board_text(b);
    h->outcomes = hcpca::outcome_text(hcpca::solve_board(b));
    *out = h.release();
    return HCPCA_OK;
  });
}

void hcpca_board_free(hcpca_board* b) { delete b; }

const char* hcpca_board_labels(const hcpca_board* b) {
  return b ? b->labels.c_str() : NULL;
}

const char* hcpca_board_outcomes(const hcpca_board* b) {
  return b ? b->outcomes.c_str() : NULL;
}

}  // extern "C"
