/*
 * hcpca - hard-core PCA workbench C API.
 *
 * All functions return hcpca_status unless noted; out-parameters are written
 * only on HCPCA_OK. Objects are opaque handles released with their _free
 * function. Returned strings stay owned by the handle they came from and
 * remain valid until that handle is freed. hcpca_last_error() describes the
 * most recent failure on the calling thread.
 */
#ifndef HCPCA_H
#define HCPCA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcpca_status {
  HCPCA_OK = 0,
  HCPCA_ERR_INVALID_ARGUMENT = 1,
  HCPCA_ERR_DOMAIN = 2,       /* bad probabilities, parse failures */
  HCPCA_ERR_VERIFICATION = 3, /* a symbolic check failed */
  HCPCA_ERR_EMPTY_SAMPLE = 4,
  HCPCA_ERR_OUT_OF_RANGE = 5,
  HCPCA_ERR_INTERNAL = 6
} hcpca_status;

const char* hcpca_status_message(hcpca_status status);
const char* hcpca_last_error(void);
const char* hcpca_version(void);

/* ---- noise parameters ------------------------------------------------- */

typedef struct hcpca_params hcpca_params;

/* eps strings are exact rationals "p/q" or decimals; decimals round to the
 * nearest rational with denominator <= 1e6 and are echoed back exactly. */
hcpca_status hcpca_params_parse(const char* eps0, const char* eps1,
                                hcpca_params** out);
void hcpca_params_free(hcpca_params* p);
void hcpca_params_values(const hcpca_params* p, double* eps0, double* eps1,
                         double* r);
int hcpca_params_theorem_scope(const hcpca_params* p);
const char* hcpca_params_eps0(const hcpca_params* p); /* canonical "p/q" */
const char* hcpca_params_eps1(const hcpca_params* p);

/* ---- lattice simulation ------------------------------------------------ */

typedef struct hcpca_sim hcpca_sim;

/* Runs the three-state process from the all-? row. keep_rows != 0 retains
 * row text for hcpca_sim_row. width >= max(n, 64). */
hcpca_status hcpca_sim_run(const hcpca_params* p, int n, int width, int steps,
                           uint64_t seed, int keep_rows, hcpca_sim** out);
void hcpca_sim_free(hcpca_sim* s);
int hcpca_sim_steps(const hcpca_sim* s);
double hcpca_sim_q_density(const hcpca_sim* s, int t);
double hcpca_sim_one_density(const hcpca_sim* s, int t);
const char* hcpca_sim_row(const hcpca_sim* s, int t); /* NULL unless kept */

/* ---- island boundary drift study --------------------------------------- */

typedef struct hcpca_drift_study hcpca_drift_study;

typedef struct hcpca_drift_row {
  char cls[8];    /* boundary class label */
  int k_steps;    /* 1 or 2 */
  int64_t count;  /* conditioned samples */
  double mean;
  double se;
  double exact;      /* kernel value (or bound) at the study's noise */
  int exact_is_bound;
  double z; /* (mean - exact)/se; 0 when se == 0 and mean == exact */
} hcpca_drift_row;

hcpca_status hcpca_drift_study_run(const hcpca_params* p, int n, int width,
                                   int steps, uint64_t trials, uint64_t seed,
                                   hcpca_drift_study** out);
void hcpca_drift_study_free(hcpca_drift_study* s);
int hcpca_drift_study_rows(const hcpca_drift_study* s);
hcpca_status hcpca_drift_study_row(const hcpca_drift_study* s, int idx,
                                   hcpca_drift_row* out);
/* island growth: D estimate, right-boundary drift R, and the residual
 * |D - (2R + (n-1))| with its combined sigma */
void hcpca_drift_study_growth(const hcpca_drift_study* s, double* d_mean,
                              double* r_mean, double* residual, double* sigma);
uint64_t hcpca_drift_study_samples(const hcpca_drift_study* s);

/* ---- boundary record tracking ------------------------------------------ */

typedef struct hcpca_track hcpca_track;

typedef struct hcpca_track_row {
  int t;
  int64_t i, j;
  int64_t i_mod_doubled, j_mod_doubled;
  char f_right[8]; /* tuple of the m rightmost cells, or "-" */
  char cls[8];
  int gap_ok, alive, clean_left, clean_right;
} hcpca_track_row;

/* plant != 0 starts from a planted island (required when eps0 = eps1 = 0). */
hcpca_status hcpca_track_run(const hcpca_params* p, int n, int width, int steps,
                             uint64_t seed, uint64_t trial, int plant,
                             hcpca_track** out);
void hcpca_track_free(hcpca_track* t);
int hcpca_track_rows(const hcpca_track* t);
hcpca_status hcpca_track_row_get(const hcpca_track* t, int idx,
                                 hcpca_track_row* out);

/* ---- symbolic verification ---------------------------------------------- */

typedef struct hcpca_verify hcpca_verify;

/* grid step is a rational "1/50"-style string dividing 1/2. corrupt != 0
 * damages one frozen coefficient to prove the checker reports failures. */
hcpca_status hcpca_verify_run(const char* grid_step, int corrupt,
                              hcpca_verify** out);
void hcpca_verify_free(hcpca_verify* v);
int hcpca_verify_count(const hcpca_verify* v);
int hcpca_verify_all_pass(const hcpca_verify* v);
const char* hcpca_verify_name(const hcpca_verify* v, int idx);
int hcpca_verify_pass(const hcpca_verify* v, int idx);
const char* hcpca_verify_detail(const hcpca_verify* v, int idx);
const char* hcpca_verify_json(const hcpca_verify* v);

/* ---- percolation game --------------------------------------------------- */

/* P(bottom-center site undecided) after `height` rows of optimal play below
 * the unknown horizon, with a 95% binomial interval. */
hcpca_status hcpca_game_draw(const hcpca_params* p, int n, int width, int height,
                             uint64_t trials, uint64_t seed, double* estimate,
                             double* lo, double* hi);

/* Exact per-site equality of the solved boards and the shared-stream
 * three-state runs; identical = 1 when every site of every board matches. */
hcpca_status hcpca_game_equivalence(const hcpca_params* p, int n, int width,
                                    int height, uint64_t boards, uint64_t seed,
                                    int* identical);

typedef struct hcpca_board hcpca_board;

hcpca_status hcpca_board_create(const hcpca_params* p, int n, int width,
                                int height, uint64_t seed, uint64_t trial,
                                hcpca_board** out);
void hcpca_board_free(hcpca_board* b);
const char* hcpca_board_labels(const hcpca_board* b);   /* T/G/. rows, top-down */
const char* hcpca_board_outcomes(const hcpca_board* b); /* 0/1/? rows, top-down */

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HCPCA_H */
