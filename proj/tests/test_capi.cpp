#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcpca.h"

#include <cmath>
#include <cstring>
#include <string>

TEST_CASE("params parse, echo and validate") {
  hcpca_params* p = nullptr;
  REQUIRE(hcpca_params_parse("1/10", "0.1", &p) == HCPCA_OK);
  double e0 = 0, e1 = 0, r = 0;
  hcpca_params_values(p, &e0, &e1, &r);
  CHECK(e0 == doctest::Approx(0.1));
  CHECK(r == doctest::Approx(0.8));
  CHECK(hcpca_params_theorem_scope(p) == 1);
  CHECK(std::string(hcpca_params_eps0(p)) == "1/10");
  CHECK(std::string(hcpca_params_eps1(p)) == "1/10");
  hcpca_params_free(p);

  hcpca_params* bad = nullptr;
  CHECK(hcpca_params_parse("0.7", "0.7", &bad) == HCPCA_ERR_DOMAIN);
  CHECK(std::string(hcpca_last_error()).size() > 0);
  CHECK(hcpca_params_parse("zzz", "0.1", &bad) == HCPCA_ERR_DOMAIN);
  CHECK(hcpca_params_parse(nullptr, "0.1", &bad) == HCPCA_ERR_INVALID_ARGUMENT);

  hcpca_params* origin = nullptr;
  REQUIRE(hcpca_params_parse("0", "0", &origin) == HCPCA_OK);
  CHECK(hcpca_params_theorem_scope(origin) == 0);
  hcpca_params_free(origin);
}

TEST_CASE("simulation handle") {
  hcpca_params* p = nullptr;
  REQUIRE(hcpca_params_parse("1/10", "1/10", &p) == HCPCA_OK);
  hcpca_sim* s = nullptr;
  REQUIRE(hcpca_sim_run(p, 2, 256, 50, 7, 1, &s) == HCPCA_OK);
  CHECK(hcpca_sim_steps(s) == 50);
  CHECK(hcpca_sim_q_density(s, 0) == 1.0);
  CHECK(hcpca_sim_q_density(s, 50) < 1.0);
  CHECK(hcpca_sim_q_density(s, 51) == -1.0);
  const char* row = hcpca_sim_row(s, 0);
  REQUIRE(row != nullptr);
  CHECK(std::string(row) == std::string(256, '?'));
  hcpca_sim_free(s);

  hcpca_sim* tiny = nullptr;
  CHECK(hcpca_sim_run(p, 2, 16, 5, 7, 0, &tiny) == HCPCA_ERR_INVALID_ARGUMENT);
  hcpca_params_free(p);
}

TEST_CASE("drift study handle") {
  hcpca_params* p = nullptr;
  REQUIRE(hcpca_params_parse("1/10", "1/10", &p) == HCPCA_OK);
  hcpca_drift_study* st = nullptr;
  REQUIRE(hcpca_drift_study_run(p, 2, 256, 4, 400, 11, &st) == HCPCA_OK);
  REQUIRE(hcpca_drift_study_rows(st) > 0);
  bool saw_general = false;
  for (int k = 0; k < hcpca_drift_study_rows(st); ++k) {
    hcpca_drift_row row;
    REQUIRE(hcpca_drift_study_row(st, k, &row) == HCPCA_OK);
    CHECK(row.count > 0);
    if (row.k_steps == 1 && std::strcmp(row.cls, "11") == 0) {
      saw_general = true;
      CHECK(row.exact == doctest::Approx(-0.205));
      CHECK(row.exact_is_bound == 0);
    }
  }
  CHECK(saw_general);
  CHECK(hcpca_drift_study_samples(st) > 0);
  hcpca_drift_row oob;
  CHECK(hcpca_drift_study_row(st, 10000, &oob) == HCPCA_ERR_OUT_OF_RANGE);
  hcpca_drift_study_free(st);
  hcpca_params_free(p);
}

TEST_CASE("track handle") {
  hcpca_params* p = nullptr;
  REQUIRE(hcpca_params_parse("0", "0", &p) == HCPCA_OK);
  hcpca_track* tr = nullptr;
  REQUIRE(hcpca_track_run(p, 2, 128, 10, 3, 0, 1, &tr) == HCPCA_OK);
  REQUIRE(hcpca_track_rows(tr) == 11);
  hcpca_track_row a, b;
  REQUIRE(hcpca_track_row_get(tr, 0, &a) == HCPCA_OK);
  REQUIRE(hcpca_track_row_get(tr, 1, &b) == HCPCA_OK);
  CHECK(b.j_mod_doubled - a.j_mod_doubled == -1);  // noise-free drift -1/2
  CHECK(a.gap_ok == 1);
  CHECK(std::strlen(a.f_right) == 2);
  hcpca_track_free(tr);
  hcpca_params_free(p);
}

TEST_CASE("verify handle round-trip") {
  hcpca_verify* v = nullptr;
  REQUIRE(hcpca_verify_run("1/10", 0, &v) == HCPCA_OK);
  CHECK(hcpca_verify_all_pass(v) == 1);
  REQUIRE(hcpca_verify_count(v) > 20);
  for (int k = 0; k < hcpca_verify_count(v); ++k) {
    CHECK(hcpca_verify_pass(v, k) == 1);
    CHECK(hcpca_verify_name(v, k) != nullptr);
  }
  CHECK(std::string(hcpca_verify_json(v)).find("grid_step") != std::string::npos);
  hcpca_verify_free(v);

  hcpca_verify* bad = nullptr;
  REQUIRE(hcpca_verify_run("1/10", 1, &bad) == HCPCA_OK);
  CHECK(hcpca_verify_all_pass(bad) == 0);
  hcpca_verify_free(bad);

  CHECK(hcpca_verify_run("1/3", 0, &v) == HCPCA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("game entry points") {
  hcpca_params* p = nullptr;
  REQUIRE(hcpca_params_parse("1/10", "1/10", &p) == HCPCA_OK);

  double est = 0, lo = 0, hi = 0;
  REQUIRE(hcpca_game_draw(p, 2, 64, 5, 200, 3, &est, &lo, &hi) == HCPCA_OK);
  CHECK(lo <= est);
  CHECK(est <= hi);

  int same = -1;
  REQUIRE(hcpca_game_equivalence(p, 2, 64, 64, 10, 3, &same) == HCPCA_OK);
  CHECK(same == 1);

  hcpca_board* b = nullptr;
  REQUIRE(hcpca_board_create(p, 2, 8, 4, 3, 0, &b) == HCPCA_OK);
  std::string labels = hcpca_board_labels(b);
  std::string outs = hcpca_board_outcomes(b);
  CHECK(labels.size() == 9 * 4);
  CHECK(outs.substr(0, 8) == "????????");
  hcpca_board_free(b);
  hcpca_params_free(p);
}
