// Command-line front end; talks to the core exclusively through the C API.
#include "hcpca.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;

struct Common {
  std::string eps0 = "1/10";
  std::string eps1 = "1/10";
  int n = 2;
  uint64_t seed = 1;
  std::string config_path;
};

// --config overrides flags: values present in the file win.
template <typename T>
void overlay(const nlohmann::json& j, const char* key, T& value) {
  if (j.contains(key)) value = j.at(key).get<T>();
}

bool load_config(const std::string& path, nlohmann::json& out) {
  std::ifstream in(path);
  if (!in) return false;
  try {
    in >> out;
  } catch (...) {
    return false;
  }
  return true;
}

std::string config_echo(const nlohmann::json& j) { return j.dump(); }

struct ParamsHandle {
  hcpca_params* p = nullptr;
  ~ParamsHandle() { hcpca_params_free(p); }
};

int make_params(const Common& c, ParamsHandle& h) {
  if (hcpca_params_parse(c.eps0.c_str(), c.eps1.c_str(), &h.p) != HCPCA_OK) {
    std::cerr << "error: " << hcpca_last_error() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

void write_header(std::ostream& os, const nlohmann::json& cfg) {
  os << "# hcpca " << hcpca_version() << "\n";
  os << "# config: " << config_echo(cfg) << "\n";
}

int cmd_simulate(const Common& common, int width, int steps, bool dump_rows,
                 const std::string& out_path) {
  ParamsHandle ph;
  if (int rc = make_params(common, ph)) return rc;

  hcpca_sim* sim = nullptr;
  if (hcpca_sim_run(ph.p, common.n, width, steps, common.seed, dump_rows ? 1 : 0,
                    &sim) != HCPCA_OK) {
    std::cerr << "error: " << hcpca_last_error() << "\n";
    return kExitConfig;
  }

  nlohmann::json cfg{{"command", "simulate"},
                     {"n", common.n},
                     {"eps0", hcpca_params_eps0(ph.p)},
                     {"eps1", hcpca_params_eps1(ph.p)},
                     {"width", width},
                     {"steps", steps},
                     {"seed", common.seed}};
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    os = &file;
  }
  write_header(*os, cfg);
  *os << "t,density_question,density_one\n";
  char buf[64];
  for (int t = 0; t <= hcpca_sim_steps(sim); ++t) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g", t, hcpca_sim_q_density(sim, t),
                  hcpca_sim_one_density(sim, t));
    *os << buf << "\n";
  }
  if (dump_rows) {
    for (int t = 0; t <= hcpca_sim_steps(sim); ++t)
      *os << "# row " << t << " " << hcpca_sim_row(sim, t) << "\n";
  }
  hcpca_sim_free(sim);
  return kExitOk;
}

int cmd_islands(const Common& common, int width, int steps, uint64_t trials,
                const std::string& drifts_path, const std::string& records_path) {
  ParamsHandle ph;
  if (int rc = make_params(common, ph)) return rc;

  nlohmann::json cfg{{"command", "islands"},
                     {"n", common.n},
                     {"eps0", hcpca_params_eps0(ph.p)},
                     {"eps1", hcpca_params_eps1(ph.p)},
                     {"width", width},
                     {"steps", steps},
                     {"trials", trials},
                     {"seed", common.seed}};

  if (!records_path.empty()) {
    hcpca_track* tr = nullptr;
    if (hcpca_track_run(ph.p, common.n, width, steps, common.seed, 0, 1, &tr) !=
        HCPCA_OK) {
      std::cerr << "error: " << hcpca_last_error() << "\n";
      return kExitConfig;
    }
    std::ofstream rf(records_path);
    write_header(rf, cfg);
    rf << "t,i,j,i_mod_doubled,j_mod_doubled,f_right,class_right,gap_ok,alive,"
          "clean_left,clean_right\n";
    for (int k = 0; k < hcpca_track_rows(tr); ++k) {
      hcpca_track_row row;
      hcpca_track_row_get(tr, k, &row);
      rf << row.t << "," << row.i << "," << row.j << "," << row.i_mod_doubled << ","
         << row.j_mod_doubled << "," << row.f_right << "," << row.cls << ","
         << row.gap_ok << "," << row.alive << "," << row.clean_left << ","
         << row.clean_right << "\n";
    }
    hcpca_track_free(tr);
  }

  hcpca_drift_study* st = nullptr;
  if (hcpca_drift_study_run(ph.p, common.n, width, steps, trials, common.seed,
                            &st) != HCPCA_OK) {
    std::cerr << "error: " << hcpca_last_error() << "\n";
    return kExitConfig;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!drifts_path.empty()) {
    file.open(drifts_path);
    os = &file;
  }
  write_header(*os, cfg);
  double d = 0, r = 0, resid = 0, sigma = 0;
  hcpca_drift_study_growth(st, &d, &r, &resid, &sigma);
  *os << "# growth: D=" << d << " R=" << r << " |D-(2R+" << (common.n - 1)
      << ")|=" << resid << " sigma=" << sigma << "\n";
  *os << "# conditioned one-step samples: " << hcpca_drift_study_samples(st) << "\n";
  *os << "class,k_steps,count,mean,stderr,exact,exact_is_bound,z\n";
  char buf[256];
  for (int k = 0; k < hcpca_drift_study_rows(st); ++k) {
    hcpca_drift_row row;
    hcpca_drift_study_row(st, k, &row);
    std::snprintf(buf, sizeof buf, "%s,%d,%" PRId64 ",%.10g,%.10g,%.10g,%d,%.6g",
                  row.cls, row.k_steps, row.count, row.mean, row.se, row.exact,
                  row.exact_is_bound, row.z);
    *os << buf << "\n";
  }
  hcpca_drift_study_free(st);
  return kExitOk;
}

int cmd_verify(const std::string& grid_step, const std::string& json_path,
               bool corrupt) {
  hcpca_verify* v = nullptr;
  if (hcpca_verify_run(grid_step.c_str(), corrupt ? 1 : 0, &v) != HCPCA_OK) {
    std::cerr << "error: " << hcpca_last_error() << "\n";
    return kExitConfig;
  }
  for (int k = 0; k < hcpca_verify_count(v); ++k) {
    std::cout << (hcpca_verify_pass(v, k) ? "[pass] " : "[FAIL] ")
              << hcpca_verify_name(v, k) << ": " << hcpca_verify_detail(v, k)
              << "\n";
  }
  bool ok = hcpca_verify_all_pass(v) != 0;
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  if (!json_path.empty()) {
    std::ofstream jf(json_path);
    jf << hcpca_verify_json(v) << "\n";
  }
  hcpca_verify_free(v);
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_game(const Common& common, int width, std::vector<int> heights,
             uint64_t trials, bool equivalence, uint64_t boards, int height,
             bool dump_board, const std::string& out_path) {
  ParamsHandle ph;
  if (int rc = make_params(common, ph)) return rc;

  nlohmann::json cfg{{"command", "game"},
                     {"n", common.n},
                     {"eps0", hcpca_params_eps0(ph.p)},
                     {"eps1", hcpca_params_eps1(ph.p)},
                     {"width", width},
                     {"trials", trials},
                     {"seed", common.seed}};

  if (dump_board) {
    hcpca_board* b = nullptr;
    if (hcpca_board_create(ph.p, common.n, width, height, common.seed, 0, &b) !=
        HCPCA_OK) {
      std::cerr << "error: " << hcpca_last_error() << "\n";
      return kExitConfig;
    }
    std::cout << "# labels (T=trap, G=target, .=open), top row first\n"
              << hcpca_board_labels(b) << "# outcomes\n"
              << hcpca_board_outcomes(b);
    hcpca_board_free(b);
    return kExitOk;
  }

  if (equivalence) {
    int same = 0;
    if (hcpca_game_equivalence(ph.p, common.n, width, height, boards, common.seed,
                               &same) != HCPCA_OK) {
      std::cerr << "error: " << hcpca_last_error() << "\n";
      return kExitConfig;
    }
    std::cout << "equivalence over " << boards << " boards " << width << "x"
              << height << ": " << (same ? "identical" : "MISMATCH") << "\n";
    return same ? kExitOk : kExitVerifyFail;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    os = &file;
  }
  write_header(*os, cfg);
  *os << "height,trials,draw_estimate,ci_low,ci_high\n";
  char buf[128];
  for (int h : heights) {
    double est = 0, lo = 0, hi = 0;
    if (hcpca_game_draw(ph.p, common.n, width, h, trials, common.seed, &est, &lo,
                        &hi) != HCPCA_OK) {
      std::cerr << "error: " << hcpca_last_error() << "\n";
      return kExitConfig;
    }
    std::snprintf(buf, sizeof buf, "%d,%" PRIu64 ",%.10g,%.10g,%.10g", h, trials,
                  est, lo, hi);
    *os << buf << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hard-core PCA workbench"};
  app.require_subcommand(1);

  Common common;
  int width = 4096, steps = 2000;
  uint64_t trials = 2000;
  bool dump_rows = false, corrupt = false, equivalence = false, dump_board = false;
  std::string out_path, records_path, grid_step = "1/50", json_path;
  std::vector<int> heights{10, 20, 50};
  uint64_t boards = 200;
  int height = 64;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", common.n, "neighborhood size");
    sub->add_option("--eps0", common.eps0, "target error probability, p/q or decimal");
    sub->add_option("--eps1", common.eps1, "trap error probability, p/q or decimal");
    sub->add_option("--seed", common.seed, "master seed");
    sub->add_option("--config", common.config_path, "JSON config; overrides flags");
  };

  CLI::App* sim = app.add_subcommand("simulate", "three-state lattice run from all-?");
  add_common(sim);
  sim->add_option("--width", width, "ring width");
  sim->add_option("--steps", steps, "time steps");
  sim->add_flag("--dump-rows", dump_rows, "append row text as comments");
  sim->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI::App* isl = app.add_subcommand("islands", "boundary drift study");
  add_common(isl);
  isl->add_option("--width", width, "ring width");
  isl->add_option("--steps", steps, "steps per trajectory")->default_val(6);
  isl->add_option("--trials", trials, "number of trajectories");
  isl->add_option("--drifts", out_path, "drift table CSV path (default stdout)");
  isl->add_option("--records", records_path, "per-step record CSV for trial 0");

  CLI::App* ver = app.add_subcommand("verify", "symbolic drift certification");
  ver->add_option("--grid-step", grid_step, "exact scan step, must divide 1/2");
  ver->add_option("--json", json_path, "write the full JSON report here");
  ver->add_flag("--corrupt", corrupt, "damage one fixture (self-test)");
  ver->add_option("--config", common.config_path, "JSON config; overrides flags");

  CLI::App* game = app.add_subcommand("game", "percolation game experiments");
  add_common(game);
  game->add_option("--width", width, "board width");
  game->add_option("--heights", heights, "draw-curve heights");
  game->add_option("--trials", trials, "boards per height");
  game->add_flag("--equivalence", equivalence, "check exact match with the PCA");
  game->add_option("--boards", boards, "boards for the equivalence check");
  game->add_option("--height", height, "board height for equivalence/dump");
  game->add_flag("--dump-board", dump_board, "print one board and its outcomes");
  game->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (!common.config_path.empty()) {
    nlohmann::json j;
    if (!load_config(common.config_path, j)) {
      std::cerr << "error: cannot read config " << common.config_path << "\n";
      return kExitConfig;
    }
    overlay(j, "n", common.n);
    overlay(j, "eps0", common.eps0);
    overlay(j, "eps1", common.eps1);
    overlay(j, "seed", common.seed);
    overlay(j, "width", width);
    overlay(j, "steps", steps);
    overlay(j, "trials", trials);
    overlay(j, "grid_step", grid_step);
    overlay(j, "heights", heights);
    overlay(j, "boards", boards);
    overlay(j, "height", height);
  }

  try {
    if (sim->parsed()) return cmd_simulate(common, width, steps, dump_rows, out_path);
    if (isl->parsed())
      return cmd_islands(common, width, steps, trials, out_path, records_path);
    if (ver->parsed()) return cmd_verify(grid_step, json_path, corrupt);
    if (game->parsed())
      return cmd_game(common, width, heights, trials, equivalence, boards, height,
                      dump_board, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
