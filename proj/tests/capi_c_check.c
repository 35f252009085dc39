/* The public header must stay consumable from plain C. */
#include "hcpca.h"

#include <stdio.h>
#include <string.h>

static int fail(const char* what) {
  fprintf(stderr, "c check failed: %s (%s)\n", what, hcpca_last_error());
  return 1;
}

int main(void) {
  hcpca_params* p = NULL;
  if (hcpca_params_parse("1/10", "1/10", &p) != HCPCA_OK) return fail("parse");
  double e0 = 0, e1 = 0, r = 0;
  hcpca_params_values(p, &e0, &e1, &r);
  if (!(r > 0.79 && r < 0.81)) return fail("r");
  if (!hcpca_params_theorem_scope(p)) return fail("scope");
  if (strcmp(hcpca_params_eps0(p), "1/10") != 0) return fail("echo");

  hcpca_sim* s = NULL;
  if (hcpca_sim_run(p, 2, 128, 20, 5, 0, &s) != HCPCA_OK) return fail("sim");
  if (hcpca_sim_steps(s) != 20) return fail("steps");
  if (!(hcpca_sim_q_density(s, 20) < 1.0)) return fail("density");
  hcpca_sim_free(s);

  double est, lo, hi;
  if (hcpca_game_draw(p, 2, 64, 4, 100, 5, &est, &lo, &hi) != HCPCA_OK)
    return fail("draw");
  if (!(lo <= est && est <= hi)) return fail("ci");

  hcpca_params_free(p);

  hcpca_params* bad = NULL;
  if (hcpca_params_parse("0.9", "0.9", &bad) != HCPCA_ERR_DOMAIN)
    return fail("mass check");
  printf("c api ok\n");
  return 0;
}
