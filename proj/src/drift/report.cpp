#include "drift/report.hpp"

#include "drift/certificates.hpp"
#include "drift/chain.hpp"
#include "drift/drifts.hpp"
#include "drift/reference.hpp"

#include <json.hpp>

namespace hcpca {

namespace {

std::string first_mismatch(const Poly& got, const Poly& want) {
  Poly diff = got - want;
  if (diff.is_zero()) return "";
  const auto& [m, c] = *diff.terms().begin();
  Poly unit = Poly::mono(rat(1), m.a0, m.a1);
  return "coefficient of " + canonical_string(unit) + ": got " +
         rat_str(want.coeff(m.a0, m.a1) + c) + ", want " + rat_str(want.coeff(m.a0, m.a1));
}

void check_poly(VerifyReport& rep, const std::string& name, const Poly& got,
                const Poly& want) {
  std::string miss = first_mismatch(got, want);
  rep.checks.push_back({name, miss.empty(),
                        miss.empty() ? "matches: " + canonical_string(want) : miss});
}

void check_true(VerifyReport& rep, const std::string& name, bool ok,
                const std::string& detail) {
  rep.checks.push_back({name, ok, detail});
}

Poly shifted_expansion(const RatFn& value, const Rat& constant, const Rat& d, unsigned p) {
  // value - constant - d (1-r)^p / r, which must reduce to a polynomial
  RatFn rest = value - RatFn(constant);
  if (d != 0) rest -= d * RatFn((Poly::e0() + Poly::e1()).pow(p), 1);
  auto poly = rest.as_poly();
  if (!poly) throw std::domain_error("expansion does not reduce to a polynomial");
  return *poly;
}

}  // namespace

VerifyReport run_verify(const Rat& grid_step, bool corrupt) {
  VerifyReport rep;
  nlohmann::json j;
  j["grid_step"] = rat_str(grid_step);

  // --- kernel mass identities ---
  struct Named {
    const char* name;
    Kernel k;
  };
  Named kernels[] = {{"mass/n2-general", kernel_n2_general()},
                     {"mass/n2-00", kernel_n2_00()},
                     {"mass/n3-recent-one", kernel_n3_recent_one()},
                     {"mass/n3-1000", kernel_n3_1000()},
                     {"mass/n3-0000", kernel_n3_0000()}};
  for (const auto& nk : kernels) {
    RatFn mass = kernel_mass(nk.k);
    bool ok = mass == RatFn(1);
    check_true(rep, nk.name, ok, ok ? "total mass 1" : canonical_string(mass));
  }

  // --- closed-form expansion matches ---
  Drift gen = drift1(kernel_n2_general());
  check_poly(rep, "expand/n2-general-one-step",
             shifted_expansion(gen.value, rat(-1, 2), rat(1), 2),
             ref::one_step_n2_general());

  Drift d00n2 = drift1(kernel_n2_00());
  check_true(rep, "identity/n2-00-one-step-bound",
             d00n2.value == ref::one_step_n2_00_bound(),
             canonical_string(d00n2.value));

  check_poly(rep, "identity/n2-general-minus-00-bound",
             *(gen.value - ref::one_step_n2_00_bound()).as_poly(),
             ref::n2_general_minus_00_bound());

  check_poly(rep, "expand/n3-recent-one-one-step",
             shifted_expansion(drift1(kernel_n3_recent_one()).value, rat(0), rat(1), 3),
             ref::one_step_recent_one());
  check_poly(rep, "expand/n3-1000-one-step",
             shifted_expansion(drift1(kernel_n3_1000()).value, rat(0), rat(1), 3),
             ref::one_step_1000());
  check_poly(rep, "expand/n3-0000-one-step-bound",
             shifted_expansion(drift1(kernel_n3_0000()).value, rat(0), rat(1), 3),
             ref::one_step_0000_bound());

  Poly two00_ref = ref::two_step_00_n2();
  if (corrupt) two00_ref.add_term(rat(1, 2), 2, 1);  // deliberate fixture damage
  check_poly(rep, "expand/n2-00-two-step",
             shifted_expansion(two_step_00_n2().value, rat(-1), rat(2), 2), two00_ref);
  check_poly(rep, "expand/n3-1000-two-step",
             shifted_expansion(two_step_1000().value, rat(-2), rat(2), 3),
             ref::two_step_1000());
  TwoStep0000 ts = two_step_0000();
  check_poly(rep, "expand/n3-0000-two-step-min-i0",
             shifted_expansion(ts.min_is_0000_bound.value, rat(-2), rat(2), 3),
             ref::two_step_0000_min_i0());
  check_poly(rep, "expand/n3-0000-two-step-min-1000",
             shifted_expansion(ts.min_is_1000.value, rat(-2), rat(2), 3),
             ref::two_step_0000_min_1000());

  check_poly(rep, "expand/recent-one-minus-0000-bound",
             *(drift1(kernel_n3_recent_one()).value - drift1(kernel_n3_0000()).value).as_poly(),
             ref::gap_recent_one_minus_0000_bound());
  check_poly(rep, "expand/recent-one-minus-1000",
             *(drift1(kernel_n3_recent_one()).value - drift1(kernel_n3_1000()).value).as_poly(),
             ref::gap_recent_one_minus_1000());

  // --- certificate replays ---
  nlohmann::json jcerts = nlohmann::json::array();
  for (const Certificate& c : builtin_certificates()) {
    CertReplay r = verify_certificate(c);
    check_true(rep, "cert/" + c.name, r.pass,
               r.pass ? "residual " + canonical_string(r.residual) : r.gap);
    jcerts.push_back({{"name", c.name},
                      {"pass", r.pass},
                      {"residual", canonical_string(r.residual)}});
  }
  j["certificates"] = jcerts;

  // certified remainders shown in the derivations
  {
    auto certs = builtin_certificates();
    for (const Certificate& c : certs) {
      if (c.name == "recent-one-vs-0000-bound") {
        CertReplay r = verify_certificate(c);
        check_poly(rep, "expand/recent-one-vs-0000-bound-final", r.pre_square,
                   ref::gap_recent_one_minus_0000_bound_final());
      } else if (c.name == "recent-one-vs-1000") {
        CertReplay r = verify_certificate(c);
        check_poly(rep, "expand/recent-one-vs-1000-final", r.residual,
                   ref::gap_recent_one_minus_1000_final());
      }
    }
  }

  // --- exact grid scans ---
  struct ScanCase {
    const char* name;
    RatFn target;
    Rat floor_;
  };
  std::vector<ScanCase> scans;
  scans.push_back({"grid/n2-general-one-step", gen.value, rat(-1, 2)});
  scans.push_back({"grid/n2-00-two-step", two_step_00_n2().value, rat(-1)});
  scans.push_back({"grid/n3-recent-one-one-step", drift1(kernel_n3_recent_one()).value, rat(-1)});
  scans.push_back({"grid/n3-1000-two-step", two_step_1000().value, rat(-2)});
  scans.push_back({"grid/n3-0000-two-step-min-i0", ts.min_is_0000_bound.value, rat(-2)});
  scans.push_back({"grid/n3-0000-two-step-min-1000", ts.min_is_1000.value, rat(-2)});
  nlohmann::json jscans = nlohmann::json::array();
  for (const auto& sc : scans) {
    GridScan g = grid_scan(sc.target, sc.floor_, grid_step);
    std::string where = "min " + rat_str(g.minimum) + " at (" + rat_str(g.at_eps0) +
                        ", " + rat_str(g.at_eps1) + ") over " + std::to_string(g.points) +
                        " points";
    check_true(rep, sc.name, g.positive, where);
    jscans.push_back({{"name", sc.name},
                      {"minimum", rat_str(g.minimum)},
                      {"eps0", rat_str(g.at_eps0)},
                      {"eps1", rat_str(g.at_eps1)},
                      {"positive", g.positive}});
  }
  j["grid_scans"] = jscans;

  // --- min-max sweeps over the boundary chains ---
  for (int n : {2, 3}) {
    GridCheckResult g = boundary_grid_check(n, grid_step);
    std::string detail = "worst bound " + rat_str(g.worst_bound) + " at (" +
                         rat_str(g.at_eps0) + ", " + rat_str(g.at_eps1) + "), goal > " +
                         rat_str(rat(-(n - 1), 2));
    check_true(rep, n == 2 ? "minmax/n2-grid" : "minmax/n3-grid", g.all_pass, detail);
    j[n == 2 ? "minmax_n2" : "minmax_n3"] = {{"worst", rat_str(g.worst_bound)},
                                             {"pass", g.all_pass}};
  }

  for (const auto& c : rep.checks) rep.all_pass &= c.pass;
  j["all_pass"] = rep.all_pass;
  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = jchecks;
  rep.json = j.dump(2);
  return rep;
}

}  // namespace hcpca
