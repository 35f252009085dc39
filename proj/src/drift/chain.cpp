#include "drift/chain.hpp"

#include "drift/drifts.hpp"

#include <cmath>
#include <stdexcept>

namespace hcpca {

namespace {

void check_stochastic(const ChainSpec& c) {
  size_t m = c.states.size();
  if (c.trans.size() != m || c.jumps.size() != m)
    throw std::invalid_argument("chain tables must match the state count");
  for (size_t i = 0; i < m; ++i) {
    Rat row = rat(0);
    for (const Rat& p : c.trans[i]) {
      if (p < 0) throw std::invalid_argument("negative transition probability");
      row += p;
    }
    if (row != 1) throw std::invalid_argument("transition row does not sum to 1");
    Rat jp = rat(0);
    for (const auto& [v, p] : c.jumps[i]) {
      if (p < 0) throw std::invalid_argument("negative jump probability");
      jp += p;
    }
    if (jp != 1) throw std::invalid_argument("jump distribution does not sum to 1");
  }
}

std::vector<Rat> derive_drift1(const ChainSpec& c) {
  std::vector<Rat> d1;
  d1.reserve(c.states.size());
  for (const auto& dist : c.jumps) {
    Rat m = rat(0);
    for (const auto& [v, p] : dist) m += v * p;
    d1.push_back(m);
  }
  return d1;
}

std::vector<Rat> derive_drift2(const ChainSpec& c) {
  std::vector<Rat> d2(c.states.size(), rat(0));
  for (size_t i = 0; i < c.states.size(); ++i) {
    Rat second = rat(0);
    for (size_t g = 0; g < c.states.size(); ++g) second += c.trans[i][g] * c.drift1[g];
    d2[i] = c.drift1[i] + second;
  }
  return d2;
}

}  // namespace

ChainSpec make_chain(std::vector<std::string> states,
                     std::vector<std::vector<Rat>> trans,
                     std::vector<std::vector<std::pair<Rat, Rat>>> jumps) {
  ChainSpec c{std::move(states), std::move(trans), std::move(jumps), {}, {}};
  check_stochastic(c);
  c.drift1 = derive_drift1(c);
  c.drift2 = derive_drift2(c);
  return c;
}

ChainSpec make_chain_with_drift2(std::vector<std::string> states,
                                 std::vector<std::vector<Rat>> trans,
                                 std::vector<std::vector<std::pair<Rat, Rat>>> jumps,
                                 std::vector<Rat> drift2) {
  ChainSpec c{std::move(states), std::move(trans), std::move(jumps), {}, std::move(drift2)};
  check_stochastic(c);
  c.drift1 = derive_drift1(c);
  if (c.drift2.size() != c.states.size())
    throw std::invalid_argument("drift2 must cover every state");
  return c;
}

Rat minmax_bound(const ChainSpec& c) {
  if (c.states.empty()) throw std::invalid_argument("empty chain");
  Rat best;
  bool first = true;
  for (size_t i = 0; i < c.states.size(); ++i) {
    Rat two = c.drift2[i] / 2;
    Rat m = c.drift1[i] > two ? c.drift1[i] : two;
    if (first || m < best) {
      best = m;
      first = false;
    }
  }
  return best;
}

bool goal_check(const Rat& bound, int n) {
  Rat goal(-(n - 1), 2);
  goal.canonicalize();
  return bound > goal;
}

std::vector<Rat> stationary(const ChainSpec& c) {
  // Solve pi (P - I) = 0 with sum pi = 1 by dense elimination over Rat.
  size_t m = c.states.size();
  // unknowns pi_0..pi_{m-1}; equations: columns of (P - I) plus normalization
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1, rat(0)));
  for (size_t col = 0; col + 1 < m; ++col) {
    for (size_t row = 0; row < m; ++row) {
      a[col][row] = c.trans[row][col] - rat(row == col ? 1 : 0);
    }
    a[col][m] = rat(0);
  }
  for (size_t row = 0; row < m; ++row) a[m - 1][row] = rat(1);
  a[m - 1][m] = rat(1);

  for (size_t i = 0; i < m; ++i) {
    size_t piv = i;
    while (piv < m && a[piv][i] == 0) ++piv;
    if (piv == m) throw std::domain_error("reducible chain: no unique stationary law");
    std::swap(a[i], a[piv]);
    for (size_t r2 = 0; r2 < m; ++r2) {
      if (r2 == i || a[r2][i] == 0) continue;
      Rat f = a[r2][i] / a[i][i];
      for (size_t col = i; col <= m; ++col) a[r2][col] -= f * a[i][col];
    }
  }
  std::vector<Rat> pi(m);
  for (size_t i = 0; i < m; ++i) pi[i] = a[i][m] / a[i][i];
  return pi;
}

Rat stationary_drift(const ChainSpec& c) {
  std::vector<Rat> pi = stationary(c);
  Rat out = rat(0);
  for (size_t i = 0; i < c.states.size(); ++i) out += pi[i] * c.drift1[i];
  return out;
}

AuxSimResult aux_chain_simulate(const ChainSpec& c, uint64_t steps, SeedSpec seed) {
  size_t m = c.states.size();
  AuxSimResult out;
  out.occupation.assign(m, {});
  out.in_f2.assign(m, false);
  for (size_t i = 0; i < m; ++i) out.in_f2[i] = c.drift1[i] < c.drift2[i] / 2;

  std::vector<std::vector<double>> tcdf(m), jcdf(m);
  std::vector<std::vector<double>> jval(m);
  for (size_t i = 0; i < m; ++i) {
    double acc = 0;
    for (const Rat& p : c.trans[i]) tcdf[i].push_back(acc += rat_double(p));
    acc = 0;
    for (const auto& [v, p] : c.jumps[i]) {
      jcdf[i].push_back(acc += rat_double(p));
      jval[i].push_back(rat_double(v));
    }
  }
  auto pick = [](const std::vector<double>& cdf, double u) {
    size_t k = 0;
    while (k + 1 < cdf.size() && u >= cdf[k]) ++k;
    return k;
  };

  size_t f = 0;
  double j = 0, j_hat = 0;
  int w = out.in_f2[f] ? 1 : 0;
  if (w)
    ++out.occupation[f].with_wait;
  else
    ++out.occupation[f].without;

  // batch means over 32 blocks for a crude standard error
  const uint64_t blocks = 32;
  uint64_t block_len = std::max<uint64_t>(1, steps / blocks);
  std::vector<double> bh, br;
  double h0 = 0, r0 = 0;

  for (uint64_t t = 0; t < steps; ++t) {
    double uj = draw_unit(seed, 0, t, 0);
    double ut = draw_unit(seed, 0, t, 1);
    size_t jk = pick(jcdf[f], uj);
    double jump = jval[f][jk];
    size_t f_next = pick(tcdf[f], ut);

    double j_new = j + jump;
    // waiting companion: on w=1 hold at the plain chain's current value and
    // state, then resynchronize (two steps' worth at once)
    double j_hat_new = w == 1 ? j : j_new;
    size_t f_hat = w == 1 ? f : f_next;
    int w_new = w == 1 ? 0 : (out.in_f2[f_next] ? 1 : 0);

    j = j_new;
    f = f_next;
    j_hat = j_hat_new;
    w = w_new;
    if (w)
      ++out.occupation[f_hat].with_wait;
    else
      ++out.occupation[f_hat].without;

    if ((t + 1) % block_len == 0) {
      bh.push_back((j_hat - h0) / static_cast<double>(block_len));
      br.push_back((j - r0) / static_cast<double>(block_len));
      h0 = j_hat;
      r0 = j;
    }
  }
  out.r_hat = j_hat / static_cast<double>(steps);
  out.r_raw = j / static_cast<double>(steps);
  auto se = [](const std::vector<double>& b) {
    if (b.size() < 2) return 0.0;
    double mean = 0;
    for (double v : b) mean += v;
    mean /= static_cast<double>(b.size());
    double var = 0;
    for (double v : b) var += (v - mean) * (v - mean);
    var /= static_cast<double>(b.size() - 1);
    return std::sqrt(var / static_cast<double>(b.size()));
  };
  out.se_hat = se(bh);
  out.se_raw = se(br);
  return out;
}

namespace {

RatFn marginal_of(const std::map<BoundaryClass, RatFn>& m, BoundaryClass c) {
  auto it = m.find(c);
  return it == m.end() ? RatFn() : it->second;
}

// Symbolic pieces are built once; grid sweeps only evaluate them.
struct Pack2 {
  RatFn d_gen, d_00, two_00, g_to_00, z_to_00;
};
struct Pack3 {
  RatFn d_s1, d_10, d_00, two_10, two_00_a, two_00_b;
  RatFn s_to_star, s_to_s1;
  RatFn one_to_s1, one_to_10, one_to_00;
  RatFn z_to_s1, z_to_10, z_to_star, z_to_00;
};

const Pack2& pack2() {
  static const Pack2 p = [] {
    Pack2 out;
    out.d_gen = drift1(kernel_n2_general()).value;
    out.d_00 = drift1(kernel_n2_00()).value;
    out.two_00 = two_step_00_n2().value;
    auto mg = class_marginals(kernel_n2_general());
    auto m0 = class_marginals(kernel_n2_00());
    out.g_to_00 = marginal_of(mg, BoundaryClass::p00);
    // star0 carries the 00 bound, star1 the general drift
    out.z_to_00 = marginal_of(m0, BoundaryClass::p00) + marginal_of(m0, BoundaryClass::star0);
    return out;
  }();
  return p;
}

const Pack3& pack3() {
  static const Pack3 p = [] {
    Pack3 out;
    out.d_s1 = drift1(kernel_n3_recent_one()).value;
    out.d_10 = drift1(kernel_n3_1000()).value;
    out.d_00 = drift1(kernel_n3_0000()).value;
    out.two_10 = two_step_1000().value;
    TwoStep0000 ts = two_step_0000();
    out.two_00_a = ts.min_is_0000_bound.value;
    out.two_00_b = ts.min_is_1000.value;
    auto ms = class_marginals(kernel_n3_recent_one());
    auto m1 = class_marginals(kernel_n3_1000());
    auto m0 = class_marginals(kernel_n3_0000());
    out.s_to_star = marginal_of(ms, BoundaryClass::star000);
    out.s_to_s1 = marginal_of(ms, BoundaryClass::other);
    out.one_to_s1 = marginal_of(m1, BoundaryClass::other);
    out.one_to_10 = marginal_of(m1, BoundaryClass::q1000);
    out.one_to_00 = marginal_of(m1, BoundaryClass::q0000);
    out.z_to_s1 = marginal_of(m0, BoundaryClass::other);
    out.z_to_10 = marginal_of(m0, BoundaryClass::q1000) +
                  marginal_of(m0, BoundaryClass::one_star00);
    out.z_to_star = marginal_of(m0, BoundaryClass::star000) +
                    marginal_of(m0, BoundaryClass::star_pair00);
    out.z_to_00 = marginal_of(m0, BoundaryClass::q0000);
    return out;
  }();
  return p;
}

}  // namespace

ChainSpec boundary_chain(int n, const NoiseParams& p) {
  auto at = [&](const RatFn& f) { return f.eval(p.eps0, p.eps1); };
  if (n == 2) {
    const Pack2& pk = pack2();
    Rat d_gen = at(pk.d_gen), d_00 = at(pk.d_00);
    Rat g_to_00 = at(pk.g_to_00), z_to_00 = at(pk.z_to_00);
    std::vector<std::string> states{"general", "00"};
    std::vector<std::vector<Rat>> trans{{rat(1) - g_to_00, g_to_00},
                                        {rat(1) - z_to_00, z_to_00}};
    std::vector<std::vector<std::pair<Rat, Rat>>> jumps{{{d_gen, rat(1)}},
                                                        {{d_00, rat(1)}}};
    Rat two_00 = at(pk.two_00);
    Rat two_gen = d_gen + g_to_00 * d_00 + (rat(1) - g_to_00) * d_gen;
    return make_chain_with_drift2(states, trans, jumps, {two_gen, two_00});
  }
  if (n == 3) {
    const Pack3& pk = pack3();
    Rat d_s1 = at(pk.d_s1), d_10 = at(pk.d_10), d_00 = at(pk.d_00);
    Rat d_star = std::min(d_00, d_10);
    Rat s_to_star = at(pk.s_to_star), s_to_s1 = at(pk.s_to_s1);
    Rat one_to_s1 = at(pk.one_to_s1), one_to_10 = at(pk.one_to_10),
        one_to_00 = at(pk.one_to_00);
    Rat z_to_s1 = at(pk.z_to_s1), z_to_10 = at(pk.z_to_10),
        z_to_star = at(pk.z_to_star), z_to_00 = at(pk.z_to_00);

    // star000 refines to {0000, 1000}; folded onto 0000 for bookkeeping
    std::vector<std::string> states{"recent-one", "1000", "0000"};
    std::vector<std::vector<Rat>> trans{
        {s_to_s1, rat(0), s_to_star},
        {one_to_s1, one_to_10, one_to_00},
        {z_to_s1, z_to_10, z_to_00 + z_to_star}};
    std::vector<std::vector<std::pair<Rat, Rat>>> jumps{
        {{d_s1, rat(1)}}, {{d_10, rat(1)}}, {{d_00, rat(1)}}};

    Rat d2_00 = std::min(at(pk.two_00_a), at(pk.two_00_b));
    Rat d2_10 = at(pk.two_10);
    Rat d2_s1 = d_s1 + s_to_s1 * d_s1 + s_to_star * d_star;
    return make_chain_with_drift2(states, trans, jumps, {d2_s1, d2_10, d2_00});
  }
  throw std::invalid_argument("boundary chains exist for n in {2,3}");
}

GridCheckResult boundary_grid_check(int n, const Rat& step) {
  GridCheckResult out;
  Rat half = rat(1, 2);
  Rat inv = half / step;
  if (inv * step != half || inv.get_den() != 1)
    throw std::invalid_argument("grid step must divide 1/2");
  long kmax = static_cast<long>(inv.get_num().get_si());
  bool first = true;
  for (long a = 0; a <= kmax; ++a) {
    for (long b = 0; b <= kmax; ++b) {
      if (a == 0 && b == 0) continue;
      Rat e0 = rat(a) * step, e1 = rat(b) * step;
      if (e0 + e1 >= 1) continue;  // r = 0 corner excluded
      NoiseParams p = validate_noise(e0, e1);
      Rat bound = minmax_bound(boundary_chain(n, p));
      ++out.points;
      if (first || bound < out.worst_bound) {
        out.worst_bound = bound;
        out.at_eps0 = e0;
        out.at_eps1 = e1;
        first = false;
      }
      if (!goal_check(bound, n)) out.all_pass = false;
    }
  }
  return out;
}

}  // namespace hcpca
