#include "vinozeta/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "vinozeta/error.hpp"
#include "vinozeta/expsum_large.hpp"
#include "vinozeta/expsum_small.hpp"
#include "vinozeta/nt_base.hpp"
#include "vinozeta/oracle.hpp"
#include "vinozeta/parallel.hpp"
#include "vinozeta/vino_complete.hpp"
#include "vinozeta/vino_incomplete.hpp"
#include "vinozeta/zeta_bounds.hpp"

namespace vinozeta::acceptance {

CheckResult small_lambda_table(const Options& opts) {
  const auto& published = small::published_table61();
  const auto rows = parallel_map(published.size(), opts.jobs, [&](std::size_t i) {
    return small::table61_row(published[i].k);
  });
  int mismatches = 0;
  std::string first;
  double worst_gap = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& p = published[i];
    const auto& r = rows[i];
    const bool ok = r.n0 == p.n0 && r.n == p.n && r.C > p.C - 1.5e-4 && r.C <= p.C + 5e-5;
    worst_gap = std::max(worst_gap, std::fabs(r.C - p.C));
    if (!ok && mismatches++ == 0)
      first = fmt::format("; first mismatch k={}: got (n0={}, n={}, C={:.6f}), table ({}, {}, {:.4f})",
                          p.k, r.n0, r.n, r.C, p.n0, p.n, p.C);
  }
  return {"small-lambda table", mismatches == 0,
          fmt::format("{} rows, {} mismatches, max |C - table| = {:.2e}{}", rows.size(), mismatches,
                      worst_gap, first)};
}

CheckResult complete_system_bands(const Options& opts) {
  struct Band {
    int lo, hi;
  };
  const Band bands[] = {{129, 149}, {150, 199}, {200, 400}};
  bool ok = true;
  std::string detail;
  for (const Band& b : bands) {
    const auto results = parallel_map(static_cast<std::size_t>(b.hi - b.lo + 1), opts.jobs,
                                      [&](std::size_t i) {
                                        return complete::theorem3_search(b.lo + static_cast<int>(i));
                                      });
    double max_rho = 0.0, max_theta = 0.0;
    for (const auto& r : results) {
      max_rho = std::max(max_rho, r.rho);
      max_theta = std::max(max_theta, r.theta);
    }
    const auto pub = complete::published_rho_theta(b.lo);
    const bool band_ok = max_rho <= pub.rho && max_theta <= pub.theta;
    ok = ok && band_ok;
    detail += fmt::format("{}[{},{}] rho {:.5f}<={:.5f} theta {:.4f}<={:.4f}", detail.empty() ? "" : "; ",
                          b.lo, b.hi, max_rho, pub.rho, max_theta, pub.theta);
  }
  return {"complete-system rho/theta bands", ok, detail};
}

CheckResult interval_search(const Options& opts) {
  large::LargeLambdaConfig cfg;  // Y = 300, xi = 3.6, s searched, goal 133.66
  const auto main_rows = large::search_intervals(87.0, 220.0, cfg, opts.jobs);
  double max_c = 0.0, max_u = 0.0;
  int infeasible = 0;
  for (const auto& r : main_rows) {
    if (!r.feasible) {
      ++infeasible;
      continue;
    }
    max_c = std::max(max_c, r.constant_c);
    max_u = std::max(max_u, r.denom_u);
  }
  // The constant for a whole range is the worst of its per-interval optima; an
  // interval with no admissible choice makes the range unusable.
  const auto edge_rows = large::search_intervals(86.0, 87.0, cfg, opts.jobs);
  double edge_c = 0.0;
  int edge_infeasible = 0;
  for (const auto& r : edge_rows) {
    if (!r.feasible) ++edge_infeasible;
    edge_c = std::max(edge_c, r.feasible ? r.constant_c : std::numeric_limits<double>::infinity());
  }
  const bool ok = infeasible == 0 && max_c <= 8.38 && max_u <= 133.66 && edge_c >= 9.5;
  return {"intermediate-lambda interval search", ok,
          fmt::format("[87,220]: {} intervals, {} infeasible, max C = {:.4f} (<= 8.38), max u = {:.4f} "
                      "(<= 133.66); [86,87]: range constant {:.4f} (>= 9.5), {} of {} intervals infeasible",
                      main_rows.size(), infeasible, max_c, max_u, edge_c, edge_infeasible, edge_rows.size())};
}

CheckResult large_lambda_grid(const Options&) {
  const auto g = large::lemma52_verify(441, 220.0);
  const double eps = 1e-12;
  const bool corner = std::fabs(g.argmax_gamma - (1.1818 + 1.0 / 440.0)) < eps &&
                      std::fabs(g.argmax_phi - (1.2453 - 1.0 / 440.0)) < eps;
  bool ok = g.max_f <= -0.0242145 && corner;
  std::string detail = fmt::format("max f = {:.8f} (<= -0.0242145) at gamma={:.6f}, phi={:.6f}", g.max_f,
                                   g.argmax_gamma, g.argmax_phi);
  for (double lam : {220.0, 1e3, 1e6}) {
    const double m = large::lemma52_verify(441, lam).max_f;
    const double e = large::lemma52_assembled(lam, m);
    ok = ok && e <= -1.0 / 133.58;
    detail += fmt::format("; lam={:g}: lam^2 E <= {:.8f}", lam, e);
  }
  detail += fmt::format(" (target {:.8f})", -1.0 / 133.58);
  if (!ok) detail += "; the stated grid maximum is only reached if the 1.001 factor on mu2 is dropped from f";
  return {"large-lambda closed-form grid", ok, detail};
}

CheckResult zeta_constants(const Options&) {
  const auto z = zeta::lemma73_constants(zeta::kExpSumC, zeta::kExpSumD);
  const auto integral = zeta::verify_integral_constant(1e-9);
  const bool ok = z.B <= 4.45 && z.A <= 76.2 && integral.max_value <= 1.0875034 &&
                  integral.argmax_y >= 0.70 && integral.argmax_y <= 0.72;
  return {"zeta constants", ok,
          fmt::format("A = {:.6f} (<= 76.2), B = {:.6f} (<= 4.45), integral max = {:.9f} (<= 1.0875034) "
                      "at y = {:.4f}",
                      z.A, z.B, integral.max_value, integral.argmax_y)};
}

CheckResult coefficient_envelope(const Options&) {
  std::vector<double> grid;
  for (int i = 0; i <= 4000; ++i) grid.push_back(std::pow(10.0, 4.0 * i / 4000.0));
  for (int k = 3; k <= 87; ++k) {
    grid.push_back(k);
    grid.push_back(k + 1e-9);
    grid.push_back(k - 1e-9);
  }
  for (double x : {2.6, 2.6 + 1e-9, 87.0 + 1e-9, 220.0, 220.0 + 1e-9}) grid.push_back(x);
  double worst = 0.0, worst_lam = 0.0;
  bool denom_ok = true;
  for (double lam : grid) {
    if (lam < 1.0 || lam > 1e4) continue;
    const auto c = small::theorem2_coefficient(lam);
    if (c.envelope > worst) {
      worst = c.envelope;
      worst_lam = lam;
    }
    if (lam > 2.6 && (c.denom != 133.66 || c.certified_denom > 133.66)) denom_ok = false;
  }
  return {"S(N,t) coefficient envelope", worst <= 9.463 && denom_ok,
          fmt::format("max coefficient {:.4f} at lambda {:.4f} (<= 9.463); denominators {}", worst,
                      worst_lam, denom_ok ? "133.66 beyond 2.6" : "wrong")};
}

CheckResult oracle_suite(const Options& opts) {
  struct Case {
    int s, k;
    std::int64_t P;
  };
  std::vector<Case> cases;
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k)
      for (std::int64_t P = 1; P <= 10; ++P) cases.push_back({s, k, P});
  for (std::int64_t P = 1; P <= 8; ++P) cases.push_back({4, 2, P});
  const auto chains = parallel_map(cases.size(), opts.jobs, [&](std::size_t i) {
    return oracle::verify_bounds_chain(cases[i].s, cases[i].k, cases[i].P).checks.size();
  });
  std::size_t inequalities = 0;
  for (auto n : chains) inequalities += n;

  std::int64_t zrd_targets = 0;
  for (int s = 1; s <= 2; ++s)
    for (int k = 1; k <= 2; ++k)
      for (int h = 1; h <= k; ++h)
        for (std::int64_t P = 1; P <= 6; ++P)
          zrd_targets += oracle::verify_zrd(oracle::SystemSpec::interval(s, k, h, P)).targets_checked;

  std::mt19937_64 rng(20011022);
  int sign_flips = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 7)(rng);
    const int d = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const std::int64_t T = std::uniform_int_distribution<int>(1, 6)(rng);
    const int m = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto poly = oracle::PolySystem::random(k, d, T, m, rng);
    std::vector<std::int64_t> pool{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(k - d));
    if (!oracle::det_identity_check(poly, pool).sign_equal) ++sign_flips;
  }

  std::size_t congruences = 0;
  for (const auto& c : oracle::standard_congruence_cases()) {
    oracle::congruence_count_check(c);
    ++congruences;
  }
  return {"oracle suite", true,
          fmt::format("{} (s,k,P) instances / {} inequalities, {} targets dominated by zero, 100 "
                      "determinants equal in magnitude ({} differ in sign), {} congruence systems",
                      cases.size(), inequalities, zrd_targets, sign_flips, congruences)};
}

CheckResult number_theory_suite(const Options&) {
  const auto& table = nt::default_table();
  const auto rs = nt::verify_rosser_schoenfeld(table, 68.0, 1e6, 1);
  const auto me = nt::verify_mertens(table, 286.0, 1e6);
  bool ok = true;
  for (std::int64_t N : {21, 50, 130, 500}) ok = ok && nt::primes_in_dyadic_interval(table, N);
  std::size_t smooth_sets = 0;
  for (double R : {9.0, 16.0, 25.0, 100.0}) {
    for (double P : {1.0, 20.0, 99.5, 1000.0, 4321.7, 10000.0}) {
      if (R > P && P > 1.0) continue;
      const nt::SmoothSetSpec spec{P, R, true};
      ok = ok && nt::enumerate_smooth(table, spec) == nt::filter_smooth(table, spec);
      ++smooth_sets;
    }
  }
  return {"number-theory suite", ok,
          fmt::format("prime-count bounds at {} points (min slack {:.3f} / {:.3f}); Mertens ratio max "
                      "{:.4f} over {} points; dyadic prime counts ok; {} smooth sets agree",
                      rs.points_checked, rs.min_lower_slack, rs.min_upper_slack, me.max_ratio,
                      me.points_checked, smooth_sets)};
}

CheckResult cross_module_consistency(const Options&) {
  const int k = 1000;
  const int n_max = complete::lemma36_n_max(k);
  const auto records = complete::lemma35_iteration(k, n_max, 0.06);
  int delta_fail = 0, lnc_fail = 0;
  double worst_delta = -INFINITY, worst_lnc = -INFINITY;
  for (const auto& r : records) {
    if (r.n < 2 * k) continue;
    const auto cf = complete::lemma36_closed_forms(k, r.n);
    worst_delta = std::max(worst_delta, r.delta / cf.delta_bound);
    worst_lnc = std::max(worst_lnc, r.ln_c / cf.ln_c_bound);
    if (r.delta > cf.delta_bound) ++delta_fail;
    if (r.ln_c > cf.ln_c_bound) ++lnc_fail;
  }

  std::mt19937_64 rng(133);
  const double D = 0.1019 * 300.0;
  int points = 0, attempts = 0;
  double worst_rel = 0.0;
  while (points < 20 && attempts < 100000) {
    ++attempts;
    const int g = std::uniform_int_distribution<int>(100, 274)(rng);
    const int h = std::uniform_int_distribution<int>(static_cast<int>(std::ceil(0.9 * g)), g - 2)(rng);
    const int t = g - h + 1;
    const long s = std::uniform_int_distribution<long>(2L * t, static_cast<long>(h / 2) * t)(rng);
    const double xi = std::uniform_real_distribution<double>(3.0, 6.0)(rng);
    const incomplete::IncompleteParams p{g, h, s, 1.0 / (xi * std::pow(static_cast<double>(g), 1.5)), D};
    try {
      incomplete::check_hypotheses(p);
    } catch (const HypothesisError&) {
      continue;
    }
    const double a = incomplete::theorem4_bound(p).ln_c;
    const double b = large::log_c2(g, h, s, xi, D);
    worst_rel = std::max(worst_rel, std::fabs(a - b) / std::fabs(b));
    ++points;
  }
  const bool ok = delta_fail == 0 && lnc_fail == 0 && points == 20 && worst_rel <= 1e-12;
  return {"cross-module consistency", ok,
          fmt::format("k=1000, n in [{}, {}]: max Delta/bound = {:.6f}, max lnC/bound = {:.6f}; "
                      "{} incomplete-system points, max relative gap {:.2e}",
                      2 * k, n_max, worst_delta, worst_lnc, points, worst_rel)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"1", small_lambda_table},       {"2", complete_system_bands}, {"3", interval_search},
      {"4", large_lambda_grid},        {"5", zeta_constants},        {"6", coefficient_envelope},
      {"7", oracle_suite},             {"8", number_theory_suite},   {"9", cross_module_consistency},
  };
  return all;
}

CheckResult run_guarded(const Criterion& c, const Options& opts) {
  try {
    return c.run(opts);
  } catch (const std::exception& e) {
    return {c.id, false, fmt::format("error: {}", e.what())};
  }
}

}  // namespace vinozeta::acceptance
