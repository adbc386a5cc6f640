#include "vinozeta/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "vinozeta/acceptance.hpp"
#include "vinozeta/error.hpp"
#include "vinozeta/expsum_large.hpp"
#include "vinozeta/expsum_small.hpp"
#include "vinozeta/oracle.hpp"
#include "vinozeta/parallel.hpp"
#include "vinozeta/vino_complete.hpp"
#include "vinozeta/vino_incomplete.hpp"
#include "vinozeta/zeta_bounds.hpp"

namespace vinozeta::cli {

namespace {

using nlohmann::json;

// JSON numbers carry 12 significant digits.
double j12(double x) { return std::isfinite(x) ? std::stod(fmt::format("{:.12g}", x)) : x; }

// Table values are rounded up in the fourth decimal.
double up4(double x) { return std::ceil(x * 1e4 - 1e-9) / 1e4; }

struct Globals {
  bool json = false;
  int jobs = 1;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_theorem3(std::ostream& out, const Globals& g, int k_min, int k_max,
                 const complete::Theorem3Options& opts) {
  if (k_min < 129 || k_max < k_min) throw DomainError("need 129 <= k-min <= k-max");
  const auto rows = parallel_map(static_cast<std::size_t>(k_max - k_min + 1), g.jobs,
                                 [&](std::size_t i) {
                                   return complete::theorem3_search(k_min + static_cast<int>(i), opts);
                                 });
  if (g.json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"k", r.k}, {"n", r.n}, {"s", r.s}, {"rho", j12(r.rho)}, {"eta", j12(r.eta)},
                     {"theta", j12(r.theta)}, {"source", "complete-system iteration"}});
    emit(out, {{"theorem3", arr}});
    return 0;
  }
  out << "k\tn\ts\trho\teta\ttheta\n";
  for (const auto& r : rows)
    out << fmt::format("{}\t{}\t{}\t{:.5f}\t{:.5f}\t{:.4f}\n", r.k, r.n, r.s, r.rho, r.eta, r.theta);
  return 0;
}

int cmd_theorem4(std::ostream& out, const Globals& g, const incomplete::IncompleteParams& p,
                 bool unchecked) {
  const auto b = incomplete::theorem4_bound(p, !unchecked);
  const char* tag = b.hypotheses_checked ? "checked" : "hypotheses unverified";
  if (g.json) {
    emit(out, {{"k", p.k}, {"h", p.h}, {"t", p.t()}, {"s", p.s}, {"eta", j12(p.eta)}, {"D", j12(p.D)},
               {"exponent", j12(b.exponent)}, {"ln_c", j12(b.ln_c)}, {"hypotheses", tag},
               {"source", "incomplete-system bound"}});
    return 0;
  }
  out << "exponent\tln_c\thypotheses\n";
  out << fmt::format("{:.6f}\t{:.6f}\t{}\n", b.exponent, b.ln_c, tag);
  return 0;
}

int cmd_lambda_search(std::ostream& out, std::ostream& err, const Globals& g, double lmin,
                      double lmax, const large::LargeLambdaConfig& cfg) {
  const auto rows = large::search_intervals(lmin, lmax, cfg, g.jobs);
  double max_u = 0.0, max_c = 0.0;
  for (const auto& r : rows)
    if (r.feasible) {
      max_u = std::max(max_u, r.denom_u);
      max_c = std::max(max_c, r.constant_c);
    }
  if (g.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json row{{"lam1", j12(r.lam1)}, {"lam2", j12(r.lam2)}, {"k", r.k}, {"feasible", r.feasible}};
      if (r.feasible) {
        row.update({{"g", r.g}, {"h", r.h}, {"s", r.s}, {"t", r.t}, {"a", r.a}, {"b", r.b},
                    {"denom_u", j12(r.denom_u)}, {"constant", j12(r.constant_c)}});
      }
      arr.push_back(row);
    }
    emit(out, {{"intervals", arr}, {"max_denom_u", j12(max_u)}, {"max_constant", j12(max_c)},
               {"source", "interval search"}});
    return 0;
  }
  out << "lam1\tlam2\tk\ts\ta\tb\tt\tdenom_u\tconstant\n";
  for (const auto& r : rows) {
    if (r.feasible)
      out << fmt::format("{:.4f}\t{:.4f}\t{}\t{}\t{}\t{}\t{}\t{:.4f}\t{:.4f}\n", r.lam1, r.lam2, r.k, r.s,
                         r.a, r.b, r.t, up4(r.denom_u), up4(r.constant_c));
    else
      out << fmt::format("{:.4f}\t{:.4f}\t{}\tNA\tNA\tNA\tNA\tNA\tinfeasible\n", r.lam1, r.lam2, r.k);
  }
  err << fmt::format("max denom_u {:.4f}, max constant {:.4f}\n", up4(max_u), up4(max_c));
  return 0;
}

int cmd_table61(std::ostream& out, const Globals& g, int k_min, int k_max,
                const small::SmallOptions& opts) {
  if (k_min < 4 || k_max > 87 || k_max < k_min) throw DomainError("need 4 <= k-min <= k-max <= 87");
  const auto rows = parallel_map(static_cast<std::size_t>(k_max - k_min + 1), g.jobs,
                                 [&](std::size_t i) {
                                   return small::table61_row(k_min + static_cast<int>(i), opts);
                                 });
  if (g.json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"lam_lo", j12(r.lam_lo)}, {"lam_hi", j12(r.lam_hi)}, {"k", r.k}, {"n0", r.n0},
                     {"n", r.n}, {"C", j12(r.C)}, {"source", "small-lambda table search"}});
    emit(out, {{"table", arr}});
    return 0;
  }
  out << "lam_lo\tlam_hi\tk\tn0\tn\tC\n";
  for (const auto& r : rows)
    out << fmt::format("{:g}\t{:g}\t{}\t{}\t{}\t{:.4f}\n", r.lam_lo, r.lam_hi, r.k, r.n0, r.n, up4(r.C));
  return 0;
}

int cmd_s_bound(std::ostream& out, const Globals& g, double lam) {
  const auto c = small::theorem2_coefficient(lam);
  if (g.json) {
    emit(out, {{"lambda", j12(lam)}, {"C", j12(c.C)}, {"denom", j12(c.denom)},
               {"certified_denom", j12(c.certified_denom)}, {"small_n", j12(c.small_n)},
               {"envelope", j12(c.envelope)}, {"source", c.source}});
    return 0;
  }
  out << "lambda\tC\tdenom\tcertified_denom\tenvelope\tsource\n";
  out << fmt::format("{:g}\t{:.4f}\t{:g}\t{:g}\t{:.4f}\t{}\n", lam, c.C, c.denom, c.certified_denom,
                     c.envelope, c.source);
  return 0;
}

int cmd_zeta(std::ostream& out, const Globals& g, bool verify, double sigma, double t, double u) {
  if (verify) {
    const auto z = zeta::lemma73_constants(zeta::kExpSumC, zeta::kExpSumD);
    const auto integral = zeta::verify_integral_constant(1e-9);
    const bool a_ok = z.A <= zeta::kA, b_ok = z.B <= zeta::kB;
    const bool i_ok = integral.max_value <= 1.0875034 && integral.argmax_y >= 0.70 &&
                      integral.argmax_y <= 0.72;
    if (g.json) {
      emit(out, {{"A", j12(z.A)}, {"B", j12(z.B)}, {"integral_max", j12(integral.max_value)},
                 {"integral_argmax", j12(integral.argmax_y)}, {"A_ok", a_ok}, {"B_ok", b_ok},
                 {"integral_ok", i_ok}});
    } else {
      out << "quantity\tvalue\tlimit\tholds\n";
      out << fmt::format("A\t{:.6f}\t76.2\t{}\n", z.A, a_ok ? "yes" : "no");
      out << fmt::format("B\t{:.6f}\t4.45\t{}\n", z.B, b_ok ? "yes" : "no");
      out << fmt::format("integral\t{:.9f}\t1.0875034\t{}\n", integral.max_value, i_ok ? "yes" : "no");
      out << fmt::format("integral_argmax\t{:.4f}\t[0.70,0.72]\t{}\n", integral.argmax_y,
                         i_ok ? "yes" : "no");
    }
    return a_ok && b_ok && i_ok ? 0 : 1;
  }
  if (!(u > 0.0 && u <= 1.0)) throw DomainError("requires 0 < u <= 1");
  const auto z = zeta::zeta_bound(sigma, t);
  if (g.json) {
    emit(out, {{"sigma", j12(sigma)}, {"t", j12(t)}, {"u", j12(u)}, {"bound", j12(z.value)},
               {"source", z.source}, {"theorem1", j12(z.theorem1)}, {"lemma71", j12(z.lemma71)},
               {"crude", j12(z.crude)}});
    return 0;
  }
  out << "sigma\tt\tbound\tsource\n";
  out << fmt::format("{:g}\t{:g}\t{:.6g}\t{}\n", sigma, t, z.value, z.source);
  return 0;
}

std::vector<std::int64_t> parse_set(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw DomainError(fmt::format("bad set element '{}'", item));
    }
  }
  return out;
}

int cmd_oracle_count(std::ostream& out, const Globals& g, int s, int k, int h, std::int64_t P,
                     const std::string& set) {
  oracle::SystemSpec spec;
  if (!set.empty()) {
    spec.s = s;
    spec.k = k;
    spec.h = h;
    spec.variables = parse_set(set);
  } else {
    if (P < 1) throw DomainError("give --p >= 1 or --set");
    spec = oracle::SystemSpec::interval(s, k, h, P);
  }
  const auto direct = oracle::brute_J_direct(spec);
  const auto freq = oracle::brute_J_frequency(spec);
  if (g.json) {
    emit(out, {{"s", s}, {"k", k}, {"h", h}, {"direct", direct.str()}, {"frequency", freq.str()},
               {"agree", direct == freq}});
  } else {
    out << "s\tk\th\tdirect\tfrequency\n";
    out << fmt::format("{}\t{}\t{}\t{}\t{}\n", s, k, h, direct.str(), freq.str());
  }
  return direct == freq ? 0 : 1;
}

int report_checks(std::ostream& out, const Globals& g, const std::vector<acceptance::CheckResult>& rs) {
  bool all = true;
  json arr = json::array();
  for (const auto& r : rs) {
    all = all && r.passed;
    if (g.json)
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      out << fmt::format("{} {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
  }
  if (g.json) emit(out, {{"checks", arr}, {"all_passed", all}});
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit constants for Vinogradov integrals, exponential sums and zeta bounds",
               "vinozeta"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit one JSON document instead of TSV");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  int k_min = 129, k_max = 149, radius = 0;
  bool lemma_eta = false;
  auto* t3 = app.add_subcommand("theorem3", "Complete-system (rho, theta) search");
  t3->add_option("--k-min", k_min)->capture_default_str();
  t3->add_option("--k-max", k_max)->capture_default_str();
  t3->add_option("--r-radius", radius, "Extra r candidates on each side")->capture_default_str();
  t3->add_flag("--lemma-eta", lemma_eta, "Use eta^{4kn+k^2} in the constant recursion");

  incomplete::IncompleteParams ip{106, 100, 231, 1.0 / (3.6 * std::pow(106.0, 1.5)), 30.57};
  bool unchecked = false;
  auto* t4 = app.add_subcommand("theorem4", "Incomplete-system exponent and constant");
  t4->add_option("--k", ip.k)->capture_default_str();
  t4->add_option("--h", ip.h)->capture_default_str();
  t4->add_option("--s", ip.s)->capture_default_str();
  t4->add_option("--eta", ip.eta)->capture_default_str();
  t4->add_option("--D", ip.D)->capture_default_str();
  t4->add_flag("--unchecked", unchecked, "Skip hypothesis validation");

  large::LargeLambdaConfig cfg;
  double sigma = 0.3299, lmin = 87.0, lmax = 220.0;
  bool search_s = false;
  auto* ls = app.add_subcommand("lambda-search", "Interval search for intermediate lambda");
  ls->add_option("--y", cfg.Y)->capture_default_str();
  ls->add_option("--xi", cfg.xi)->capture_default_str();
  auto* sig_opt = ls->add_option("--sigma", sigma)->capture_default_str();
  ls->add_flag("--search-s", search_s, "Search over s instead of fixing sigma")->excludes(sig_opt);
  ls->add_option("--lmin", lmin)->capture_default_str();
  ls->add_option("--lmax", lmax)->capture_default_str();
  ls->add_option("--goal", cfg.goal)->capture_default_str();
  ls->add_flag("--strict-g", cfg.strict_g_window, "Require g >= 106");

  int t_kmin = 4, t_kmax = 87;
  small::SmallOptions sopts;
  auto* tb = app.add_subcommand("table61", "Small-lambda constant table");
  tb->add_option("--k-min", t_kmin)->capture_default_str();
  tb->add_option("--k-max", t_kmax)->capture_default_str();
  tb->add_flag("--true-pi", sopts.true_pi, "Use pi instead of 3.1416");

  double lam = 50.0;
  auto* sb = app.add_subcommand("s-bound", "Coefficient and denominator of the S(N,t) bound");
  sb->add_option("--lambda", lam)->required();

  double z_sigma = 1.0, z_t = 3.0, z_u = 1.0;
  bool z_verify = false;
  auto* zt = app.add_subcommand("zeta", "Zeta-function upper bounds");
  zt->add_option("--sigma", z_sigma)->capture_default_str();
  zt->add_option("--t", z_t)->capture_default_str();
  zt->add_option("--u", z_u)->capture_default_str();
  zt->add_flag("--verify", z_verify, "Check A, B and the integral constant");

  auto* orc = app.add_subcommand("oracle", "Brute-force counts");
  orc->require_subcommand(1);
  int o_s = 2, o_k = 2, o_h = 1;
  std::int64_t o_p = 0;
  std::string o_set;
  auto* oc = orc->add_subcommand("count", "Count solutions two ways");
  oc->add_option("--s", o_s)->capture_default_str();
  oc->add_option("--k", o_k)->capture_default_str();
  oc->add_option("--h", o_h)->capture_default_str();
  auto* p_opt = oc->add_option("--p", o_p, "Variables range over [1, P]");
  oc->add_option("--set", o_set, "Comma-separated variable set")->excludes(p_opt);
  auto* ov = orc->add_subcommand("verify-all", "Run the small-instance suite");

  auto* vn = app.add_subcommand("verify-nt", "Prime-count, Mertens and smooth-set checks");
  auto* va = app.add_subcommand("verify-all", "Run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    const acceptance::Options aopts{g.jobs};
    if (t3->parsed())
      return cmd_theorem3(out, g, k_min, k_max, {radius, lemma_eta, false});
    if (t4->parsed()) return cmd_theorem4(out, g, ip, unchecked);
    if (ls->parsed()) {
      if (!search_s) cfg.sigma = sigma;
      return cmd_lambda_search(out, err, g, lmin, lmax, cfg);
    }
    if (tb->parsed()) return cmd_table61(out, g, t_kmin, t_kmax, sopts);
    if (sb->parsed()) return cmd_s_bound(out, g, lam);
    if (zt->parsed()) return cmd_zeta(out, g, z_verify, z_sigma, z_t, z_u);
    if (oc->parsed()) return cmd_oracle_count(out, g, o_s, o_k, o_h, o_p, o_set);
    if (ov->parsed()) return report_checks(out, g, {acceptance::oracle_suite(aopts)});
    if (vn->parsed()) return report_checks(out, g, {acceptance::number_theory_suite(aopts)});
    if (va->parsed()) {
      std::vector<acceptance::CheckResult> rs;
      for (const auto& c : acceptance::criteria()) rs.push_back(acceptance::run_guarded(c, aopts));
      return report_checks(out, g, rs);
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace vinozeta::cli
