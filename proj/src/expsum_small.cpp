#include "vinozeta/expsum_small.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "vinozeta/error.hpp"

namespace vinozeta::small {

namespace {

constexpr double kGoal = 133.66;

// Quantities shared by the omega search and the constant recursion.
struct Context {
  double kk = 0.0;
  double logk = 0.0;
  double logk1 = 0.0;
  double k3 = 0.0;   // log(6 k^3 log k)
  double lkf = 0.0;  // log k!
  double logA = 0.0; // log(4 k^3 k!)
  double L32 = 0.0;  // log(32/k!)
};

Context make_context(int k) {
  Context c;
  c.kk = k;
  c.logk = std::log(c.kk);
  c.logk1 = std::log(c.kk - 1.0);
  c.k3 = 3.0 * c.logk + std::log(6.0 * c.logk);
  for (int i = 2; i <= k; ++i) c.lkf += std::log(static_cast<double>(i));
  c.logA = 3.0 * c.logk + c.lkf + std::log(4.0);
  c.L32 = std::log(32.0) - c.lkf;
  return c;
}

double log_v(const Context& c, double w) {
  if (w == 1.0) return c.k3;
  if (w <= 0.5 && w > 0.0) return std::max(1.5 + 1.5 / w, c.k3 + std::log(3.0 / w));
  throw DomainError(fmt::format("log V(omega) undefined for omega = {}", w));
}

double omega_for(const Context& c, double delta) {
  const double B = c.kk * c.kk - delta;  // exponent of 1 + omega
  const double C = delta;                // exponent of V
  auto F = [&](double w) { return (1.0 + w) * std::exp(c.logA / B) - std::exp(log_v(c, w) * C / B); };
  if (F(1.0) <= 0.0) return 1.0;
  if (F(0.5) <= 0.0) return std::exp(log_v(c, 0.5) * C / B) < 2.0 * std::exp(c.logA / B) ? 0.5 : 1.0;
  double w0 = 0.5, w1 = 0.2;
  while (F(w1) >= 0.0) w1 *= 0.5;
  while ((w0 - w1) / w1 >= 0.0000001) {
    const double w2 = 0.5 * (w0 + w1);
    if (F(w2) > 0.0)
      w0 = w2;
    else
      w1 = w2;
  }
  return w1;
}

std::optional<double> constant_at(const Context& c, int k, int n, const SmallLambdaState& st,
                                  const SmallOptions& opts) {
  const double kk = c.kk;
  const double lam = opts.lambda ? *opts.lambda : (k == 4 ? 2.6 : kk - 1.0);
  const double pi = opts.true_pi ? std::numbers::pi : 3.1416;
  const double mu = 1.0 - lam / (kk + 1.0);
  const double s = kk * n;
  double logd = std::log(4.0) + 0.5 / s * (st.ln_c[n] + c.lkf + kk * std::log(2.0 * kk * pi));
  logd = std::log(std::exp(logd) + 2.0);
  const double goal = kGoal * lam * lam;
  const double e = (1.0 - (1.0 + st.delta[n]) * mu) / (2.0 * s);
  if (e < 1.0 / goal) return std::nullopt;
  return std::exp(logd / e / goal);
}

void check_k(int k) {
  if (k < 4 || k > 87) throw DomainError("k must lie in [4, 87]");
}

}  // namespace

double small_eta(int k) {
  if (k <= 13) return 1.308;
  if (k <= 32) return 1.2609;
  return 1.12766;
}

double best_omega(int k, double delta_n) {
  if (k < 4) throw DomainError("best_omega: requires k >= 4");
  const double kk = k;
  if (!(delta_n > 0.0 && delta_n <= 0.5 * kk * (kk - 1.0)))
    throw DomainError("best_omega: requires 0 < Delta <= k(k-1)/2");
  return omega_for(make_context(k), delta_n);
}

SmallLambdaState constants_sequence(int k, int n0) {
  check_k(k);
  if (n0 < 1 || n0 > 2 * k) throw DomainError("constants_sequence: requires 1 <= n0 <= 2k");
  const Context c = make_context(k);
  const double kk = c.kk;
  long n1 = static_cast<long>(2.6 * kk * c.logk + 50);
  if (n1 >= 9999) n1 = 9998;

  SmallLambdaState st;
  st.k = k;
  st.n0 = n0;
  st.eta = small_eta(k);
  const double logeta = std::log(st.eta);
  st.delta.assign(n1 + 2, 0.0);
  st.ln_c.assign(n1 + 2, 0.0);
  st.omega.assign(n1 + 2, 0.0);
  for (int i = 1; i <= n0; ++i) {
    st.delta[i] = 0.5 * kk * (kk - 1.0);
    st.ln_c[i] = c.lkf;
  }
  const double f = 1.0 - 1.0 / kk;
  for (long n = n0 + 1; n <= n1 + 1; ++n) st.delta[n] = f * st.delta[n - 1];

  for (long n = n0; n <= n1; ++n) {
    const double s = kk * static_cast<double>(n);
    const double omega = omega_for(c, st.delta[n]);
    st.omega[n] = omega;
    const double B = kk * kk - st.delta[n];
    const double C = st.delta[n];
    const double logM1 = std::max(log_v(c, omega) * C, c.logA + B * std::log(1.0 + omega));
    double logM2 = 1.0e40;
    if (k >= 9) {
      const double AA = (kk * kk - st.delta[n]) * logeta + 2.0 * kk * std::log(s + kk) + c.L32;
      double logU = (2.0 * kk - 2.0 + (2.0 * s + 2.0) * c.logk1) /
                    (2.0 * s + 2.0 - 0.5 * kk * (kk + 1.0) + st.delta[n + 1]);
      if (logU < c.logk) logU = c.logk;
      const double BB = st.delta[n] * logU;
      logM2 = std::max(AA, BB);
    }
    st.ln_c[n + 1] = st.ln_c[n] + std::min(logM1, logM2);
  }
  return st;
}

std::optional<double> exponent_constant(int k, int n, const SmallLambdaState& state,
                                        const SmallOptions& opts) {
  check_k(k);
  if (state.k != k) throw DomainError("exponent_constant: state built for another k");
  if (n <= k || n >= static_cast<int>(state.delta.size()))
    throw DomainError("exponent_constant: n outside the computed range");
  return constant_at(make_context(k), k, n, state, opts);
}

Table61Row table61_row(int k, const SmallOptions& opts) {
  check_k(k);
  const Context c = make_context(k);
  const long n2 = static_cast<long>(c.kk * 2.5 * c.logk) + 50;
  Table61Row row;
  row.k = k;
  row.lam_lo = k == 4 ? 2.6 : k - 1.0;
  row.lam_hi = k;
  double bestc = 1.0e40;
  for (int n0 = 1; n0 <= 2 * k; ++n0) {
    const SmallLambdaState st = constants_sequence(k, n0);
    for (long n = k + 1; n <= n2; ++n) {
      const auto cn = constant_at(c, k, static_cast<int>(n), st, opts);
      if (cn && *cn < bestc) {
        bestc = *cn;
        row.n = static_cast<int>(n);
        row.n0 = n0;
      }
    }
  }
  if (row.n == 0) throw VerificationFailure(fmt::format("table61_row: no feasible n for k={}", k));
  row.C = bestc;
  return row;
}

double rescale_bound(double C, double c, double d) {
  if (!(d > 0.0 && d <= c && c < 1.0)) throw DomainError("rescale_bound: requires 0 < d <= c < 1");
  if (!(C >= 1.0)) throw DomainError("rescale_bound: requires C >= 1");
  return std::pow(C, d / c);
}

double lemma62_rescaled(double lam, double denom) {
  if (!(lam >= 1.0 && lam <= 2.6)) throw DomainError("lemma62_rescaled: requires 1 <= lambda <= 2.6");
  const double d = 1.0 / (denom * lam * lam);
  if (lam <= 1.9) return rescale_bound(5.0, 1.0 / 20.0, d);
  return rescale_bound(30.0, 1.0 / 83.0, d);
}

Theorem2Coefficient theorem2_coefficient(double lam) {
  if (!(lam >= 1.0)) throw DomainError("theorem2_coefficient: requires lambda >= 1");
  Theorem2Coefficient r;
  const double trivial = std::exp(300.0 / kGoal);
  if (lam <= 2.6) {
    r.C = 1.81;
    r.denom = r.certified_denom = 133.0;
    r.source = "weyl";
  } else if (lam <= 87.0) {
    const int k = std::max(4, static_cast<int>(std::ceil(lam)));
    r.C = published_table61().at(static_cast<std::size_t>(k - 4)).C;
    r.denom = r.certified_denom = kGoal;
    r.source = fmt::format("table-k{}", k);
  } else if (lam <= 220.0) {
    r.C = 8.4;
    r.denom = r.certified_denom = kGoal;
    r.small_n = trivial;
    r.source = "interval-search";
  } else {
    r.C = 7.5;
    r.denom = kGoal;
    r.certified_denom = 133.58;
    r.small_n = trivial;
    r.source = "large-lambda";
  }
  r.envelope = std::max(r.C, r.small_n);
  return r;
}

}  // namespace vinozeta::small
