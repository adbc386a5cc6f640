#include "vinozeta/vino_complete.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "vinozeta/error.hpp"

namespace vinozeta::complete {

double admissibility_gap(int k, int r, double delta) {
  const double kk = k, rr = r;
  return 2.0 * delta - (kk - rr) * (kk - rr + 1.0);
}

double phi_star(int k, int r, double delta) {
  const double kk = k, rr = r;
  return 2.0 * kk / (2.0 * kk * rr + admissibility_gap(k, r, delta));
}

namespace {

// Validity test shared by every entry point; mirrors the search program.
bool admissible(double kk, double rr, double y) {
  if (rr < 4.0 || rr > kk) return false;
  if (y < 0.0) return false;
  return 2.0 * kk / (2.0 * kk * rr + y) > 1.0 / (kk + 1.0);
}

long max_j(double rr, double y) {
  const long from_gap = static_cast<long>(0.5 * (3.0 + std::sqrt(4.0 * y + 1.0)));
  const double cap = 9.0 * rr / 10.0;
  return static_cast<long>(std::min(static_cast<double>(from_gap), cap));
}

}  // namespace

PhiSequence phi_sequence(int k, int r, double delta) {
  const double kk = k, rr = r;
  const double tkr = 2.0 * kk * rr;
  const double y = 2.0 * delta - (kk - rr) * (kk - rr + 1.0);
  if (!admissible(kk, rr, y))
    throw InvalidR(fmt::format("r={} is not admissible for k={}, Delta={}", r, k, delta));
  const long j = max_j(rr, y);
  PhiSequence seq;
  seq.j = static_cast<int>(j);
  seq.phi.assign(static_cast<std::size_t>(j), 0.0);
  double p = 1.0 / rr;
  seq.phi[j - 1] = p;
  for (long jj = j - 1; jj >= 1; --jj) {
    p = 0.5 / rr + 0.5 * (1.0 + (static_cast<double>(jj * jj - jj) - y) / tkr) * p;
    seq.phi[jj - 1] = p;
  }
  return seq;
}

double delta_step_or_double(int k, int r, double delta) {
  const double kk = k, rr = r;
  if (rr < 4.0 || rr > kk) return 2.0 * delta;
  const double tkr = 2.0 * kk * rr;
  const double y = 2.0 * delta - (kk - rr) * (kk - rr + 1.0);
  if (y < 0.0 || 2.0 * kk / (tkr + y) <= 1.0 / (kk + 1.0)) return 2.0 * delta;
  const long j = max_j(rr, y);
  double p = 1.0 / rr;
  for (long jj = j - 1; jj >= 1; --jj)
    p = 0.5 / rr + 0.5 * (1.0 + (static_cast<double>(jj * jj - jj) - y) / tkr) * p;
  return delta - kk + 0.5 * p * (tkr - y);
}

double delta_step(int k, int r, double delta) {
  const double kk = k, rr = r;
  const double y = 2.0 * delta - (kk - rr) * (kk - rr + 1.0);
  if (!admissible(kk, rr, y))
    throw InvalidR(fmt::format("r={} is not admissible for k={}, Delta={}", r, k, delta));
  const double next = delta_step_or_double(k, r, delta);
  if (!(next < delta))
    throw NoImprovement(fmt::format("step with k={}, r={} does not lower Delta={}", k, r, delta));
  return next;
}

OmegaSolution solve_omega(int k) {
  if (k < 129) throw HypothesisError("solve_omega: requires k >= 129");
  const double kk = k;
  const double k3 = kk * kk * kk * std::log(kk);
  double om = 0.5;
  for (int i = 0; i < 10; ++i) om = 1.5 / (std::log(18.0 * k3 / om) - 1.5);
  return {om, 1.0 + om, std::max(1.5 + 1.5 / om, std::log(18.0 / om * k3))};
}

double omega_residual(int k, double omega) {
  const double kk = k;
  const double lhs = 1.5 + 1.5 / omega;
  const double rhs = std::log(18.0 / omega * kk * kk * kk * std::log(kk));
  return std::fabs(std::exp(lhs - rhs) - 1.0);
}

Theorem3Result theorem3_search(int k, const Theorem3Options& opts) {
  if (k < 129) throw HypothesisError("theorem3_search: requires k >= 129");
  const double kk = k;
  const double logk = std::log(kk);
  const double k3 = kk * kk * kk * logk;
  const OmegaSolution om = solve_omega(k);
  const double eta = om.eta;
  const double log_eta = std::log(eta);
  const double logW = (kk + 1.0) * om.ln_v;
  double del0 = 0.5 * kk * kk * (1.0 - 1.0 / kk);
  const double goal = 0.001 * kk * kk;
  const double logH = 3.0 * kk * logk + (kk * kk - 4.0 * kk) * log_eta;
  double logC = kk * logk;  // k log k >= log k!

  Theorem3Result res;
  res.k = k;
  res.eta = eta;
  if (opts.keep_trace) res.trace.push_back({k, 1, del0, logC});

  for (long n = 1;; ++n) {
    if (n > static_cast<long>(k) * k)
      throw NoImprovement(fmt::format("k={}: iteration did not reach the goal", k));
    const long r0 = static_cast<long>(std::sqrt(kk * kk + kk - 2.0 * del0) + 0.5) - 2 -
                    opts.extra_r_radius;
    const long r1 = r0 + 4 + 2 * opts.extra_r_radius;
    double bestdel = kk * kk;
    long bestr = -1;
    for (long r = r0; r <= r1; ++r) {
      const double d = delta_step_or_double(k, static_cast<int>(r), del0);
      if (d < bestdel) {
        bestdel = d;
        bestr = r;
      }
    }
    const double del1 = bestdel;
    if (del1 >= del0 || bestr < r0)
      throw NoImprovement(fmt::format("k={}: no admissible r lowers Delta at n={}", k, n));
    const double eta_term = opts.lemma_eta_exponent ? 4.0 * kk * static_cast<double>(n + 1)
                                                    : 4.0 * kk * static_cast<double>(n);
    logC += std::max(logH + eta_term * log_eta, logW * (del0 - del1));
    if (opts.keep_trace) res.trace.push_back({k, static_cast<int>(n + 1), del1, logC});
    if (del1 <= goal) {
      res.n = static_cast<int>(n);
      res.s = static_cast<std::int64_t>((static_cast<double>(n) + (del0 - goal) / (del0 - del1)) *
                                            kk +
                                        1.0);
      res.rho = static_cast<double>(res.s) / kk / kk;
      res.theta = logC / k3;
      return res;
    }
    del0 = del1;
  }
}

RhoTheta published_rho_theta(int k) {
  if (k <= 149) return {3.22313, 2.4183};
  if (k <= 199) return {3.21734, 2.3849};
  return {3.21432, 2.3291};
}

int lemma36_n_max(int k) {
  const double kk = k;
  return static_cast<int>(std::floor(kk / 2.0 * (0.5 + std::log(3.0 * kk / 8.0)) + 1.0));
}

ClosedForm lemma36_closed_forms(int k, int n) {
  if (k < 1000) throw HypothesisError("lemma36_closed_forms: requires k >= 1000");
  if (n < 2 * k || n > lemma36_n_max(k))
    throw HypothesisError(fmt::format(
        "lemma36_closed_forms: requires 2k <= n <= (k/2)(1/2 + log(3k/8)) + 1, got n={}", n));
  const double kk = k, nn = n;
  ClosedForm cf;
  cf.delta_bound = 0.375 * kk * kk * std::exp(0.5 - 2.0 * nn / kk + 1.69 / kk);
  cf.ln_c_bound = (2.055 * kk * kk * kk - 5.91 * kk * kk + 3.0 * nn * kk) * std::log(kk) +
                  (nn * kk * kk + 2.0 * kk * (nn * nn - nn) - 9.7278 * kk * kk * kk) *
                      std::log(1.06);
  return cf;
}

ClosedForm theorem3_statement(int k, std::int64_t s) {
  if (k < 1000) throw HypothesisError("theorem3_statement: requires k >= 1000");
  const double kk = k, ss = static_cast<double>(s);
  if (ss < 2.0 * kk * kk || ss > kk * kk / 2.0 * (0.5 + std::log(3.0 * kk / 8.0)))
    throw HypothesisError("theorem3_statement: requires 2k^2 <= s <= (k^2/2)(1/2 + log(3k/8))");
  ClosedForm cf;
  cf.delta_bound = 0.375 * kk * kk * std::exp(0.5 - 2.0 * ss / (kk * kk) + 1.7 / kk);
  cf.ln_c_bound = (2.055 * kk * kk * kk - 5.91 * kk * kk + 3.0 * ss) * std::log(kk) +
                  (ss * kk + 2.0 * ss * ss / kk - 9.7278 * kk * kk * kk) * std::log(1.06);
  return cf;
}

std::vector<JBoundRecord> lemma35_iteration(int k, int n_max, double omega) {
  if (k < 26) throw HypothesisError("lemma35_iteration: requires k >= 26");
  const double kk = k;
  const double logk = std::log(kk);
  if (omega < 1.0 / (3.0 * logk) || omega > 0.5)
    throw HypothesisError("lemma35_iteration: requires 1/(3 log k) <= omega <= 1/2");
  const double log_eta = std::log1p(omega);
  const double ln_v = std::max(1.5 + 1.5 / omega, std::log(18.0 / omega * kk * kk * kk * logk));

  std::vector<JBoundRecord> out;
  double delta = 0.5 * kk * kk * (1.0 - 1.0 / kk);
  double ln_c = std::lgamma(kk + 1.0);
  out.push_back({k, 1, delta, ln_c});
  for (int n = 1; n < n_max; ++n) {
    const int r = static_cast<int>(std::floor(kk - delta / kk + 1.0));
    const double next = delta_step(k, r, delta);
    const double nn = n;
    ln_c += std::max(3.0 * kk * logk + (4.0 * kk * nn + kk * kk) * log_eta,
                     (kk + 1.0) * ln_v * (delta - next));
    delta = next;
    out.push_back({k, n + 1, delta, ln_c});
  }
  return out;
}

}  // namespace vinozeta::complete
