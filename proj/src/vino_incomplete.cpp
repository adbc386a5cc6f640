#include "vinozeta/vino_incomplete.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vinozeta/error.hpp"

namespace vinozeta::incomplete {

void check_hypotheses(const IncompleteParams& p) {
  const double k = p.k, h = p.h, t = p.t(), s = static_cast<double>(p.s);
  if (p.k < 60) throw HypothesisError("k >= 60");
  if (h < 0.9 * k) throw HypothesisError("0.9k <= h");
  if (p.h > p.k - 2) throw HypothesisError("h <= k-2");
  if (s < 2.0 * t) throw HypothesisError("2t <= s");
  if (p.s > static_cast<long>(p.h / 2) * p.t()) throw HypothesisError("s <= floor(h/2) t");
  if (!(p.eta > 2.0 / (k * k * k))) throw HypothesisError("2/k^3 < eta");
  if (!(p.eta <= 1.0 / (2.0 * k))) throw HypothesisError("eta <= 1/(2k)");
  if (!(p.D >= 10.0)) throw HypothesisError("D >= 10");
  const double x = 4.0 * std::log(k) / (p.D * k * k * p.eta);
  if (x < 18.0 / k) throw HypothesisError("18/k <= 4 log k/(D k^2 eta)");
  if (x > 0.4) throw HypothesisError("4 log k/(D k^2 eta) <= 0.4");
}

IncompleteBound theorem4_bound(const IncompleteParams& p, bool checked) {
  if (checked) check_hypotheses(p);
  const double k = p.k, h = p.h, t = p.t(), s = static_cast<double>(p.s), eta = p.eta;
  const double logk = std::log(k);
  IncompleteBound b;
  b.hypotheses_checked = checked;
  b.exponent = 2.0 * s - 0.5 * t * (h + k) + 0.5 * t * (t - 1.0) + eta * s * s / (2.0 * t) +
               h * t * std::exp(-s / (h * t));
  b.ln_c = s * s / t + 10.5 * t * logk * logk / (p.D * k * eta * eta) -
           s * ((1.0 / eta + h) * std::pow(1.0 - 1.0 / h, s / t) - h) * std::log(1.0 / (10.0 * eta));
  return b;
}

double lemma42_Ej(int k, int h, int L, double eta, double logP, int j) {
  if (k < 60) throw HypothesisError("k >= 60");
  if (h > k) throw HypothesisError("h <= k");
  if (6 * (k - h + 1) > k) throw HypothesisError("t <= k/6");
  if (L < 1 || 2 * L > h) throw HypothesisError("1 <= L <= h/2");
  if (!(eta > 0.0 && eta <= 2.0 / (3.0 * h))) throw HypothesisError("0 < eta <= 2/(3h)");
  if (j < 2 || j > L) throw HypothesisError("2 <= j <= L");
  const double hh = h, jj = j;
  const double alpha = 1.0 - 1.0 / hh;
  const double bracket = 4.0 * std::log(static_cast<double>(k)) / eta * (jj - 1.0) -
                         (jj - (jj - 1.0) / hh - hh + hh * std::pow(alpha, jj)) * logP;
  return std::pow(alpha, L - j) * bracket;
}

double lemma43_bracket(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("lemma43_bracket: requires 0 < x < 1");
  return 1.0 + (1.0 - x) * std::log1p(-x) / x;
}

double lemma43_max(int k, int h, double eta, double A) {
  const double hh = h;
  const double alpha = 1.0 - 1.0 / hh;
  const double lead = 4.0 * std::log(static_cast<double>(k)) / eta;
  const double x = lead / (A * alpha);
  if (!(x > 0.0 && x < 1.0))
    throw DomainError(fmt::format("lemma43_max: x = {} is not in (0, 1)", x));
  return lead * (1.0 + hh * lemma43_bracket(x));
}

}  // namespace vinozeta::incomplete
