// Incomplete-system bound for J_{s,k,h} over C(P, P^eta).
#pragma once

namespace vinozeta::incomplete {

/// Parameters of the incomplete-system bound. P enters only through
/// log P >= D k^2, so it is not stored.
struct IncompleteParams {
  int k = 0;
  int h = 0;
  long s = 0;
  double eta = 0.0;  // R = P^eta
  double D = 0.0;

  int t() const { return k - h + 1; }
};

/// Throws HypothesisError naming the first violated condition:
/// k >= 60, 0.9k <= h <= k-2, 2t <= s <= floor(h/2) t, 2/k^3 < eta <= 1/(2k),
/// 18/k <= 4 log k/(D k^2 eta) <= 0.4, D >= 10.
void check_hypotheses(const IncompleteParams& p);

struct IncompleteBound {
  double exponent = 0.0;  // exponent of P
  double ln_c = 0.0;
  bool hypotheses_checked = true;
};

/// J_{s,k,h}(C(P,R)) <= C P^{exponent} with
///   exponent = 2s - (t/2)(h+k) + t(t-1)/2 + eta s^2/(2t) + h t e^{-s/(ht)},
///   ln C = s^2/t + 10.5 t log^2 k/(D k eta^2)
///          - s ((1/eta + h)(1-1/h)^{s/t} - h) log(1/(10 eta)).
/// With `checked` false the hypotheses are skipped and the result is tagged.
IncompleteBound theorem4_bound(const IncompleteParams& p, bool checked = true);

/// E_j = alpha^{L-j} [ (4 log k/eta)(j-1) - (j - (j-1)/h - h + h alpha^j) log P ]
/// with alpha = 1 - 1/h. Requires k >= 60, k-h+1 <= k/6, 1 <= L <= h/2,
/// eta <= 2/(3h) and 2 <= j <= L.
double lemma42_Ej(int k, int h, int L, double eta, double logP, int j);

/// (4 log k/eta) [1 + h (1 + (1-x) log(1-x)/x)] with x = 4 log k/(A eta alpha);
/// A is log P / L. Throws DomainError unless 0 < x < 1.
double lemma43_max(int k, int h, double eta, double A);

/// 1 + (1-x) log(1-x)/x, the bracket bounded by 0.5866 x on [18/k, 0.408].
double lemma43_bracket(double x);

}  // namespace vinozeta::incomplete
