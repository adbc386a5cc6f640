// Exponential-sum exponents for intermediate and large lambda.
//
// For lambda = log t / log N in a short interval [lam1, lam2) the bound
//   S(N,t) <= C N^{1 - 1/(u lambda^2)}
// is assembled from the complete-system bound (parameter k), the
// incomplete-system bound (parameters g, h, s) and a count of smooth
// numbers. search_intervals() walks every such interval in a range and
// reports the best parameters; lemma52_* cover lambda >= 220 in closed form.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace vinozeta::large {

struct LargeLambdaConfig {
  double mu1 = 0.1905;
  double mu2 = 0.1603;
  double Y = 300.0;
  double xi = 3.6;
  std::optional<double> sigma;  // fixed sigma; empty means search over s
  double goal = 133.66;
  bool strict_g_window = false;  // g >= 106 instead of g >= 100

  double D() const { return 0.1019 * Y; }
  void validate() const;
};

/// sum_{j=h}^{g} min(j mu2, j - lam, lam - j(1 - mu1 - mu2)).
double h_sum_exact(double lam, int g, int h, double mu1, double mu2);

struct HCoefficients {
  double H2 = 0.0;
  double H1 = 0.0;
  double H0 = 0.0;
};

/// Coefficients of the lower bound H >= H2 lam^2 + H1 lam - H0 in terms of
/// phi = g/lam and gamma = h/lam.
HCoefficients h_coefficients(double phi, double gamma, double mu1, double mu2);
double h_lower(double lam, double phi, double gamma, double mu1, double mu2);

/// H = Z0 + Z1 lam on a lam-interval where m1 = floor(lam/(1-mu1)) and
/// m2 = floor(lam/(1-mu2)) are fixed.
struct HPiecewise {
  double m1 = 0.0;
  double m2 = 0.0;
  double Z0 = 0.0;
  double Z1 = 0.0;
};
HPiecewise h_piecewise(double lam, int g, int h, double mu1, double mu2);

/// Everything computed for one (interval, g, h, s) candidate.
struct CalcResult {
  int k = 0;
  std::int64_t r = 0;
  double rho = 0.0;
  double theta = 0.0;
  double H = 0.0;  // lower bound for H over the interval
  double E1 = 0.0, E2 = 0.0, E3 = 0.0;
  double exponent = 0.0;  // lam1^2 E'; the candidate is usable only if positive
  double denom_u = 0.0;   // 1/exponent
  double log_c1 = 0.0, log_c2 = 0.0, log_c3 = 0.0;
  double constant_c = 0.0;
};

/// Evaluates one candidate on [lam1, lam2) with lam the midpoint. Requires
/// 80 < lam1 < lam2 < 300. Throws DomainError when h + g - m1 - m2 - 1 is
/// not in {-1, 0, 1}.
CalcResult calc_interval(double lam1, double lam2, int g, int h, std::int64_t s,
                         const LargeLambdaConfig& cfg);

/// log C2 with eta = 1/(xi g^{3/2}): the incomplete-system constant for
/// k = g.
double log_c2(int g, int h, std::int64_t s, double xi, double D);

struct LambdaIntervalResult {
  double lam1 = 0.0;
  double lam2 = 0.0;
  int k = 0;
  int g = 0, h = 0, t = 0;
  std::int64_t s = 0;
  int a = 0, b = 0;  // g = g0 + a, h = h1 - b
  double denom_u = 0.0;
  double constant_c = 0.0;
  bool feasible = false;
};

/// Sorted interval endpoints in [lam_min, lam_max].
std::vector<double> breakpoints(double lam_min, double lam_max, const LargeLambdaConfig& cfg);

/// Best candidate per interval: g in {g0, g0+1}, h in {h1-1, h1}, s fixed
/// or in [h(t-1)/4, ht/2]; accepted when the exponent is positive and
/// 1/exponent < goal; minimal constant wins, first found on ties.
/// Zero-width intervals are skipped. Requires 80 < lam_min < lam_max < 300.
std::vector<LambdaIntervalResult> search_intervals(double lam_min, double lam_max,
                                                   const LargeLambdaConfig& cfg, int jobs = 1);

/// f(gamma, phi) with sigma = 0.3299, k1 = 1/0.6492 + 0.000003/lam.
double lemma52_f(double gamma, double phi, double lam = 220.0);

struct Lemma52Result {
  double max_f = 0.0;
  double argmax_gamma = 0.0;
  double argmax_phi = 0.0;
};

/// Grid maximum of f over |gamma-1.1818| <= 1/440, |phi-1.2453| <= 1/440
/// with grid_n points per side (corners included).
Lemma52Result lemma52_verify(int grid_n = 441, double lam = 220.0);

/// lam^2 E <= 1.52e-7 + (max_f + 0.0008 lam^{-1/2} + 0.021334/lam)/rho.
double lemma52_assembled(double lam, double max_f);

}  // namespace vinozeta::large
