// Complete-system bounds for Vinogradov's integral J_{s,k}(P).
//
// One step of the efficient-differencing iteration turns a bound
//   J_{s,k}(P) <= C P^{2s - k(k+1)/2 + Delta}
// into the same shape for s + k with a smaller surplus Delta'. The step is
// governed by a parameter r and a descending sequence phi_1..phi_j; the
// search below repeats it until Delta <= k^2/1000 and reports the (rho,
// theta) pair certifying J_{s,k}(P) <= k^{theta k^3} P^{2s - k(k+1)/2 +
// 0.001k^2} with s <= rho k^2.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace vinozeta::complete {

/// (k, n, Delta_n, ln C_n): J_{nk,k}(P) <= C_n P^{2nk - k(k+1)/2 + Delta_n}.
struct JBoundRecord {
  int k = 0;
  int n = 0;
  double delta = 0.0;
  double ln_c = 0.0;
};

struct PhiSequence {
  int j = 0;
  std::vector<double> phi;  // phi[i] holds phi_{i+1}; phi[j-1] == 1/r
};

/// y = 2 Delta - (k - r)(k - r + 1).
double admissibility_gap(int k, int r, double delta);

/// phi* = 2k / (2rk + y); the step needs phi* > 1/(k+1).
double phi_star(int k, int r, double delta);

/// The phi recursion with j maximal subject to 2 <= j <= 9r/10 and
/// (j-1)(j-2) <= y. Throws InvalidR when r is outside [4, k], y < 0 or
/// phi* <= 1/(k+1).
PhiSequence phi_sequence(int k, int r, double delta);

/// Delta' = Delta - k + (phi_1/2)(2kr - y). Throws InvalidR, or
/// NoImprovement when Delta' >= Delta.
double delta_step(int k, int r, double delta);

/// Same step without exceptions: returns 2*Delta for an invalid r, as the
/// original search program does, so that such r never wins a comparison.
double delta_step_or_double(int k, int r, double delta);

struct OmegaSolution {
  double omega = 0.0;
  double eta = 0.0;   // 1 + omega
  double ln_v = 0.0;  // log max(e^{1.5+1.5/omega}, (18/omega) k^3 log k)
};

/// Solves e^{1.5+1.5/omega} = (18/omega) k^3 log k by ten fixed-point
/// steps from omega = 1/2. Requires k >= 129.
OmegaSolution solve_omega(int k);

/// Relative residual of the implicit omega equation.
double omega_residual(int k, double omega);

struct Theorem3Options {
  /// Extra candidates on each side of the default five-wide r window.
  int extra_r_radius = 0;
  /// Use eta^{4kn + k^2} for the step n -> n+1 (the exponent in the
  /// recursion for C_n) instead of the search program's eta^{4k(n-1) + k^2}.
  bool lemma_eta_exponent = false;
  /// Keep the per-step records in the result.
  bool keep_trace = false;
};

struct Theorem3Result {
  int k = 0;
  int n = 0;          // last iteration index
  std::int64_t s = 0;
  double rho = 0.0;   // s / k^2
  double eta = 0.0;
  double theta = 0.0; // ln C / (k^3 log k)
  std::vector<JBoundRecord> trace;
};

/// Runs the complete-system iteration for one k >= 129, choosing the best r
/// from a window around sqrt(k^2 + k - 2 Delta) at every step.
Theorem3Result theorem3_search(int k, const Theorem3Options& opts = {});

/// The (rho, theta) band certified for k: (3.22313, 2.4183) for k <= 149,
/// (3.21734, 2.3849) for k <= 199 and (3.21432, 2.3291) beyond.
struct RhoTheta {
  double rho;
  double theta;
};
RhoTheta published_rho_theta(int k);

struct ClosedForm {
  double delta_bound = 0.0;
  double ln_c_bound = 0.0;
};

/// Large-k closed forms for Delta_n and ln C_n, valid for k >= 1000 and
/// 2k <= n <= (k/2)(1/2 + log(3k/8)) + 1.
ClosedForm lemma36_closed_forms(int k, int n);

/// Largest n allowed by lemma36_closed_forms for this k.
int lemma36_n_max(int k);

/// Delta_s and ln of the constant for k >= 1000 and
/// 2k^2 <= s <= (k^2/2)(1/2 + log(3k/8)).
ClosedForm theorem3_statement(int k, std::int64_t s);

/// Runs the plain recursion with r_n = floor(k - Delta_n/k + 1), fixed
/// omega, C_1 = k! and the per-step multiplier
/// max(k^{3k} eta^{4kn+k^2}, V^{(k+1)(Delta_n - Delta_{n+1})}).
/// Returns records for n = 1..n_max.
std::vector<JBoundRecord> lemma35_iteration(int k, int n_max, double omega);

}  // namespace vinozeta::complete
