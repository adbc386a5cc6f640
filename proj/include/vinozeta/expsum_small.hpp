// Exponential-sum constants for small lambda (lambda <= 87), the table
// optimizer, and the piecewise coefficient of the final S(N,t) bound.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vinozeta::small {

struct Table61Row {
  int k = 0;
  double lam_lo = 0.0;
  double lam_hi = 0.0;
  int n0 = 0;
  int n = 0;
  double C = 0.0;
};

/// Prime-gap parameter used in the alternative constant recursion:
/// 1.308 (k <= 13), 1.2609 (k <= 32), 1.12766 otherwise.
double small_eta(int k);

/// Optimal omega for the multiplier max(V(omega)^Delta, 4k^3 k! (1+omega)^{k^2-Delta}),
/// restricted to omega in (0, 1/2] or omega = 1.
double best_omega(int k, double delta_n);

/// Delta_n and ln C_n for n = 1..n1+1 (index 0 unused), starting from the
/// trivial bound for n <= n0 and Delta_{n+1} = (1-1/k) Delta_n afterwards.
struct SmallLambdaState {
  int k = 0;
  int n0 = 0;
  double eta = 0.0;
  std::vector<double> delta;
  std::vector<double> ln_c;
  std::vector<double> omega;  // omega used for the step n -> n+1
};

SmallLambdaState constants_sequence(int k, int n0);

struct SmallOptions {
  bool true_pi = false;           // use pi instead of 3.1416
  std::optional<double> lambda;   // default: k-1, or 2.6 for k = 4
};

/// Constant C of S(N,t) <= C N^{1 - 1/(133.66 lam^2)} from the n-th state,
/// or empty when the exponent is too weak. Requires k < n <= n1.
std::optional<double> exponent_constant(int k, int n, const SmallLambdaState& state,
                                        const SmallOptions& opts = {});

/// Minimises C over n0 in [1, 2k] and n in [k+1, floor(2.5 k log k) + 50].
Table61Row table61_row(int k, const SmallOptions& opts = {});

/// The reference table, k = 4..87.
const std::vector<Table61Row>& published_table61();

/// C^{d/c}: converts C N^{1-c} into the weaker C^{d/c} N^{1-d}.
double rescale_bound(double C, double c, double d);

/// Weyl-method constants for 1 <= lam <= 2.6 rescaled to the exponent
/// 1/(denom lam^2): max over both ranges, worst at the left end of each.
double lemma62_rescaled(double lam, double denom = 133.0);

struct Theorem2Coefficient {
  double C = 0.0;                // constant of the regime containing lam
  double denom = 0.0;            // reported exponent denominator
  double certified_denom = 0.0;  // denominator actually proved (<= denom)
  double small_n = 0.0;          // trivial-range coefficient e^{300/133.66}, 0 if unused
  double envelope = 0.0;         // max(C, small_n)
  std::string source;
};

/// Piecewise coefficient for S(N,t) <= C N^{1 - 1/(denom lam^2)}, lam >= 1.
Theorem2Coefficient theorem2_coefficient(double lam);

}  // namespace vinozeta::small
