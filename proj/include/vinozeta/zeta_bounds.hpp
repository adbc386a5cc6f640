// Explicit upper bounds for |zeta(sigma + it)| and |zeta(s,u) - u^{-s}| on
// 1/2 <= sigma <= 1, t >= 3, and the character-sum bound derived from the
// S(N,t) estimate.
#pragma once

#include <cstdint>
#include <string>

namespace vinozeta::zeta {

inline constexpr double kA = 76.2;
inline constexpr double kB = 4.45;
inline constexpr double kExpSumC = 9.463;
inline constexpr double kExpSumD = 133.66;

struct ZetaConstants {
  double C_exp = 0.0;
  double D_exp = 0.0;
  double A = 0.0;
  double B = 0.0;
};

/// From S(N,t) <= C N^{1 - 1/(D lam^2)}: B = (2/9) sqrt(3D) and
/// A = (C + 1 + 1e-80)/log^{2/3}(1e100) + 1.569 C D^{1/3}.
ZetaConstants lemma73_constants(double C, double D);

/// (t + 3/2)^{1-sigma} (1 + 1/t + min(1/(1-sigma), log(2t+1))).
double crude_bound(double sigma, double t);

/// 58.1 t^{4(1-sigma)^{3/2}} log^{2/3} t; requires sigma <= 15/16 or t <= 1e100.
double lemma71_packaged(double sigma, double t);

/// e^{-2y^3} int_0^inf e^{3y^2 u - u^3} du, written as
/// int_0^inf exp(-(u-y)^2 (u+2y)) du and cut where the integrand drops below
/// 1e-18.
double integral_g(double y, double tol = 1e-9);

struct IntegralReport {
  double max_value = 0.0;
  double argmax_y = 0.0;
  double value_at_zero = 0.0;  // Gamma(4/3)
  double tolerance = 0.0;
};

/// Maximises integral_g over y in [0, 5]: a 1001-point grid, then Brent
/// refinement around the best node.
IntegralReport verify_integral_constant(double tol = 1e-9);

struct ZetaBound {
  double value = 0.0;
  std::string source;    // which bound attained the minimum
  double theorem1 = 0.0; // A t^{B(1-sigma)^{3/2}} log^{2/3} t
  double lemma71 = 0.0;  // 0 when its hypothesis fails
  double crude = 0.0;
};

/// Minimum of the applicable certified bounds. Requires 1/2 <= sigma <= 1,
/// t >= 3.
ZetaBound zeta_bound(double sigma, double t);

/// 10.463 (phi(q)/q) N exp(-log^3(N/q)/(133.66 log^2 t)); requires
/// 1 <= q <= N and 2 <= N <= q t.
double corollary2a_bound(std::int64_t q, double N, double t);

}  // namespace vinozeta::zeta
