#include "vinozeta/zeta_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "vinozeta/error.hpp"
#include "vinozeta/nt_base.hpp"

namespace vinozeta::zeta {

ZetaConstants lemma73_constants(double C, double D) {
  if (!(C > 0.0 && D > 0.0)) throw DomainError("lemma73_constants: C and D must be positive");
  ZetaConstants z;
  z.C_exp = C;
  z.D_exp = D;
  z.B = 2.0 / 9.0 * std::sqrt(3.0 * D);
  const double log_t = 100.0 * std::log(10.0);
  z.A = (C + 1.0 + 1e-80) / std::pow(log_t, 2.0 / 3.0) + 1.569 * C * std::cbrt(D);
  return z;
}

namespace {

void check_strip(double sigma, double t) {
  if (!(sigma >= 0.5 && sigma <= 1.0)) throw DomainError("requires 1/2 <= sigma <= 1");
  if (!(t >= 3.0)) throw DomainError("requires t >= 3");
}

double power_log_form(double coeff, double expo, double sigma, double t) {
  const double lt = std::log(t);
  return coeff * std::exp(expo * std::pow(1.0 - sigma, 1.5) * lt) * std::pow(lt, 2.0 / 3.0);
}

}  // namespace

double crude_bound(double sigma, double t) {
  check_strip(sigma, t);
  const double tail = sigma < 1.0 ? std::min(1.0 / (1.0 - sigma), std::log(2.0 * t + 1.0))
                                  : std::log(2.0 * t + 1.0);
  return std::pow(t + 1.5, 1.0 - sigma) * (1.0 + 1.0 / t + tail);
}

double lemma71_packaged(double sigma, double t) {
  check_strip(sigma, t);
  if (!(sigma <= 15.0 / 16.0 || t <= 1e100))
    throw HypothesisError("requires sigma <= 15/16 or t <= 1e100");
  return power_log_form(58.1, 4.0, sigma, t);
}

double integral_g(double y, double tol) {
  if (!(y >= 0.0)) throw DomainError("integral_g: requires y >= 0");
  // Beyond u = y + w the exponent exceeds 41.45 = log(1e18).
  constexpr double cut = 41.45;
  double w = std::cbrt(cut);
  if (y > 0.0) w = std::min(w, std::sqrt(cut / (3.0 * y)));
  auto f = [y](double u) { return std::exp(-(u - y) * (u - y) * (u + 2.0 * y)); };
  double err = 0.0;
  using boost::math::quadrature::gauss_kronrod;
  double value = 0.0;
  // Split at the peak u = y so both pieces are smooth and unimodal.
  if (y > 0.0) value += gauss_kronrod<double, 31>::integrate(f, 0.0, y, 20, tol, &err);
  value += gauss_kronrod<double, 31>::integrate(f, y, y + w, 20, tol, &err);
  if (!std::isfinite(value)) throw VerificationFailure("integral_g: quadrature failed");
  return value;
}

IntegralReport verify_integral_constant(double tol) {
  constexpr int grid = 1000;
  constexpr double y_max = 5.0;
  IntegralReport rep;
  rep.tolerance = tol;
  rep.value_at_zero = integral_g(0.0, tol);
  int best = 0;
  double best_val = rep.value_at_zero;
  for (int i = 1; i <= grid; ++i) {
    const double v = integral_g(y_max * i / grid, tol);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = y_max * std::max(best - 1, 0) / grid;
  const double hi = y_max * std::min(best + 1, grid) / grid;
  auto neg = [tol](double y) { return -integral_g(y, tol); };
  const auto [y_star, neg_val] = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
  if (-neg_val >= best_val) {
    rep.max_value = -neg_val;
    rep.argmax_y = y_star;
  } else {
    rep.max_value = best_val;
    rep.argmax_y = y_max * best / grid;
  }
  return rep;
}

ZetaBound zeta_bound(double sigma, double t) {
  check_strip(sigma, t);
  ZetaBound z;
  z.theorem1 = power_log_form(kA, kB, sigma, t);
  z.crude = crude_bound(sigma, t);
  z.value = z.theorem1;
  z.source = "theorem1";
  if (sigma <= 15.0 / 16.0 || t <= 1e100) {
    z.lemma71 = lemma71_packaged(sigma, t);
    if (z.lemma71 < z.value) {
      z.value = z.lemma71;
      z.source = "lemma71";
    }
  }
  if (z.crude < z.value) {
    z.value = z.crude;
    z.source = "crude";
  }
  return z;
}

double corollary2a_bound(std::int64_t q, double N, double t) {
  if (q < 1 || static_cast<double>(q) > N) throw HypothesisError("requires 1 <= q <= N");
  if (!(N >= 2.0 && N <= static_cast<double>(q) * t)) throw HypothesisError("requires 2 <= N <= q t");
  if (!(t > 1.0)) throw HypothesisError("requires t > 1");
  const double ratio = static_cast<double>(nt::euler_phi(q)) / static_cast<double>(q);
  const double lnq = std::log(N / static_cast<double>(q));
  const double lt = std::log(t);
  return 10.463 * ratio * N * std::exp(-lnq * lnq * lnq / (kExpSumD * lt * lt));
}

}  // namespace vinozeta::zeta
