#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vinozeta/error.hpp"
#include "vinozeta/vino_incomplete.hpp"

using namespace vinozeta;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

incomplete::IncompleteParams reference_point() {
  return {106, 100, 231, 1.0 / (3.6 * std::pow(106.0, 1.5)), 30.57};
}

// The bound evaluated from its definition in 50-digit arithmetic.
std::pair<Big, Big> extended(const incomplete::IncompleteParams& p) {
  const Big k = p.k, h = p.h, t = p.t(), s = p.s, eta = p.eta, D = p.D;
  const Big expo = 2 * s - t / 2 * (h + k) + t * (t - 1) / 2 + eta * s * s / (2 * t) + h * t * exp(-s / (h * t));
  const Big lk = log(k);
  const Big c = s * s / t + Big(21) / 2 * t * lk * lk / (D * k * eta * eta) -
                s * ((1 / eta + h) * pow(1 - 1 / h, s / t) - h) * log(1 / (10 * eta));
  return {expo, c};
}

bool close12(double a, const Big& b) {
  return abs(Big(a) - b) <= Big(1e-12) * abs(b);
}

}  // namespace

TEST_CASE("reference point agrees with extended precision") {
  const auto p = reference_point();
  const auto b = incomplete::theorem4_bound(p);
  const auto [expo, c] = extended(p);
  CHECK(b.hypotheses_checked);
  CHECK(close12(b.exponent, expo));
  CHECK(close12(b.ln_c, c));
}

TEST_CASE("random admissible points agree with extended precision") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 50; ++trial) {
    const int k = std::uniform_int_distribution<int>(60, 300)(rng);
    const int h = std::uniform_int_distribution<int>((9 * k + 9) / 10, k - 2)(rng);
    const int t = k - h + 1;
    const long s = std::uniform_int_distribution<long>(2 * t, (h / 2) * t)(rng);
    const double xi = std::uniform_real_distribution<double>(3.0, 6.0)(rng);
    const incomplete::IncompleteParams p{k, h, s, 1.0 / (xi * std::pow(k, 1.5)), 30.57};
    try {
      incomplete::check_hypotheses(p);
    } catch (const HypothesisError&) {
      continue;
    }
    const auto b = incomplete::theorem4_bound(p);
    const auto [expo, c] = extended(p);
    REQUIRE(close12(b.exponent, expo));
    REQUIRE(close12(b.ln_c, c));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("hypothesis failures name the condition") {
  auto p = reference_point();
  p.k = 50;
  p.h = 46;
  try {
    incomplete::check_hypotheses(p);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("k >= 60") != std::string::npos);
  }
  const auto b = incomplete::theorem4_bound(p, false);
  CHECK_FALSE(b.hypotheses_checked);
  CHECK(std::isfinite(b.exponent));
}

TEST_CASE("exponent at s = 2t") {
  auto p = reference_point();
  p.s = 2 * p.t();
  const auto b = incomplete::theorem4_bound(p, false);
  const double k = p.k, h = p.h, t = p.t(), s = static_cast<double>(p.s);
  const double expect = 2 * s - t / 2 * (h + k) + t * (t - 1) / 2 + p.eta * s * s / (2 * t) + h * t * std::exp(-2.0 / h);
  CHECK(b.exponent == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("E_j at j = 2 and the bound on its maximum") {
  const auto p = reference_point();
  const double logP = p.D * p.k * p.k;
  const int L = 5;
  const double h = p.h, alpha = 1.0 - 1.0 / h;
  const double f2 = 2.0 - 1.0 / h - h * (1.0 - alpha * alpha);
  const double e2 = std::pow(alpha, L - 2) * (4.0 * std::log(106.0) / p.eta - f2 * logP);
  CHECK(incomplete::lemma42_Ej(p.k, p.h, L, p.eta, logP, 2) == doctest::Approx(e2).epsilon(1e-12));
  CHECK(std::fabs(f2) < 1e-12);

  for (int k : {80, 106, 150})
    for (double xi : {3.0, 4.5, 6.0})
      for (int L : {5, 20, 39}) {
        const int h = k - 2;
        const double eta = 1.0 / (xi * std::pow(k, 1.5));
        const double lp = 30.57 * k * k;
        const double A = lp;
        double worst = -INFINITY;
        for (int j = 2; j <= L; ++j) worst = std::max(worst, incomplete::lemma42_Ej(k, h, L, eta, lp, j));
        CHECK(worst <= incomplete::lemma43_max(k, h, eta, A) * (1.0 + 1e-12));
      }
}

TEST_CASE("bracket series and linear bound") {
  for (double x : {1e-6, 1e-5, 1e-4}) CHECK(incomplete::lemma43_bracket(x) == doctest::Approx(x / 2).epsilon(1e-3));
  for (int i = 0; i <= 1000; ++i) {
    const double x = 0.408 * (i + 1) / 1001.0;
    REQUIRE(incomplete::lemma43_bracket(x) <= 0.5866 * x);
  }
  CHECK_THROWS_AS(incomplete::lemma43_bracket(0.0), DomainError);
}
