#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "vinozeta/error.hpp"
#include "vinozeta/expsum_large.hpp"

using namespace vinozeta;

namespace {

constexpr double kMu1 = 0.1905, kMu2 = 0.1603;

double h_sum_direct(double lam, int g, int h) {
  double sum = 0.0;
  for (int j = h; j <= g; ++j)
    sum += std::min({j * kMu2, j - lam, lam - j * (1.0 - kMu1 - kMu2)});
  return sum;
}

struct Golden {
  double lam1, lam2;
  int g, h;
  long s;
  double u, c;
};

// Rows produced by an independent transcription of the search program.
void check_rows(double lo, double hi, std::optional<double> sigma, const std::vector<Golden>& expect) {
  large::LargeLambdaConfig cfg;
  cfg.sigma = sigma;
  const auto rows = large::search_intervals(lo, hi, cfg);
  REQUIRE(rows.size() == expect.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& e = expect[i];
    CHECK(r.feasible);
    CHECK(r.lam1 == doctest::Approx(e.lam1).epsilon(1e-12));
    CHECK(r.lam2 == doctest::Approx(e.lam2).epsilon(1e-12));
    CHECK(r.g == e.g);
    CHECK(r.h == e.h);
    CHECK(r.s == e.s);
    CHECK(r.t == e.g - e.h + 1);
    CHECK(r.denom_u == doctest::Approx(e.u).epsilon(1e-9));
    CHECK(r.constant_c == doctest::Approx(e.c).epsilon(1e-9));
  }
}

}  // namespace

TEST_CASE("H sum against its definition") {
  CHECK(large::h_sum_exact(100.0, 118, 118, kMu1, kMu2) == doctest::Approx(h_sum_direct(100.0, 118, 118)));
  CHECK(large::h_sum_exact(100.0, 125, 118, kMu1, kMu2) == doctest::Approx(h_sum_direct(100.0, 125, 118)));
  const auto pw = large::h_piecewise(100.0, 125, 118, kMu1, kMu2);
  for (double lam : {100.0, 100.05, 100.1}) {
    const auto p = large::h_piecewise(lam, 125, 118, kMu1, kMu2);
    CHECK(p.m1 == pw.m1);
    CHECK(p.m2 == pw.m2);
    CHECK(p.Z0 + p.Z1 * lam == doctest::Approx(h_sum_direct(lam, 125, 118)).epsilon(1e-12));
  }
}

TEST_CASE("H lower bound on random admissible tuples") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> lam_d(87.0, 300.0);
  int n = 0;
  while (n < 200) {
    const double lam = lam_d(rng);
    const int h = std::uniform_int_distribution<int>(static_cast<int>(std::ceil(lam)),
                                                     static_cast<int>(lam / (1.0 - kMu2)))(rng);
    const int g = std::uniform_int_distribution<int>(static_cast<int>(std::ceil(lam / (1.0 - kMu1))),
                                                     static_cast<int>(lam / (1.0 - kMu1 - kMu2)))(rng);
    if (g < h) continue;
    const double lower = large::h_lower(lam, g / lam, h / lam, kMu1, kMu2);
    REQUIRE(h_sum_direct(lam, g, h) >= lower - 1e-9);
    REQUIRE(large::h_sum_exact(lam, g, h, kMu1, kMu2) >= lower - 1e-9);
    ++n;
  }
  const auto c1 = large::h_coefficients(1.2453, 1.1818, kMu1, kMu2);
  const auto c2 = large::h_coefficients(1.3, 1.0, kMu1, kMu2);
  CHECK(c1.H0 == c2.H0);
  CHECK(c1.H0 == doctest::Approx((2.0 - kMu1 - kMu2) / 8.0));
}

TEST_CASE("configuration") {
  large::LargeLambdaConfig cfg;
  CHECK(cfg.D() == doctest::Approx(30.57));
  cfg.mu1 = 0.1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("single candidate matches the transcription") {
  large::LargeLambdaConfig cfg;
  const auto r = large::calc_interval(100.2, 100.8, 125, 118, 300, cfg);
  CHECK(r.k == 154);
  CHECK(r.exponent == doctest::Approx(0.007350759707897607).epsilon(1e-10));
  CHECK(r.constant_c == doctest::Approx(6.31561495616593).epsilon(1e-10));
  CHECK_THROWS_AS(large::calc_interval(79.0, 80.5, 100, 95, 200, cfg), DomainError);
}

TEST_CASE("interval search with s searched") {
  check_rows(150, 151, std::nullopt,
             {{150.0, 150.3063, 187, 177, 700, 133.6598563020, 3.9075097045},
              {150.3063, 150.5670, 187, 178, 757, 133.6475712966, 3.6372883114},
              {150.5670, 150.6143980524, 188, 178, 828, 133.6595620219, 3.4797110587},
              {150.6143980524, 151.0, 188, 178, 708, 133.6579176268, 3.8871042099}});
  check_rows(219, 220, std::nullopt,
             {{219.0, 219.1617, 272, 259, 1487, 133.6552296296, 2.8876037447},
              {219.1617, 219.3745, 272, 260, 1408, 133.6592889281, 2.9604843391},
              {219.3745, 219.4295980524, 273, 260, 1572, 133.6571901572, 2.8109962557},
              {219.4295980524, 220.0, 273, 260, 1455, 133.6544885212, 2.9292776056}});
}

TEST_CASE("interval search with fixed sigma") {
  check_rows(150, 151, 0.3299,
             {{150.0, 150.3063, 187, 177, 643, 133.4948272862, 4.1950753472},
              {150.3063, 150.5670, 187, 178, 588, 132.0163447744, 4.4766564745},
              {150.5670, 150.6143980524, 188, 178, 646, 132.2396468212, 4.2067780363},
              {150.6143980524, 151.0, 188, 178, 646, 133.4622252670, 4.1955611770}});
}

TEST_CASE("parallel search is identical to serial") {
  large::LargeLambdaConfig cfg;
  const auto a = large::search_intervals(120, 124, cfg, 1);
  const auto b = large::search_intervals(120, 124, cfg, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].s == b[i].s);
    CHECK(a[i].constant_c == b[i].constant_c);
  }
}

TEST_CASE("[86,87] contains an interval with no admissible choice") {
  large::LargeLambdaConfig cfg;
  const auto rows = large::search_intervals(86, 87, cfg);
  CHECK(std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.feasible; }));
}

TEST_CASE("closed-form grid maximum sits at the corner") {
  const auto res = large::lemma52_verify(441, 220.0);
  CHECK(res.argmax_gamma == doctest::Approx(1.1818 + 1.0 / 440.0).epsilon(1e-14));
  CHECK(res.argmax_phi == doctest::Approx(1.2453 - 1.0 / 440.0).epsilon(1e-14));
  // Direct evaluation of f at the corner.
  const double g = 1.1818 + 1.0 / 440.0, p = 1.2453 - 1.0 / 440.0, sig = 0.3299;
  const double nu = 1.0 - kMu1 - kMu2;
  const double H2 = p + g - g * g / 2 - nu * p * p / 2 - (2 - kMu1 - kMu2) / (2 * (1 - kMu1) * (1 - kMu2));
  const double k1 = 1.0 / 0.6492 + 3e-6 / 220.0;
  const double f = (0.001 * kMu1 / (p - g) + (-H2 / (p - g) + 1.001 * kMu2 * ((p - g) / 2 + g * std::exp(-sig))) / (k1 * k1)) /
                   (2.002 * sig * g);
  CHECK(res.max_f == doctest::Approx(f).epsilon(1e-13));
  CHECK(large::lemma52_f(g, p, 220.0) == doctest::Approx(f).epsilon(1e-13));
  CHECK_THROWS_AS(large::lemma52_assembled(200.0, res.max_f), HypothesisError);
}
