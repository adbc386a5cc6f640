#include <doctest.h>

#include <cmath>

#include "vinozeta/error.hpp"
#include "vinozeta/expsum_small.hpp"

using namespace vinozeta;

namespace {

// The balance function whose root is the best omega, written from its definition.
struct Balance {
  double logA, logV1, B, C;
  Balance(int k, double delta) {
    const double kk = k;
    double lkf = 0.0;
    for (int i = 2; i <= k; ++i) lkf += std::log(i);
    logA = std::log(4.0 * kk * kk * kk) + lkf;
    logV1 = std::log(6.0 * kk * kk * kk * std::log(kk));
    B = kk * kk - delta;
    C = delta;
  }
  double logV(double w) const { return std::max(1.5 + 1.5 / w, logV1 + std::log(3.0 / w)); }
  double operator()(double w) const { return (1.0 + w) * std::exp(logA / B) - std::exp(logV(w) * C / B); }
};

}  // namespace

TEST_CASE("reference rows") {
  const auto& pub = small::published_table61();
  REQUIRE(pub.size() == 84);
  for (int k : {4, 20, 50, 87}) {
    const auto row = small::table61_row(k);
    const auto& ref = pub[static_cast<std::size_t>(k - 4)];
    CHECK(ref.k == k);
    CHECK(row.n0 == ref.n0);
    CHECK(row.n == ref.n);
    CHECK(row.C <= ref.C + 5e-5);
    CHECK(row.C > ref.C - 1.5e-4);
  }
  CHECK(pub[0].n == 13);
  CHECK(pub[0].C == 2.5543);
  CHECK(pub[16].n0 == 9);
  CHECK(pub[16].n == 119);
  CHECK(pub[16].C == 2.0766);
  CHECK(pub[83].n0 == 149);
  CHECK(pub[83].C == 9.4620);
}

TEST_CASE("best omega against a dense grid") {
  int interior = 0;
  for (int k : {5, 10, 20, 40, 87}) {
    const double top = 0.5 * k * (k - 1.0);
    for (double frac : {1.0, 0.5, 0.2, 0.05, 0.01}) {
      const double delta = top * frac;
      const double w = small::best_omega(k, delta);
      const Balance F(k, delta);
      if (w == 1.0 || w == 0.5) {
        CHECK(F(0.5) <= 0.0);
        continue;
      }
      ++interior;
      CHECK(F(0.5) > 0.0);
      // Scan downwards from 1/2 for the first sign change.
      constexpr int n = 100000;
      double root = -1.0;
      for (int i = n; i > 1; --i) {
        const double a = 0.5 * i / n, b = 0.5 * (i - 1) / n;
        if (F(a) > 0.0 && F(b) <= 0.0) {
          root = b;
          break;
        }
      }
      REQUIRE(root > 0.0);
      CHECK(std::fabs(w - root) <= 0.5 / n + 1e-7 * w);
    }
  }
  CHECK(interior > 0);
}

TEST_CASE("eta choices") {
  CHECK(small::small_eta(9) == 1.308);
  CHECK(small::small_eta(13) == doctest::Approx(17.0 / 13.0).epsilon(1e-3));
  CHECK(small::small_eta(14) == doctest::Approx(29.0 / 23.0).epsilon(1e-4));
  CHECK(small::small_eta(33) == doctest::Approx(53.0 / 47.0).epsilon(1e-5));
}

TEST_CASE("Delta decreases geometrically after n0") {
  const auto st = small::constants_sequence(20, 9);
  for (std::size_t n = 10; n + 1 < st.delta.size(); ++n) {
    CHECK(st.delta[n] < st.delta[n - 1]);
    CHECK(st.delta[n] == doctest::Approx(st.delta[n - 1] * (1.0 - 1.0 / 20.0)));
  }
}

TEST_CASE("true pi moves the constant only slightly") {
  small::SmallOptions opts;
  opts.true_pi = true;
  const auto a = small::table61_row(30);
  const auto b = small::table61_row(30, opts);
  CHECK(std::fabs(a.C - b.C) < 1e-3);
}

TEST_CASE("rescaling") {
  CHECK(small::rescale_bound(3.7, 0.01, 0.01) == doctest::Approx(3.7));
  CHECK(small::rescale_bound(5.0, 1.0 / 20.0, 1.0 / 133.0) == doctest::Approx(1.2738).epsilon(1e-4));
  const double r = small::rescale_bound(30.0, 1.0 / 83.0, 1.0 / (133.66 * 1.9 * 1.9));
  CHECK(r == doctest::Approx(1.795).epsilon(1e-3));
  CHECK(r <= 1.81);
  CHECK_THROWS_AS(small::rescale_bound(5.0, 0.01, 0.02), DomainError);
}

TEST_CASE("S(N,t) coefficient by regime") {
  CHECK(small::theorem2_coefficient(2.0).C == 1.81);
  CHECK(small::theorem2_coefficient(2.0).denom == 133.0);
  CHECK(small::theorem2_coefficient(50.0).C == 3.9348);
  CHECK(small::theorem2_coefficient(50.0).denom == 133.66);
  CHECK(small::theorem2_coefficient(100.0).C == 8.4);
  const auto big = small::theorem2_coefficient(300.0);
  CHECK(big.C == 7.5);
  CHECK(big.certified_denom == 133.58);
  CHECK(big.envelope == doctest::Approx(std::exp(300.0 / 133.66)));
  CHECK(big.envelope <= 9.463);
}
