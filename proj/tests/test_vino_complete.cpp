#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "vinozeta/error.hpp"
#include "vinozeta/vino_complete.hpp"

using namespace vinozeta;
using boost::multiprecision::cpp_rational;

namespace {

// Exact phi list with the largest j allowed by 2 <= j <= 9r/10 and
// (j-1)(j-2) <= 2 Delta - (k-r)(k-r+1).
std::vector<cpp_rational> exact_phi(long k, long r, const cpp_rational& delta) {
  const cpp_rational y = 2 * delta - (k - r) * (k - r + 1);
  long j = 2;
  while (10 * (j + 1) <= 9 * r && cpp_rational(j * (j - 1)) <= y) ++j;
  std::vector<cpp_rational> phi(static_cast<std::size_t>(j));
  phi[j - 1] = cpp_rational(1, r);
  for (long J = j - 1; J >= 1; --J)
    phi[J - 1] = cpp_rational(1, 2 * r) +
                 (k * k + k + r * r - r + J * J - J - 2 * delta) / cpp_rational(4 * k * r) * phi[J];
  return phi;
}

bool close12(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); }

}  // namespace

TEST_CASE("phi sequence agrees with exact rationals") {
  const long k = 129;
  const cpp_rational delta(k * (k - 1), 2);
  const double d = static_cast<double>(delta);
  const int r0 = static_cast<int>(std::sqrt(k * k + k - 2.0 * d) + 0.5);
  for (int r = std::max(4, r0 - 2); r <= r0 + 2; ++r) {
    const auto seq = complete::phi_sequence(k, r, d);
    const auto ex = exact_phi(k, r, delta);
    REQUIRE(seq.phi.size() == ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) CHECK(close12(seq.phi[i], static_cast<double>(ex[i])));
    const cpp_rational exact_next = delta * (1 - ex[0]) - k + ex[0] / 2 * (k * k + k + r * r - r);
    const double next = complete::delta_step(k, r, d);
    CHECK(close12(next, static_cast<double>(exact_next)));
    CHECK(next < d);
  }
}

TEST_CASE("phi sequence at a reduced Delta") {
  const long k = 200;
  const cpp_rational delta(31415, 7);
  const double d = static_cast<double>(delta);
  const int r = static_cast<int>(std::sqrt(k * k + k - 2.0 * d) + 0.5);
  const auto seq = complete::phi_sequence(k, r, d);
  const auto ex = exact_phi(k, r, delta);
  REQUIRE(seq.phi.size() == ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) CHECK(close12(seq.phi[i], static_cast<double>(ex[i])));
}

TEST_CASE("invalid r") {
  CHECK_THROWS_AS(complete::phi_sequence(129, 3, 8256), InvalidR);
  CHECK_THROWS_AS(complete::delta_step(129, 3, 8256), InvalidR);
  CHECK(complete::delta_step_or_double(129, 3, 8256) == 2.0 * 8256);
}

TEST_CASE("j is capped at 9r/10") {
  // A large surplus makes the gap bound exceed 9r/10.
  const auto seq = complete::phi_sequence(129, 20, 8256);
  CHECK(seq.j == 18);
}

TEST_CASE("omega fixed point") {
  const auto om = complete::solve_omega(129);
  CHECK(complete::omega_residual(129, om.omega) < 1e-6);
  const double lk = std::log(129.0);
  CHECK(om.omega >= 1.0 / (3.0 * lk));
  CHECK(om.omega <= 1.0 / (2.0 * lk + 4.0 / 3.0 * std::log(lk)));
  double prev = om.omega;
  for (int k = 130; k <= 1000; ++k) {
    const double w = complete::solve_omega(k).omega;
    REQUIRE(w < prev);
    prev = w;
  }
  CHECK_THROWS_AS(complete::solve_omega(100), HypothesisError);
}

TEST_CASE("search reaches the reference bands") {
  for (int k : {129, 149, 150, 199, 200, 300}) {
    const auto res = complete::theorem3_search(k);
    const auto band = complete::published_rho_theta(k);
    CHECK(res.rho <= band.rho);
    CHECK(res.theta <= band.theta);
    CHECK(static_cast<double>(res.s) == doctest::Approx(res.rho * k * k));
  }
}

TEST_CASE("trace is decreasing and ends below the goal") {
  complete::Theorem3Options opts;
  opts.keep_trace = true;
  const auto res = complete::theorem3_search(140, opts);
  REQUIRE(res.trace.size() >= 2);
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    CHECK(res.trace[i].delta < res.trace[i - 1].delta);
    CHECK(res.trace[i].ln_c > res.trace[i - 1].ln_c);
  }
  CHECK(res.trace.back().delta <= 0.001 * 140 * 140);
}

TEST_CASE("closed forms at k = 1000") {
  const int k = 1000;
  const auto cf = complete::lemma36_closed_forms(k, 2 * k);
  CHECK(cf.delta_bound == doctest::Approx(0.375e6 * std::exp(-3.5 + 0.00169)).epsilon(1e-12));
  const auto st = complete::theorem3_statement(k, 2LL * k * k);
  CHECK(st.delta_bound == doctest::Approx(0.375 * k * k * std::exp(0.5 - 4.0 + 1.7 / k)).epsilon(1e-12));
  const auto st2 = complete::theorem3_statement(k, 2'500'000);
  CHECK(std::isfinite(st2.delta_bound));
  CHECK(st2.delta_bound > 0.0);
  CHECK(std::isfinite(st2.ln_c_bound));
  CHECK(st2.delta_bound < st.delta_bound);
}

TEST_CASE("iteration stays under the closed forms") {
  const int k = 1000;
  const int n_max = complete::lemma36_n_max(k);
  const auto recs = complete::lemma35_iteration(k, n_max, 0.06);
  for (const auto& rec : recs) {
    if (rec.n < 2 * k) continue;
    const auto cf = complete::lemma36_closed_forms(k, rec.n);
    REQUIRE(rec.delta <= cf.delta_bound);
    REQUIRE(rec.ln_c <= cf.ln_c_bound);
  }
}
