#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "vinozeta/error.hpp"
#include "vinozeta/nt_base.hpp"

using namespace vinozeta;

namespace {

bool trial_division_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("prime counts match trial division") {
  const nt::PrimeTable table(20000);
  CHECK(table.prime_count(1) == 0);
  CHECK(table.prime_count(2) == 1);
  CHECK(table.prime_count(100) == 25);
  std::int64_t count = 0;
  for (std::int64_t n = 1; n <= 20000; ++n) {
    if (trial_division_prime(n)) ++count;
    REQUIRE(table.is_prime(n) == trial_division_prime(n));
    REQUIRE(table.prime_count(static_cast<double>(n)) == count);
  }
  CHECK(table.prime_count_by_scan(10000) == 1229);
}

TEST_CASE("prime-count bounds hold from 68") {
  const auto& table = nt::default_table();
  const auto rep = nt::verify_rosser_schoenfeld(table, 68, 100000);
  CHECK(rep.min_lower_slack > 0.0);
  CHECK(rep.min_upper_slack > 0.0);
  CHECK(100.0 / (std::log(100.0) - 0.5) == doctest::Approx(24.36).epsilon(1e-3));
}

TEST_CASE("Mertens constant and deviation bound") {
  const auto& table = nt::default_table();
  CHECK(table.mertens_constant() == doctest::Approx(0.2614972128).epsilon(1e-6));
  const double x = 1e6;
  CHECK(std::fabs(nt::mertens_deviation(table, x)) <= 1.0 / (2.0 * std::log(x) * std::log(x)));
  CHECK(std::fabs(nt::mertens_deviation(table, 286)) <= 1.0 / (2.0 * std::pow(std::log(286.0), 2)));
  CHECK_THROWS_AS(nt::mertens_deviation(table, 100), HypothesisError);
}

TEST_CASE("smooth sets by enumeration and by filtering") {
  const auto& table = nt::default_table();
  const std::vector<std::int64_t> expected{1, 5, 7, 11, 13};
  CHECK(nt::enumerate_smooth(table, {20, 16, true}) == expected);
  CHECK(nt::filter_smooth(table, {20, 16, true}) == expected);
  CHECK(nt::enumerate_smooth(table, {1, 4, true}) == std::vector<std::int64_t>{1});
  CHECK(nt::enumerate_smooth(table, {30, 16, true}) == nt::filter_smooth(table, {30, 16, true}));
  for (double P : {100.0, 1000.0, 5000.0})
    for (double R : {9.0, 30.0, 100.0})
      CHECK(nt::enumerate_smooth(table, {P, R, true}) == nt::filter_smooth(table, {P, R, true}));
}

TEST_CASE("Euler phi") {
  CHECK(nt::euler_phi(1) == 1);
  CHECK(nt::euler_phi(12) == 4);
  CHECK(nt::euler_phi(97) == 96);
  for (std::int64_t q = 1; q <= 200; ++q) {
    std::int64_t units = 0;
    for (std::int64_t a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1) ++units;
    REQUIRE(nt::euler_phi(q) == units);
  }
}

TEST_CASE("dyadic intervals contain enough primes") {
  const auto& table = nt::default_table();
  for (std::int64_t n : {21, 50, 130, 500}) CHECK(nt::primes_in_dyadic_interval(table, n));
}
