#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "vinozeta/error.hpp"
#include "vinozeta/nt_base.hpp"
#include "vinozeta/oracle.hpp"

using namespace vinozeta;
using oracle::BigInt;
using oracle::Int;

namespace {

// J_{s,1} over [1, P] from the distribution of single sums.
std::int64_t linear_count(int s, std::int64_t P) {
  std::map<std::int64_t, std::int64_t> dist{{0, 1}};
  for (int i = 0; i < s; ++i) {
    std::map<std::int64_t, std::int64_t> next;
    for (const auto& [v, c] : dist)
      for (std::int64_t x = 1; x <= P; ++x) next[v + x] += c;
    dist = std::move(next);
  }
  std::int64_t total = 0;
  for (const auto& [v, c] : dist) total += c * c;
  return total;
}

BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    const BigInt term = a[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

}  // namespace

TEST_CASE("small counts") {
  CHECK(oracle::brute_J(oracle::SystemSpec::interval(1, 1, 1, 3)) == 3);
  CHECK(oracle::brute_J(oracle::SystemSpec::interval(2, 2, 1, 3)) == 15);
  CHECK(oracle::brute_J(oracle::SystemSpec::interval(3, 3, 1, 1)) == 1);
  const auto spec = oracle::SystemSpec::interval(2, 2, 1, 3);
  CHECK(oracle::brute_J(spec, {Int(1), Int(1)}) <= 15);
}

TEST_CASE("two variables and two equations force equal multisets") {
  for (std::int64_t P = 1; P <= 9; ++P)
    CHECK(oracle::brute_J(oracle::SystemSpec::interval(2, 2, 1, P)) == Int(2 * P * P - P));
}

TEST_CASE("linear system against sum distributions") {
  for (int s = 1; s <= 3; ++s)
    for (std::int64_t P = 1; P <= 8; ++P)
      CHECK(oracle::brute_J(oracle::SystemSpec::interval(s, 1, 1, P)) == Int(linear_count(s, P)));
}

TEST_CASE("direct and frequency methods agree") {
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k)
      for (int h = 1; h <= k; ++h) {
        const auto spec = oracle::SystemSpec::interval(s, k, h, 6);
        CHECK(oracle::brute_J_direct(spec) == oracle::brute_J_frequency(spec));
      }
}

TEST_CASE("bounds chain") {
  const auto rep = oracle::verify_bounds_chain(2, 2, 3);
  CHECK(rep.J == 15);
  CHECK(rep.all_hold());
  CHECK(oracle::verify_bounds_chain(1, 1, 1).J == 1);
  CHECK(oracle::verify_bounds_chain(3, 3, 5).all_hold());
}

TEST_CASE("zero target dominates") {
  for (std::int64_t P = 1; P <= 6; ++P) {
    const auto rep = oracle::verify_zrd(oracle::SystemSpec::interval(2, 2, 1, P));
    CHECK(rep.targets_checked > 0);
    CHECK(rep.max_nonzero <= rep.zero_count);
  }
}

TEST_CASE("counts grow with the variable set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::int64_t> pool{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::shuffle(pool.begin(), pool.end(), rng);
    Int prev = 0;
    for (std::size_t n = 1; n <= pool.size(); ++n) {
      oracle::SystemSpec spec;
      spec.s = 2;
      spec.k = 3;
      spec.h = 2;
      spec.variables.assign(pool.begin(), pool.begin() + static_cast<long>(n));
      const Int j = oracle::brute_J(spec);
      REQUIRE(j >= prev);
      prev = j;
    }
  }
}

TEST_CASE("smooth variable set") {
  const auto members = nt::enumerate_smooth(nt::default_table(), {60, 16, true});
  oracle::SystemSpec a;
  a.s = 2;
  a.k = 3;
  a.h = 2;
  a.variables = members;
  oracle::SystemSpec b = a;
  b.variables.clear();
  for (std::int64_t n = 1; n <= 60; ++n)
    if (nt::is_smooth_member(nt::default_table(), n, 16)) b.variables.push_back(n);
  CHECK(a.variables == b.variables);
  CHECK(oracle::brute_J(a) == oracle::brute_J(b));
}

TEST_CASE("capacity guard") {
  auto spec = oracle::SystemSpec::interval(3, 3, 1, 1000);
  spec.direct_guard = 1000;
  CHECK_THROWS_AS(oracle::brute_J_direct(spec), CapacityError);
}

TEST_CASE("determinant identity") {
  const auto rep = oracle::det_identity_check(oracle::PolySystem::monomials(3), {1, 2, 3});
  CHECK(rep.det == 12);
  CHECK(rep.formula == -12);
  CHECK(rep.magnitude_equal);
  CHECK_FALSE(rep.sign_equal);
  const auto rep0 = oracle::det_identity_check(oracle::PolySystem::monomials(3), {1, 2, 2});
  CHECK(rep0.det == 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto sys = oracle::PolySystem::random(3, 1, 2, 1, rng);
    std::vector<std::int64_t> pool{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(pool.begin(), pool.end(), rng);
    CHECK(oracle::det_identity_check(sys, {pool[0], pool[1]}).magnitude_equal);
  }
}

TEST_CASE("Bareiss against cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (auto& row : a)
      for (auto& x : row) x = d(rng);
    CHECK(oracle::bareiss_determinant(a) == cofactor_det(a));
  }
}

TEST_CASE("nonsingular congruence solutions") {
  using oracle::Monomial;
  using oracle::Polynomial;
  const oracle::CongruenceCase sq{"x^2 mod 3", 3, 1, {Polynomial{{Monomial{1, {2}}}}}};
  const auto r1 = oracle::congruence_count_check(sq);
  CHECK(r1.count == 0);
  CHECK(r1.bound == 2);
  const oracle::CongruenceCase pm{"x^2 - 1 mod 5", 5, 1, {Polynomial{{Monomial{1, {2}}, Monomial{-1, {0}}}}}};
  const auto r2 = oracle::congruence_count_check(pm);
  CHECK(r2.count == 2);
  CHECK(r2.bound == 2);
  const oracle::CongruenceCase diag{"x^2 - 1, y^3 - 1 mod 7", 7, 1,
                                    {Polynomial{{Monomial{1, {2, 0}}, Monomial{-1, {0, 0}}}},
                                     Polynomial{{Monomial{1, {0, 3}}, Monomial{-1, {0, 0}}}}}};
  const auto r3 = oracle::congruence_count_check(diag);
  CHECK(r3.count == 6);
  CHECK(r3.bound == 6);
  for (const auto& c : oracle::standard_congruence_cases()) {
    const auto r = oracle::congruence_count_check(c);
    CHECK(r.count <= r.bound);
  }
}
