// Prime and smooth-number primitives, and numeric checks of the classical
// prime-counting and Mertens-type inequalities.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace vinozeta::nt {

inline constexpr std::int64_t kDefaultSieveLimit = 1'000'000;

/// Sieve of Eratosthenes up to `limit`, with cumulative counts and the
/// reciprocal-prime partial sums. Immutable after construction.
class PrimeTable {
 public:
  explicit PrimeTable(std::int64_t limit = kDefaultSieveLimit);

  std::int64_t limit() const { return limit_; }
  bool is_prime(std::int64_t n) const;

  /// pi(x) for real x in [0, limit]. Throws CapacityError beyond the sieve.
  std::int64_t prime_count(double x) const;

  /// pi(x) by scanning the primality flags; independent of the cumulative
  /// array used by prime_count.
  std::int64_t prime_count_by_scan(std::int64_t x) const;

  /// Sum of 1/p over primes p <= x.
  double reciprocal_sum(double x) const;

  /// Primes in the half-open interval (lo, hi], ascending.
  std::vector<std::int64_t> primes_in(double lo, double hi) const;

  const std::vector<std::int64_t>& primes() const { return primes_; }

  /// The Mertens constant B in sum_{p<=x} 1/p = log log x + B + o(1),
  /// computed from the table as gamma + sum_p (log(1-1/p) + 1/p) with an
  /// integral estimate of the tail beyond the sieve.
  double mertens_constant() const { return mertens_; }

 private:
  std::int64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::int32_t> pi_;
  std::vector<double> recip_;
  std::vector<std::int64_t> primes_;
  double mertens_ = 0.0;
};

/// Shared default table (limit 10^6), built once on first use.
const PrimeTable& default_table();

struct RosserSchoenfeldReport {
  std::int64_t points_checked = 0;
  double min_lower_slack = 0.0;  // min of pi(x) - x/(log x - 1/2)
  double min_upper_slack = 0.0;  // min of (x/log x)(1 + 3/(2 log x)) - pi(x)
  double worst_lower_x = 0.0;
  double worst_upper_x = 0.0;
};

/// Checks x/(log x - 1/2) < pi(x) < (x/log x)(1 + 3/(2 log x)) at every
/// integer x in [x_min, x_max] and at the left limit x -> (n+1)^- of every
/// step (the sharpest point for the lower bound). `step` thins the integer
/// sample; prime jump points are always checked. Throws VerificationFailure
/// naming x on violation.
RosserSchoenfeldReport verify_rosser_schoenfeld(const PrimeTable& table, double x_min,
                                                double x_max, std::int64_t step = 1);

/// sum_{p<=x} 1/p - log log x - B. Requires x >= 286.
double mertens_deviation(const PrimeTable& table, double x);

struct MertensReport {
  std::int64_t points_checked = 0;
  double max_ratio = 0.0;  // max |deviation| * 2 log^2 x
  double worst_x = 0.0;
};

/// Checks |deviation| <= 1/(2 log^2 x) at every prime in [x_min, x_max] and
/// just before the next prime.
MertensReport verify_mertens(const PrimeTable& table, double x_min, double x_max);

/// True when (x, 2x] with x = 2 N log N holds at least N primes.
bool primes_in_dyadic_interval(const PrimeTable& table, std::int64_t n_primes);

/// C(P,R): integers n <= P whose prime factors all lie in (sqrt R, R].
struct SmoothSetSpec {
  double P = 1.0;
  double R = 2.0;
  bool include_one = true;
};

inline constexpr std::int64_t kSmoothEnumerationGuard = 10'000'000;

/// Enumerates C(P,R) by depth-first products of primes in (sqrt R, R].
std::vector<std::int64_t> enumerate_smooth(const PrimeTable& table, const SmoothSetSpec& spec,
                                           std::int64_t guard = kSmoothEnumerationGuard);

/// Same set by testing every integer in [1, floor P].
std::vector<std::int64_t> filter_smooth(const PrimeTable& table, const SmoothSetSpec& spec);

bool is_smooth_member(const PrimeTable& table, std::int64_t n, double R);

std::int64_t euler_phi(std::int64_t q);

/// Reduced-scale comparison against the lower and upper counts for
/// |C(R^u, R)|. The bounds need R far beyond enumeration range, so these
/// numbers are sanity data only and prove nothing.
struct SmoothCountSanity {
  double R = 0.0;
  double u = 0.0;
  std::int64_t count = 0;
  double lower_bound = 0.0;  // delta^w/(w+1)! R^u/log R
  double upper_bound = 0.0;  // R^u (2/u)^u
  bool probative = false;
};

SmoothCountSanity smooth_count_sanity(const PrimeTable& table, double R, double u,
                                      double delta);

}  // namespace vinozeta::nt
