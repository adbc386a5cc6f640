#include "vinozeta/nt_base.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "vinozeta/error.hpp"

namespace vinozeta::nt {

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  composite_.assign(static_cast<std::size_t>(limit + 1), false);
  composite_[0] = composite_[1] = true;
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite_[p]) continue;
    for (std::int64_t m = p * p; m <= limit; m += p) composite_[m] = true;
  }
  pi_.assign(static_cast<std::size_t>(limit + 1), 0);
  recip_.assign(static_cast<std::size_t>(limit + 1), 0.0);
  std::int32_t count = 0;
  double sum = 0.0;
  for (std::int64_t n = 0; n <= limit; ++n) {
    if (!composite_[n]) {
      ++count;
      sum += 1.0 / static_cast<double>(n);
      primes_.push_back(n);
    }
    pi_[n] = count;
    recip_[n] = sum;
  }

  // B = gamma + sum_p (log(1 - 1/p) + 1/p). The summand is about -1/(2p^2),
  // so the tail beyond the sieve is close to -1/(2 L log L).
  double acc = 0.0;
  for (auto it = primes_.rbegin(); it != primes_.rend(); ++it) {
    const double p = static_cast<double>(*it);
    acc += std::log1p(-1.0 / p) + 1.0 / p;
  }
  const double L = static_cast<double>(limit);
  mertens_ = std::numbers::egamma + acc - 1.0 / (2.0 * L * std::log(L));
}

bool PrimeTable::is_prime(std::int64_t n) const {
  if (n > limit_) throw CapacityError(fmt::format("{} exceeds sieve limit {}", n, limit_));
  return n >= 2 && !composite_[n];
}

std::int64_t PrimeTable::prime_count(double x) const {
  if (x < 0.0) throw DomainError("prime_count: x must be nonnegative");
  if (x > static_cast<double>(limit_))
    throw CapacityError(fmt::format("prime_count: {} exceeds sieve limit {}", x, limit_));
  return pi_[static_cast<std::size_t>(std::floor(x))];
}

std::int64_t PrimeTable::prime_count_by_scan(std::int64_t x) const {
  if (x > limit_) throw CapacityError("prime_count_by_scan: beyond sieve limit");
  std::int64_t c = 0;
  for (std::int64_t n = 2; n <= x; ++n) c += composite_[n] ? 0 : 1;
  return c;
}

double PrimeTable::reciprocal_sum(double x) const {
  if (x > static_cast<double>(limit_)) throw CapacityError("reciprocal_sum: beyond sieve limit");
  if (x < 2.0) return 0.0;
  return recip_[static_cast<std::size_t>(std::floor(x))];
}

std::vector<std::int64_t> PrimeTable::primes_in(double lo, double hi) const {
  if (hi > static_cast<double>(limit_)) throw CapacityError("primes_in: beyond sieve limit");
  std::vector<std::int64_t> out;
  auto first = std::upper_bound(primes_.begin(), primes_.end(), lo,
                                [](double v, std::int64_t p) { return v < static_cast<double>(p); });
  for (auto it = first; it != primes_.end() && static_cast<double>(*it) <= hi; ++it)
    out.push_back(*it);
  return out;
}

const PrimeTable& default_table() {
  static const PrimeTable table(kDefaultSieveLimit);
  return table;
}

namespace {

double rs_lower(double x) { return x / (std::log(x) - 0.5); }
double rs_upper(double x) {
  const double lx = std::log(x);
  return x / lx * (1.0 + 1.5 / lx);
}

}  // namespace

RosserSchoenfeldReport verify_rosser_schoenfeld(const PrimeTable& table, double x_min,
                                                double x_max, std::int64_t step) {
  if (x_min < 68.0 || !(x_min < x_max) || step < 1)
    throw HypothesisError("verify_rosser_schoenfeld: need 68 <= x_min < x_max and step >= 1");
  if (x_max > static_cast<double>(table.limit()))
    throw CapacityError("verify_rosser_schoenfeld: x_max beyond sieve limit");

  RosserSchoenfeldReport rep;
  rep.min_lower_slack = rep.min_upper_slack = INFINITY;

  auto check = [&](std::int64_t n) {
    const double x = static_cast<double>(n);
    const double pi = static_cast<double>(table.prime_count(x));
    const double up = rs_upper(x) - pi;
    // pi is constant on [n, n+1) while the lower bound increases, so the
    // binding value is the limit at n+1.
    const double x_right = std::min(x + 1.0, x_max);
    const double lo_at = x_right > x ? rs_lower(x_right) : rs_lower(x);
    const double lo = pi - lo_at;
    const bool strict_point = rs_lower(x) < pi;
    if (up <= 0.0) throw VerificationFailure(fmt::format("upper prime-count bound fails at x={}", n));
    if (lo < 0.0 || !strict_point)
      throw VerificationFailure(fmt::format("lower prime-count bound fails near x={}", n));
    ++rep.points_checked;
    if (lo < rep.min_lower_slack) {
      rep.min_lower_slack = lo;
      rep.worst_lower_x = x;
    }
    if (up < rep.min_upper_slack) {
      rep.min_upper_slack = up;
      rep.worst_upper_x = x;
    }
  };

  const auto lo_n = static_cast<std::int64_t>(std::ceil(x_min));
  const auto hi_n = static_cast<std::int64_t>(std::floor(x_max));
  for (std::int64_t n = lo_n; n <= hi_n; n += step) check(n);
  if (step > 1) {
    for (std::int64_t p : table.primes_in(x_min, x_max)) {
      check(p);
      if (p - 1 >= lo_n) check(p - 1);
    }
  }
  return rep;
}

double mertens_deviation(const PrimeTable& table, double x) {
  if (x < 286.0) throw HypothesisError("mertens_deviation: requires x >= 286");
  return table.reciprocal_sum(x) - std::log(std::log(x)) - table.mertens_constant();
}

MertensReport verify_mertens(const PrimeTable& table, double x_min, double x_max) {
  if (x_min < 286.0) throw HypothesisError("verify_mertens: requires x >= 286");
  MertensReport rep;
  const auto primes = table.primes_in(x_min - 1.0, x_max);
  auto check = [&](double x) {
    const double lx = std::log(x);
    const double ratio = std::fabs(mertens_deviation(table, x)) * 2.0 * lx * lx;
    ++rep.points_checked;
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.worst_x = x;
    }
    if (ratio > 1.0) throw VerificationFailure(fmt::format("Mertens bound fails at x={}", x));
  };
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const double p = static_cast<double>(primes[i]);
    if (p < x_min) continue;
    check(p);
    // Just before the next jump the sum is unchanged while log log x grew.
    const double next = i + 1 < primes.size() ? static_cast<double>(primes[i + 1]) : x_max;
    const double before = std::nextafter(std::min(next, x_max), 0.0);
    if (before > p) check(before);
  }
  return rep;
}

bool primes_in_dyadic_interval(const PrimeTable& table, std::int64_t n_primes) {
  const double N = static_cast<double>(n_primes);
  const double x = 2.0 * N * std::log(N);
  return table.prime_count(2.0 * x) - table.prime_count(x) >= n_primes;
}

bool is_smooth_member(const PrimeTable& table, std::int64_t n, double R) {
  if (n < 1) return false;
  for (std::int64_t p : table.primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    const double pd = static_cast<double>(p);
    if (pd * pd <= R || pd > R) return false;
    while (n % p == 0) n /= p;
  }
  if (n > 1) {
    const double pd = static_cast<double>(n);
    if (pd * pd <= R || pd > R) return false;
  }
  return true;
}

std::vector<std::int64_t> enumerate_smooth(const PrimeTable& table, const SmoothSetSpec& spec,
                                           std::int64_t guard) {
  if (spec.P < 1.0 || spec.R < 2.0) throw DomainError("enumerate_smooth: need P >= 1 and R >= 2");
  const auto bound = static_cast<std::int64_t>(std::floor(spec.P));
  const auto primes = table.primes_in(std::sqrt(spec.R), spec.R);
  std::vector<std::int64_t> out;

  // Primes are taken in nondecreasing order so each product appears once.
  auto dfs = [&](auto&& self, std::size_t start, std::int64_t value) -> void {
    for (std::size_t i = start; i < primes.size(); ++i) {
      if (primes[i] > bound / value) break;
      const std::int64_t next = value * primes[i];
      out.push_back(next);
      if (static_cast<std::int64_t>(out.size()) > guard)
        throw CapacityError("enumerate_smooth: member count exceeds guard");
      self(self, i, next);
    }
  };
  if (spec.include_one) out.push_back(1);
  dfs(dfs, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> filter_smooth(const PrimeTable& table, const SmoothSetSpec& spec) {
  const auto bound = static_cast<std::int64_t>(std::floor(spec.P));
  std::vector<std::int64_t> out;
  for (std::int64_t n = spec.include_one ? 1 : 2; n <= bound; ++n)
    if (is_smooth_member(table, n, spec.R)) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t q) {
  if (q < 1) throw DomainError("euler_phi: q must be positive");
  std::int64_t result = q;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    result -= result / p;
  }
  if (q > 1) result -= result / q;
  return result;
}

SmoothCountSanity smooth_count_sanity(const PrimeTable& table, double R, double u,
                                      double delta) {
  SmoothCountSanity s;
  s.R = R;
  s.u = u;
  const double P = std::pow(R, u);
  s.count = static_cast<std::int64_t>(enumerate_smooth(table, {P, R, true}).size());
  const double w = std::floor(u / (1.0 - delta));
  s.lower_bound = std::pow(delta, w) / std::tgamma(w + 2.0) * P / std::log(R);
  s.upper_bound = P * std::pow(2.0 / u, u);
  return s;
}

}  // namespace vinozeta::nt
