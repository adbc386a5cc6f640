#include "vinozeta/expsum_large.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "vinozeta/error.hpp"
#include "vinozeta/parallel.hpp"
#include "vinozeta/vino_complete.hpp"

namespace vinozeta::large {

void LargeLambdaConfig::validate() const {
  if (!(mu1 > mu2 && mu2 > 0.0 && mu1 + mu2 < 1.0))
    throw DomainError("need mu1 > mu2 > 0 and mu1 + mu2 < 1");
  if (!(Y > 0.0 && xi > 0.0 && goal > 0.0)) throw DomainError("Y, xi and goal must be positive");
  if (sigma && !(*sigma > 0.0)) throw DomainError("sigma must be positive");
}

double h_sum_exact(double lam, int g, int h, double mu1, double mu2) {
  const double nu = 1.0 - mu1 - mu2;
  double sum = 0.0;
  for (int j = h; j <= g; ++j) {
    const double jj = j;
    sum += std::min({jj * mu2, jj - lam, lam - jj * nu});
  }
  return sum;
}

HCoefficients h_coefficients(double phi, double gamma, double mu1, double mu2) {
  const double nu = 1.0 - mu1 - mu2;
  HCoefficients c;
  c.H2 = phi + gamma - 0.5 * gamma * gamma - 0.5 * nu * phi * phi -
         (2.0 - mu1 - mu2) / (2.0 * (1.0 - mu1) * (1.0 - mu2));
  c.H1 = 0.5 * gamma - 0.5 * phi * nu;
  c.H0 = (2.0 - mu1 - mu2) / 8.0;
  return c;
}

double h_lower(double lam, double phi, double gamma, double mu1, double mu2) {
  const HCoefficients c = h_coefficients(phi, gamma, mu1, mu2);
  return c.H2 * lam * lam + c.H1 * lam - c.H0;
}

HPiecewise h_piecewise(double lam, int g, int h, double mu1, double mu2) {
  const double gg = g, hh = h;
  HPiecewise p;
  p.m1 = std::floor(lam / (1.0 - mu1));
  p.m2 = std::floor(lam / (1.0 - mu2));
  p.Z0 = 0.5 * ((p.m1 * p.m1 + p.m1) * (1.0 - mu1) + (p.m2 * p.m2 + p.m2) * (1.0 - mu2) -
                hh * hh + hh - (1.0 - mu1 - mu2) * (gg * gg + gg));
  p.Z1 = hh + gg - p.m1 - p.m2 - 1.0;
  return p;
}

double log_c2(int g, int h, std::int64_t s, double xi, double D) {
  const double gg = g, hh = h, ss = static_cast<double>(s), tt = g - h + 1;
  const double reta = xi * std::pow(gg, 1.5);
  const double lg = std::log(gg);
  return ss * ss / tt + 10.5 * xi * xi * tt * gg * gg * lg * lg / D -
         ss * std::log(0.1 * reta) * ((reta + hh) * std::pow(1.0 - 1.0 / hh, ss / tt) - hh);
}

CalcResult calc_interval(double lam1, double lam2, int g, int h, std::int64_t s,
                         const LargeLambdaConfig& cfg) {
  if (!(lam1 > 80.0 && lam1 < lam2 && lam2 < 300.0))
    throw DomainError("calc_interval: requires 80 < lam1 < lam2 < 300");
  if (s < 1 || g - h + 1 < 1) throw DomainError("calc_interval: requires s >= 1 and t >= 1");
  const double mu1 = cfg.mu1, mu2 = cfg.mu2;
  const double lam = 0.5 * (lam1 + lam2);

  CalcResult c;
  c.k = static_cast<int>(lam / (1.0 - mu1 - mu2) + 0.000003);
  const double kk = c.k, k2 = kk * kk, logk = std::log(kk);
  const auto band = complete::published_rho_theta(c.k);
  c.rho = band.rho;
  c.theta = band.theta;
  c.r = static_cast<std::int64_t>(c.rho * k2 + 1.0);
  const double rr = static_cast<double>(c.r), ss = static_cast<double>(s);
  const double gg = g, hh = h, tt = g - h + 1;

  const HPiecewise hp = h_piecewise(lam, g, h, mu1, mu2);
  if (hp.Z1 != -1.0 && hp.Z1 != 0.0 && hp.Z1 != 1.0)
    throw DomainError(fmt::format("calc_interval: Z1 = {} is not in {{-1, 0, 1}}", hp.Z1));
  c.H = hp.Z1 < 0.0 ? hp.Z0 + lam2 * hp.Z1 : hp.Z0 + lam1 * hp.Z1;

  const double reta = cfg.xi * std::pow(gg, 1.5);
  c.E1 = 0.001 * k2;
  c.E2 = 0.5 * tt * (tt - 1.0) + hh * tt * std::exp(-ss / (hh * tt)) + ss * ss / (2.0 * tt * reta);
  c.E3 = std::log(cfg.Y * lam1 * lam1) / (7.5 * cfg.Y * lam1 * lam1 * lam1 * lam1);
  c.exponent = (-c.E3 + (1.0 / (2.0 * rr * ss)) * (c.H - mu1 * c.E1 - mu2 * c.E2)) * lam1 * lam1;
  c.denom_u = 1.0 / c.exponent;

  c.log_c1 = c.theta * k2 * kk * logk;
  c.log_c2 = log_c2(g, h, s, cfg.xi, cfg.D());
  c.log_c3 = 1.04 * reta * std::log(10.82 * reta);
  const double logC =
      c.log_c3 / rr + (5.0 * lam2 * std::log(lam2) + c.log_c1 + c.log_c2) / (2.0 * rr * ss);
  c.constant_c = std::exp(logC) + 1.0 / kk;
  return c;
}

std::vector<double> breakpoints(double lam_min, double lam_max, const LargeLambdaConfig& cfg) {
  const double mu1 = cfg.mu1, mu2 = cfg.mu2;
  std::vector<double> bp{lam_min, lam_max};
  const long i0 = static_cast<long>(lam_max / (1.0 - mu1 - mu2)) + 10;
  for (long i = 1; i <= i0; ++i) {
    const double w = static_cast<double>(i);
    for (double r : {w * (1.0 - mu1), w * (1.0 - mu2), (w - 0.000003) * (1.0 - mu1 - mu2)})
      if (r < lam_max && r > lam_min) bp.push_back(r);
  }
  std::stable_sort(bp.begin(), bp.end());
  return bp;
}

namespace {

LambdaIntervalResult best_on_interval(double lam1, double lam2, const LargeLambdaConfig& cfg) {
  const double lam = 0.5 * (lam1 + lam2);
  const long g0 = static_cast<long>(lam / (1.0 - cfg.mu1) + 1.0);
  const long h1 = static_cast<long>(lam / (1.0 - cfg.mu2));
  const long g_floor = cfg.strict_g_window ? 106 : 100;

  LambdaIntervalResult best;
  best.lam1 = lam1;
  best.lam2 = lam2;
  best.k = static_cast<int>(lam / (1.0 - cfg.mu1 - cfg.mu2) + 0.000003);
  double bestcon = 1.0e40;
  for (long g = g0; g <= g0 + 1; ++g) {
    for (long h = h1 - 1; h <= h1; ++h) {
      const long t = g - h + 1;
      if (g < g_floor || static_cast<double>(g) > 1.254 * lam1) continue;
      long s0, s1;
      if (cfg.sigma) {
        s0 = static_cast<long>(*cfg.sigma * static_cast<double>(h) * static_cast<double>(t) + 1.0);
        s1 = s0;
      } else {
        s0 = h * (t - 1) / 4;
        s1 = h * t / 2;
      }
      for (long s = std::max(s0, 1L); s <= s1; ++s) {
        const CalcResult c = calc_interval(lam1, lam2, static_cast<int>(g), static_cast<int>(h), s, cfg);
        if (c.exponent > 0.0 && 1.0 / c.exponent < cfg.goal && c.constant_c < bestcon) {
          bestcon = c.constant_c;
          best.feasible = true;
          best.g = static_cast<int>(g);
          best.h = static_cast<int>(h);
          best.t = static_cast<int>(t);
          best.s = s;
          best.a = static_cast<int>(g - g0);
          best.b = static_cast<int>(h1 - h);
          best.denom_u = c.denom_u;
          best.constant_c = c.constant_c;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::vector<LambdaIntervalResult> search_intervals(double lam_min, double lam_max,
                                                   const LargeLambdaConfig& cfg, int jobs) {
  cfg.validate();
  if (!(lam_min > 80.0 && lam_min < lam_max && lam_max < 300.0))
    throw DomainError("search_intervals: requires 80 < lam_min < lam_max < 300");
  const std::vector<double> bp = breakpoints(lam_min, lam_max, cfg);
  std::vector<std::pair<double, double>> intervals;
  for (std::size_t j = 0; j + 1 < bp.size(); ++j)
    if (bp[j + 1] > bp[j]) intervals.emplace_back(bp[j], bp[j + 1]);
  return parallel_map(intervals.size(), jobs, [&](std::size_t i) {
    return best_on_interval(intervals[i].first, intervals[i].second, cfg);
  });
}

namespace {
constexpr double kMu1 = 0.1905;
constexpr double kMu2 = 0.1603;
constexpr double kSigma52 = 0.3299;
constexpr double kRho52 = 3.21432;
}  // namespace

double lemma52_f(double gamma, double phi, double lam) {
  const double k1 = 1.0 / 0.6492 + 0.000003 / lam;
  const HCoefficients hc = h_coefficients(phi, gamma, kMu1, kMu2);
  const double d = phi - gamma;
  const double inner = -hc.H2 / d + 1.001 * kMu2 * (0.5 * d + gamma * std::exp(-kSigma52));
  return (0.001 * kMu1 / d + inner / (k1 * k1)) / (2.002 * kSigma52 * gamma);
}

Lemma52Result lemma52_verify(int grid_n, double lam) {
  if (grid_n < 2) throw DomainError("lemma52_verify: grid_n must be at least 2");
  const double half = 1.0 / 440.0;
  auto node = [&](double centre, int i) {
    return centre + half * (2.0 * i / static_cast<double>(grid_n - 1) - 1.0);
  };
  Lemma52Result res;
  res.max_f = -INFINITY;
  for (int i = 0; i < grid_n; ++i) {
    const double gamma = node(1.1818, i);
    for (int j = 0; j < grid_n; ++j) {
      const double phi = node(1.2453, j);
      const double f = lemma52_f(gamma, phi, lam);
      if (f > res.max_f) {
        res.max_f = f;
        res.argmax_gamma = gamma;
        res.argmax_phi = phi;
      }
    }
  }
  return res;
}

double lemma52_assembled(double lam, double max_f) {
  if (lam < 220.0) throw HypothesisError("lemma52_assembled: requires lambda >= 220");
  return 1.52e-7 + (max_f + 0.0008 / std::sqrt(lam) + 0.021334 / lam) / kRho52;
}

}  // namespace vinozeta::large
