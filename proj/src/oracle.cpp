#include "vinozeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "vinozeta/error.hpp"

namespace vinozeta::oracle {

SystemSpec SystemSpec::interval(int s, int k, int h, std::int64_t P) {
  SystemSpec spec;
  spec.s = s;
  spec.k = k;
  spec.h = h;
  for (std::int64_t x = 1; x <= P; ++x) spec.variables.push_back(x);
  return spec;
}

namespace {

// |B|^e, saturating at a value above any guard.
std::int64_t tuple_count(std::size_t base, int e) {
  double v = std::pow(static_cast<double>(base), e);
  return v > 9e18 ? INT64_MAX : static_cast<std::int64_t>(v);
}

// pw[i][j-h] = variables[i]^j.
std::vector<Target> power_table(const SystemSpec& spec) {
  std::vector<Target> pw;
  try {
    for (std::int64_t x : spec.variables) {
      Target row;
      Int v = 1;
      for (int j = 1; j <= spec.k; ++j) {
        v *= Int(x);
        if (j >= spec.h) row.push_back(v);
      }
      pw.push_back(std::move(row));
    }
  } catch (const std::overflow_error&) {
    throw CapacityError("power sums exceed 128-bit capacity");
  }
  return pw;
}

Target normalised(const SystemSpec& spec, const Target& target) {
  const std::size_t len = static_cast<std::size_t>(spec.k - spec.h + 1);
  if (target.empty()) return Target(len, Int(0));
  if (target.size() != len) throw DomainError("target length must be k - h + 1");
  return target;
}

// J(target) for every reachable target: sum over pairs of n(v) n(v').
std::map<Target, Int> all_target_counts(const std::map<Target, std::int64_t>& freq) {
  std::map<Target, Int> out;
  for (const auto& [v, nv] : freq) {
    for (const auto& [w, nw] : freq) {
      Target diff(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - w[i];
      out[diff] += Int(nv) * Int(nw);
    }
  }
  return out;
}

}  // namespace

void SystemSpec::validate() const {
  if (s < 1 || k < 1) throw DomainError("need s >= 1 and k >= 1");
  if (h < 1 || h > k) throw DomainError("need 1 <= h <= k");
  if (variables.empty()) throw DomainError("variable set is empty");
}

Int brute_J_direct(const SystemSpec& spec, const Target& target_in) {
  spec.validate();
  if (tuple_count(spec.variables.size(), 2 * spec.s) > spec.direct_guard)
    throw CapacityError("direct enumeration exceeds guard");
  const Target target = normalised(spec, target_in);
  const auto pw = power_table(spec);
  const std::size_t len = target.size();
  const int depth = 2 * spec.s;
  Target sums(len, Int(0));
  std::int64_t count = 0;

  try {
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == depth) {
        if (sums == target) ++count;
        return;
      }
      const bool plus = pos < spec.s;
      for (const Target& row : pw) {
        for (std::size_t j = 0; j < len; ++j) sums[j] += plus ? row[j] : -row[j];
        self(self, pos + 1);
        for (std::size_t j = 0; j < len; ++j) sums[j] -= plus ? row[j] : -row[j];
      }
    };
    rec(rec, 0);
  } catch (const std::overflow_error&) {
    throw CapacityError("power sums exceed 128-bit capacity");
  }
  return Int(count);
}

std::map<Target, std::int64_t> power_sum_frequencies(const SystemSpec& spec) {
  spec.validate();
  if (tuple_count(spec.variables.size(), spec.s) > spec.guard)
    throw CapacityError("enumeration exceeds guard");
  const auto pw = power_table(spec);
  const std::size_t len = static_cast<std::size_t>(spec.k - spec.h + 1);
  const std::size_t nvar = pw.size();
  std::map<Target, std::int64_t> freq;
  std::vector<std::size_t> idx(static_cast<std::size_t>(spec.s), 0);
  try {
    while (true) {
      Target v(len, Int(0));
      for (std::size_t i : idx)
        for (std::size_t j = 0; j < len; ++j) v[j] += pw[i][j];
      ++freq[v];
      std::size_t p = 0;
      while (p < idx.size() && ++idx[p] == nvar) idx[p++] = 0;
      if (p == idx.size()) break;
    }
  } catch (const std::overflow_error&) {
    throw CapacityError("power sums exceed 128-bit capacity");
  }
  return freq;
}

Int brute_J_frequency(const SystemSpec& spec, const Target& target_in) {
  const Target target = normalised(spec, target_in);
  const auto freq = power_sum_frequencies(spec);
  Int total = 0;
  try {
    for (const auto& [v, n] : freq) {
      Target w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] - target[i];
      const auto it = freq.find(w);
      if (it != freq.end()) total += Int(n) * Int(it->second);
    }
  } catch (const std::overflow_error&) {
    throw CapacityError("count exceeds 128-bit capacity");
  }
  return total;
}

Int brute_J(const SystemSpec& spec, const Target& target) {
  const Int a = brute_J_direct(spec, target);
  const Int b = brute_J_frequency(spec, target);
  if (a != b)
    throw VerificationFailure(fmt::format("direct count {} differs from frequency count {}",
                                          a.str(), b.str()));
  return a;
}

bool ChainReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

ChainReport verify_bounds_chain(int s, int k, std::int64_t P) {
  if (P < 1) throw DomainError("verify_bounds_chain: requires P >= 1");
  const SystemSpec spec = SystemSpec::interval(s, k, 1, P);
  ChainReport rep;
  rep.J = brute_J(spec);
  const BigInt J(rep.J.str());
  const BigInt Q = P;
  const BigInt two_s = 2 * s;
  const BigInt q2s = boost::multiprecision::pow(Q, 2 * s);
  const BigInt box_bound =
      boost::multiprecision::pow(two_s, k) * boost::multiprecision::pow(Q, k * (k + 1) / 2);

  auto add = [&](std::string name, bool holds) {
    rep.checks.push_back({name, holds});
    if (!holds)
      throw VerificationFailure(fmt::format("{} fails at s={}, k={}, P={}", name, s, k, P));
  };

  const auto counts = all_target_counts(power_sum_frequencies(spec));
  BigInt total = 0;
  bool dominated = true, in_box = true;
  for (const auto& [target, c] : counts) {
    total += BigInt(c.str());
    if (c > rep.J) dominated = false;
    for (int j = 1; j <= k; ++j) {
      const BigInt hj(target[static_cast<std::size_t>(j - 1)].str());
      const BigInt lim = BigInt(s) * (boost::multiprecision::pow(Q, j) - 1);
      if (abs(hj) > lim) in_box = false;
    }
  }
  BigInt box_size = 1;
  for (int j = 1; j <= k; ++j) box_size *= 2 * BigInt(s) * (boost::multiprecision::pow(Q, j) - 1) + 1;

  add("sum over targets equals Q^{2s}", total == q2s);
  add("J(P;h) <= J(P;0) for every target", dominated);
  add("targets lie in |h_j| <= s(Q^j - 1)", in_box);
  add("box size <= (2s)^k Q^{k(k+1)/2}", box_size <= box_bound);
  add("Q^{2s} <= (2s)^k Q^{k(k+1)/2} J", q2s <= box_bound * J);
  add("J >= Q^s", J >= boost::multiprecision::pow(Q, s));
  add("J >= (2s)^{-k} Q^{2s-k(k+1)/2}", J * box_bound >= q2s);
  for (int h = 2; h <= k; ++h) {
    const SystemSpec inc = SystemSpec::interval(s, k, h, P);
    const BigInt Jh(brute_J(inc).str());
    const BigInt rhs = boost::multiprecision::pow(BigInt(s), h - 1) *
                       boost::multiprecision::pow(Q, h * (h - 1) / 2) * J;
    add(fmt::format("J_(s,k,{}) <= s^{{h-1}} P^{{h(h-1)/2}} J", h), Jh <= rhs);
  }
  return rep;
}

ZrdReport verify_zrd(const SystemSpec& spec) {
  const auto counts = all_target_counts(power_sum_frequencies(spec));
  ZrdReport rep;
  const Target zero(static_cast<std::size_t>(spec.k - spec.h + 1), Int(0));
  rep.zero_count = counts.at(zero);
  for (const auto& [target, c] : counts) {
    ++rep.targets_checked;
    if (target == zero) continue;
    if (c > rep.max_nonzero) rep.max_nonzero = c;
    if (c > rep.zero_count)
      throw VerificationFailure(fmt::format("nonzero target has {} solutions, zero target {}",
                                            c.str(), rep.zero_count.str()));
  }
  return rep;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt leading_coefficient(int j, int d, std::int64_t T, int m) {
  return factorial(j) / factorial(j - d) * (BigInt(1) << m) * T;
}

}  // namespace

PolySystem PolySystem::monomials(int k) {
  PolySystem p;
  p.k = k;
  for (int j = 1; j <= k; ++j) {
    std::vector<BigInt> c(static_cast<std::size_t>(j + 1), 0);
    c.back() = 1;
    p.coeffs.push_back(std::move(c));
  }
  return p;
}

PolySystem PolySystem::random(int k, int d, std::int64_t T, int m, std::mt19937_64& rng) {
  if (d < 0 || d >= k || T < 1 || m < 0) throw DomainError("need 0 <= d < k, T >= 1, m >= 0");
  PolySystem p;
  p.k = k;
  p.d = d;
  p.T = T;
  p.m = m;
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int j = 1; j <= k; ++j) {
    if (j <= d) {
      p.coeffs.emplace_back();
      continue;
    }
    std::vector<BigInt> c(static_cast<std::size_t>(j - d + 1));
    for (auto& x : c) x = coef(rng);
    c.back() = leading_coefficient(j, d, T, m);
    p.coeffs.push_back(std::move(c));
  }
  return p;
}

void PolySystem::validate() const {
  if (d < 0 || d >= k || T < 1 || m < 0 || static_cast<int>(coeffs.size()) != k)
    throw DomainError("malformed polynomial system");
  for (int j = 1; j <= k; ++j) {
    const auto& c = coeffs[static_cast<std::size_t>(j - 1)];
    if (j <= d) {
      if (std::any_of(c.begin(), c.end(), [](const BigInt& x) { return x != 0; }))
        throw DomainError(fmt::format("Psi_{} must vanish", j));
      continue;
    }
    if (static_cast<int>(c.size()) != j - d + 1 || c.back() != leading_coefficient(j, d, T, m))
      throw DomainError(fmt::format("Psi_{} has the wrong degree or leading coefficient", j));
  }
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (a[c][c] == 0) {
      std::size_t r = c + 1;
      while (r < n && a[r][c] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[c], a[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i)
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

DetReport det_identity_check(const PolySystem& poly, const std::vector<std::int64_t>& z) {
  poly.validate();
  const int n = poly.k - poly.d;
  if (static_cast<int>(z.size()) != n) throw DomainError("z must have k - d entries");
  std::vector<std::vector<BigInt>> mat(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) {
      const auto& co = poly.coeffs[static_cast<std::size_t>(poly.d + c)];
      BigInt v = 0, zp = 1;
      for (std::size_t e = 1; e < co.size(); ++e) {
        v += BigInt(static_cast<long>(e)) * co[e] * zp;
        zp *= z[static_cast<std::size_t>(i)];
      }
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = v;
    }
  }
  DetReport rep;
  rep.det = bareiss_determinant(mat);
  BigInt f = boost::multiprecision::pow(BigInt(poly.T) << poly.m, n);
  for (int j = poly.d + 1; j <= poly.k; ++j) f *= factorial(j) / factorial(j - poly.d - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f *= BigInt(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
  rep.formula = f;
  rep.magnitude_equal = abs(rep.det) == abs(rep.formula);
  rep.sign_equal = rep.det == rep.formula;
  if (!rep.magnitude_equal)
    throw VerificationFailure(fmt::format("|det| = {} but the product formula gives {}",
                                          rep.det.str(), rep.formula.str()));
  return rep;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    int sum = 0;
    for (int e : t.exps) sum += e;
    deg = std::max(deg, sum);
  }
  return deg;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t eval_mod(const Polynomial& f, const std::vector<std::int64_t>& x, std::int64_t m) {
  std::int64_t acc = 0;
  for (const auto& t : f.terms) {
    std::int64_t v = mod(t.coef, m);
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (int e = 0; e < t.exps[i]; ++e) v = v * mod(x[i], m) % m;
    acc = (acc + v) % m;
  }
  return acc;
}

Polynomial partial(const Polynomial& f, std::size_t var) {
  Polynomial out;
  for (const auto& t : f.terms) {
    if (var >= t.exps.size() || t.exps[var] == 0) continue;
    Monomial d = t;
    d.coef *= t.exps[var];
    --d.exps[var];
    out.terms.push_back(std::move(d));
  }
  return out;
}

}  // namespace

CongruenceReport congruence_count_check(const CongruenceCase& c) {
  const std::size_t d = c.polys.size();
  if (d == 0) throw DomainError("congruence system is empty");
  for (const auto& f : c.polys)
    for (const auto& t : f.terms)
      if (t.exps.size() != d) throw DomainError("each monomial needs one exponent per variable");
  std::int64_t modulus = 1;
  for (int i = 0; i < c.s_exp; ++i) modulus *= c.p;
  if (std::pow(static_cast<double>(modulus), static_cast<double>(d)) > 1e6)
    throw CapacityError("congruence enumeration exceeds 10^6 points");

  std::vector<std::vector<Polynomial>> jac(d, std::vector<Polynomial>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) jac[j][i] = partial(c.polys[j], i);

  CongruenceReport rep;
  rep.bound = 1;
  for (const auto& f : c.polys) rep.bound *= f.degree();

  std::vector<std::int64_t> x(d, 1);
  while (true) {
    bool root = true;
    for (const auto& f : c.polys)
      if (eval_mod(f, x, modulus) != 0) {
        root = false;
        break;
      }
    if (root) {
      std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) m[i][j] = eval_mod(jac[j][i], x, c.p);
      if (bareiss_determinant(m) % c.p != 0) ++rep.count;
    }
    std::size_t p = 0;
    while (p < d && ++x[p] > modulus) x[p++] = 1;
    if (p == d) break;
  }
  if (rep.count > rep.bound)
    throw VerificationFailure(fmt::format("{}: {} nonsingular solutions exceed {}", c.name,
                                          rep.count, rep.bound));
  return rep;
}

std::vector<CongruenceCase> standard_congruence_cases() {
  using P = Polynomial;
  const P x2{{{1, {2}}}};
  const P x2m1{{{1, {2}}, {-1, {0}}}};
  const P x3mx{{{1, {3}}, {-1, {1}}}};
  const P dx{{{1, {2, 0}}, {-1, {0, 0}}}};
  const P dy{{{1, {0, 2}}, {-4, {0, 0}}}};
  const P circle{{{1, {2, 0}}, {1, {0, 2}}, {-1, {0, 0}}}};
  const P line{{{1, {1, 0}}, {-1, {0, 1}}}};
  const P f1{{{1, {2, 0}}, {1, {0, 1}}, {-2, {0, 0}}}};
  const P f2{{{1, {1, 0}}, {1, {0, 3}}, {-3, {0, 0}}}};
  const P s1{{{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}, {-6, {0, 0, 0}}}};
  const P s2{{{1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}, {-14, {0, 0, 0}}}};
  const P s3{{{1, {3, 0, 0}}, {1, {0, 3, 0}}, {1, {0, 0, 3}}, {-36, {0, 0, 0}}}};
  return {
      {"x^2 mod 3", 3, 1, {x2}},
      {"x^2 - 1 mod 5", 5, 1, {x2m1}},
      {"x^2 - 1 mod 9", 3, 2, {x2m1}},
      {"x^3 - x mod 49", 7, 2, {x3mx}},
      {"x^2 - 1, y^2 - 4 mod 5", 5, 1, {dx, dy}},
      {"x^2 - 1, y^2 - 4 mod 25", 5, 2, {dx, dy}},
      {"x^2 + y^2 - 1, x - y mod 7", 7, 1, {circle, line}},
      {"x^2 + y - 2, x + y^3 - 3 mod 25", 5, 2, {f1, f2}},
      {"power sums of (1,2,3) mod 5", 5, 1, {s1, s2, s3}},
      {"power sums of (1,2,3) mod 7", 7, 1, {s1, s2, s3}},
  };
}

}  // namespace vinozeta::oracle
