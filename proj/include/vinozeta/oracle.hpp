// Exact brute-force counts for tiny instances of the Diophantine systems
// behind Vinogradov's integral, and checks of the elementary inequalities
// relating them.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vinozeta::oracle {

/// 128-bit integer that throws on overflow instead of wrapping.
using Int = boost::multiprecision::checked_int128_t;
using BigInt = boost::multiprecision::cpp_int;

/// Equations sum_i (x_i^j - y_i^j) = target_j for h <= j <= k with all
/// variables drawn from `variables`.
struct SystemSpec {
  int s = 1;
  int k = 1;
  int h = 1;
  std::vector<std::int64_t> variables;
  std::int64_t guard = 10'000'000;           // max |B|^s for the frequency method
  std::int64_t direct_guard = 1'000'000'000;  // max |B|^{2s} for direct enumeration

  static SystemSpec interval(int s, int k, int h, std::int64_t P);
  void validate() const;
};

/// Target vector indexed by j - h; empty means the zero vector.
using Target = std::vector<Int>;

/// Counts solutions by enumerating all 2s-tuples.
Int brute_J_direct(const SystemSpec& spec, const Target& target = {});

/// Power-sum vectors (sum_i x_i^j)_{h<=j<=k} of all s-tuples with their
/// multiplicities.
std::map<Target, std::int64_t> power_sum_frequencies(const SystemSpec& spec);

/// Counts solutions as sum_v n(v) n(v - target).
Int brute_J_frequency(const SystemSpec& spec, const Target& target = {});

/// Both methods; throws VerificationFailure when they disagree.
Int brute_J(const SystemSpec& spec, const Target& target = {});

struct Check {
  std::string name;
  bool holds = false;
};

struct ChainReport {
  Int J = 0;
  std::vector<Check> checks;
  bool all_hold() const;
};

/// For B = [1, P] checks: sum over targets of J(P; h) equals Q^{2s};
/// J(P; h) <= J; the number of targets is at most (2s)^k Q^{k(k+1)/2};
/// Q^{2s} <= (2s)^k Q^{k(k+1)/2} J; J >= Q^s; and for 2 <= h <= k,
/// J_{s,k,h} <= s^{h-1} P^{h(h-1)/2} J. Throws VerificationFailure naming
/// the first failing inequality.
ChainReport verify_bounds_chain(int s, int k, std::int64_t P);

struct ZrdReport {
  std::int64_t targets_checked = 0;
  Int zero_count = 0;
  Int max_nonzero = 0;
};

/// Checks J(target) <= J(0) for every reachable target. Throws
/// VerificationFailure on violation.
ZrdReport verify_zrd(const SystemSpec& spec);

/// Polynomials Psi_1..Psi_k with Psi_j = 0 for j <= d and, for j > d, degree
/// j - d and leading coefficient (j!/(j-d)!) 2^m T.
struct PolySystem {
  int k = 1;
  int d = 0;
  std::int64_t T = 1;
  int m = 0;
  std::vector<std::vector<BigInt>> coeffs;  // coeffs[j-1][e]: coefficient of z^e in Psi_j

  static PolySystem monomials(int k);
  static PolySystem random(int k, int d, std::int64_t T, int m, std::mt19937_64& rng);
  /// Throws DomainError when the system is not of type (d, T).
  void validate() const;
};

struct DetReport {
  BigInt det = 0;
  BigInt formula = 0;
  bool magnitude_equal = false;
  bool sign_equal = false;
};

/// det(Psi_j'(z_i)) against (2^m T)^{k-d} prod_j j!/(j-d-1)! prod_{i<j}(z_i - z_j).
/// Throws VerificationFailure when the magnitudes differ.
DetReport det_identity_check(const PolySystem& poly, const std::vector<std::int64_t>& z);

/// Exact determinant by fraction-free elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a);

struct Monomial {
  std::int64_t coef = 0;
  std::vector<int> exps;
};

struct Polynomial {
  std::vector<Monomial> terms;
  int degree() const;
};

struct CongruenceCase {
  std::string name;
  std::int64_t p = 2;
  int s_exp = 1;
  std::vector<Polynomial> polys;  // d polynomials in d variables
};

struct CongruenceReport {
  std::int64_t count = 0;
  std::int64_t bound = 0;  // product of degrees
};

/// Counts x in [1, p^s]^d with all f_j(x) = 0 mod p^s and Jacobian prime
/// to p, and checks count <= k_1 ... k_d. Throws VerificationFailure when the
/// bound fails and CapacityError when p^{sd} > 10^6.
CongruenceReport congruence_count_check(const CongruenceCase& c);

/// Small systems used by the verification suite.
std::vector<CongruenceCase> standard_congruence_cases();

}  // namespace vinozeta::oracle
