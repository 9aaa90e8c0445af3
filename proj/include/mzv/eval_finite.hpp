#ifndef MZV_EVAL_FINITE_HPP
#define MZV_EVAL_FINITE_HPP

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "mzv/identities.hpp"
#include "mzv/index.hpp"
#include "mzv/report.hpp"
#include "mzv/zeta_combo.hpp"

namespace mzv {

using Residue = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Ascending list of primes used for a congruence sweep.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws DomainError if an entry is not prime or the list is not strictly ascending.
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  /// All primes in [lo, hi].
  static PrimeSet range(std::uint64_t lo, std::uint64_t hi);
  /// Parses "a..b" (inclusive).
  static PrimeSet parse_range(std::string_view text);
  /// The default sweep, primes in [11, 1009].
  static PrimeSet default_sweep() { return range(11, 1009); }

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool empty() const noexcept { return primes_.empty(); }

  /// The floor rule: p is admitted for an identity of weight w iff p - 1 > w.
  static bool admits(std::uint64_t p, int weight) {
    return p - 1 > static_cast<std::uint64_t>(weight);
  }

 private:
  std::vector<std::uint64_t> primes_;
};

/// Residues of one symbol across primes.
struct FiniteEval {
  std::map<std::uint64_t, Residue> residues;
};

/// sum_{p > n_1 > ... > n_d >= 1} 1 / (n_1^{k_1} ... n_d^{k_d}) mod p in one sweep.
/// The empty index gives 1. Throws DomainError when p is not prime.
Residue eval_fmzv_mod_p(const Index& k, std::uint64_t p);

FiniteEval eval_fmzv(const Index& k, const PrimeSet& ps);

/// Evaluator bound to one prime: owns the inverse table and memoizes symbols.
class ModPEvaluator {
 public:
  explicit ModPEvaluator(std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }
  Residue inverse(std::uint64_t n) const { return inv_[n % p_]; }
  Residue mzv(const Index& k);
  /// Throws BadPrimeError when p divides a coefficient denominator.
  Residue combo(const ZetaCombo& c);
  /// coef mod p; throws BadPrimeError when p divides the denominator.
  Residue rational(const Rational& q) const;

 private:
  std::uint64_t p_;
  std::vector<Residue> inv_;
  std::map<Index, Residue> cache_;
};

Residue eval_combo_mod_p(const ZetaCombo& c, std::uint64_t p);

/// Checks lhs - rhs = 0 mod p for every admitted prime; reports skipped primes
/// (weight floor, denominators) and every failing prime. Results are gathered in
/// ascending prime order. Throws ConfigError when no prime is admitted and
/// DomainError for zeta (non-finite) instances.
VerificationReport verify_finite(const IdentityInstance& inst, const PrimeSet& ps);

}  // namespace mzv

#endif  // MZV_EVAL_FINITE_HPP
