#ifndef MZV_REPORT_HPP
#define MZV_REPORT_HPP

#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

enum class VerifyStatus { pass, fail };
enum class Backend { real, finite };

std::string to_string(VerifyStatus s);
std::string to_string(Backend b);

/// Per-symbol diagnostics for the real backend.
struct TermDiagnostic {
  Index index;
  Rational coef;
  double value = 0.0;
  double tail_bound = 0.0;
};

struct SkippedPrime {
  unsigned long prime = 0;
  std::string reason;  ///< "weight" (p - 1 <= wt) or "denominator"
};

struct PrimeFailure {
  unsigned long prime = 0;
  unsigned long residue = 0;
};

/// Outcome of checking lhs - rhs: |residual| <= tolerance on the real backend,
/// a zero residue at every admitted prime on the finite backend.
struct VerificationReport {
  VerifyStatus status = VerifyStatus::fail;
  Backend backend = Backend::real;

  // real backend
  double residual = 0.0;
  double tolerance = 0.0;
  long trunc_n = 0;
  std::vector<TermDiagnostic> terms;

  // finite backend
  std::vector<unsigned long> primes_tested;
  std::vector<SkippedPrime> skipped;
  std::vector<PrimeFailure> failures;

  bool passed() const noexcept { return status == VerifyStatus::pass; }
};

}  // namespace mzv

#endif  // MZV_REPORT_HPP
