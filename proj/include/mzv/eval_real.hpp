#ifndef MZV_EVAL_REAL_HPP
#define MZV_EVAL_REAL_HPP

#include <map>
#include <utility>

#include "mzv/identities.hpp"
#include "mzv/index.hpp"
#include "mzv/report.hpp"
#include "mzv/zeta_combo.hpp"

namespace mzv {

inline constexpr long kDefaultTrunc = 1'000'000;
/// Per-term floating rounding allowance added to the tail bound in verify_real.
inline constexpr double kRoundingAllowance = 1e-12;

/// Truncated value of a series together with a bound on the discarded tail.
struct RealEval {
  double value = 0.0;
  double tail_bound = 0.0;
  long trunc_n = 0;
};

/// 2 (1 + ln N)^{d-1} N^{1-k_1} / (k_1 - 1) for an admissible index.
double mzv_tail_bound(const Index& k, long n);

/// Sum over N > n_1 > ... > n_d >= 1 by one ascending sweep with compensated
/// accumulation at each nesting level. Throws AdmissibilityError unless k_1 >= 2.
/// The empty index evaluates to exactly 1.
RealEval eval_mzv(const Index& k, long n = kDefaultTrunc);

/// Memoizing evaluator for a fixed cutoff. Not thread safe; use one per thread.
class RealEvaluator {
 public:
  explicit RealEvaluator(long n = kDefaultTrunc) : n_(n) {}

  long trunc_n() const noexcept { return n_; }
  const RealEval& mzv(const Index& k);
  RealEval combo(const ZetaCombo& c);
  VerificationReport verify(const IdentityInstance& inst);

 private:
  long n_;
  std::map<Index, RealEval> cache_;
};

/// Coefficient-weighted sum; tail_bound = sum of |coef| * term tail bounds.
/// Throws DomainError for zeta_F combos, AdmissibilityError for divergent symbols.
RealEval eval_combo(const ZetaCombo& c, long n = kDefaultTrunc);

/// residual = value of lhs - rhs, tolerance = its tail bound plus
/// kRoundingAllowance per term.
VerificationReport verify_real(const IdentityInstance& inst, long n = kDefaultTrunc);

}  // namespace mzv

#endif  // MZV_EVAL_REAL_HPP
