#include "mzv/eval_real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

/// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + compensation; }
};

}  // namespace

double mzv_tail_bound(const Index& k, long n) {
  if (k.empty()) return 0.0;
  const double nd = static_cast<double>(n);
  const double k1 = k[0];
  return 2.0 * std::pow(1.0 + std::log(nd), static_cast<double>(k.depth()) - 1.0) *
         std::pow(nd, 1.0 - k1) / (k1 - 1.0);
}

RealEval eval_mzv(const Index& k, long n) {
  if (n < 2) throw DomainError("truncation cutoff must be >= 2");
  if (k.empty()) return RealEval{1.0, 0.0, n};
  if (!k.admissible()) {
    throw AdmissibilityError("zeta(" + format_index(k) + ") diverges: need k_1 >= 2");
  }
  const std::size_t d = k.depth();
  const int max_part = *std::max_element(k.begin(), k.end());
  // level[t] accumulates the nested sum over n_t > ... > n_d with n_t <= current m.
  std::vector<CompensatedSum> level(d);
  std::vector<double> inv_pow(static_cast<std::size_t>(max_part) + 1);
  for (long m = 1; m < n; ++m) {
    const double inv = 1.0 / static_cast<double>(m);
    inv_pow[0] = 1.0;
    for (std::size_t j = 1; j < inv_pow.size(); ++j) inv_pow[j] = inv_pow[j - 1] * inv;
    // Outer levels first so each reads the inner sum over strictly smaller m.
    for (std::size_t t = 0; t < d; ++t) {
      const double inner = t + 1 < d ? level[t + 1].value() : 1.0;
      level[t].add(inv_pow[static_cast<std::size_t>(k[t])] * inner);
    }
  }
  return RealEval{level[0].value(), mzv_tail_bound(k, n), n};
}

const RealEval& RealEvaluator::mzv(const Index& k) {
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  return cache_.emplace(k, eval_mzv(k, n_)).first->second;
}

RealEval RealEvaluator::combo(const ZetaCombo& c) {
  if (c.kind() != SymbolKind::real) {
    throw DomainError("the real backend evaluates zeta symbols, not zeta_F");
  }
  for (const auto& [k, coef] : c.terms()) {
    if (!k.empty() && !k.admissible()) {
      throw AdmissibilityError("zeta(" + format_index(k) + ") diverges: need k_1 >= 2");
    }
  }
  CompensatedSum value;
  double tail = 0.0;
  for (const auto& [k, coef] : c.terms()) {
    const RealEval& e = mzv(k);
    const double cf = coef.get_d();
    value.add(cf * e.value);
    tail += std::fabs(cf) * e.tail_bound;
  }
  return RealEval{value.value(), tail, n_};
}

VerificationReport RealEvaluator::verify(const IdentityInstance& inst) {
  const ZetaCombo diff = inst.difference();
  const RealEval e = combo(diff);
  VerificationReport rep;
  rep.backend = Backend::real;
  rep.trunc_n = n_;
  rep.residual = e.value;
  rep.tolerance = e.tail_bound + kRoundingAllowance * static_cast<double>(diff.size());
  for (const auto& [k, coef] : diff.terms()) {
    const RealEval& t = mzv(k);
    rep.terms.push_back(TermDiagnostic{k, coef, t.value, t.tail_bound});
  }
  rep.status = std::fabs(rep.residual) <= rep.tolerance ? VerifyStatus::pass : VerifyStatus::fail;
  return rep;
}

RealEval eval_combo(const ZetaCombo& c, long n) { return RealEvaluator(n).combo(c); }

VerificationReport verify_real(const IdentityInstance& inst, long n) {
  return RealEvaluator(n).verify(inst);
}

}  // namespace mzv
