#include "mzv/zeta_combo.hpp"

#include <algorithm>

#include "mzv/errors.hpp"

namespace mzv {

std::string to_string(SymbolKind kind) {
  return kind == SymbolKind::real ? "real" : "finite";
}

bool CanonicalIndexOrder::operator()(const Index& a, const Index& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  return b < a;
}

void ZetaCombo::add(const Index& k, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ZetaCombo::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

ZetaCombo& ZetaCombo::operator+=(const ZetaCombo& other) {
  if (other.kind_ != kind_) throw DomainError("cannot combine zeta and zeta_F symbols");
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

ZetaCombo& ZetaCombo::operator-=(const ZetaCombo& other) {
  if (other.kind_ != kind_) throw DomainError("cannot combine zeta and zeta_F symbols");
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

ZetaCombo& ZetaCombo::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scale;
  return *this;
}

int ZetaCombo::max_weight() const noexcept {
  int w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, k.weight());
  return w;
}

}  // namespace mzv
