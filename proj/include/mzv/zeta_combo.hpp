#ifndef MZV_ZETA_COMBO_HPP
#define MZV_ZETA_COMBO_HPP

#include <cstddef>
#include <map>
#include <string>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// Which family of symbols a combination is written in: zeta or zeta_F.
enum class SymbolKind { real, finite };

std::string to_string(SymbolKind kind);

/// Display order for zeta symbols: weight, then depth, then reverse lexicographic
/// (so zeta(5,2) precedes zeta(4,3) precedes zeta(2,5)).
struct CanonicalIndexOrder {
  bool operator()(const Index& a, const Index& b) const;
};

/// Formal Q-linear combination of zeta symbols. Zero coefficients are never stored.
class ZetaCombo {
 public:
  using Terms = std::map<Index, Rational, CanonicalIndexOrder>;

  explicit ZetaCombo(SymbolKind kind = SymbolKind::real) : kind_(kind) {}

  SymbolKind kind() const noexcept { return kind_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Adds coef * symbol(k), merging with an existing term.
  void add(const Index& k, const Rational& coef);
  Rational coefficient(const Index& k) const;

  ZetaCombo& operator+=(const ZetaCombo& other);
  ZetaCombo& operator-=(const ZetaCombo& other);
  ZetaCombo& operator*=(const Rational& scale);
  friend ZetaCombo operator+(ZetaCombo a, const ZetaCombo& b) { return a += b; }
  friend ZetaCombo operator-(ZetaCombo a, const ZetaCombo& b) { return a -= b; }
  friend ZetaCombo operator*(const Rational& s, ZetaCombo a) { return a *= s; }

  /// Largest weight among the terms, 0 when empty.
  int max_weight() const noexcept;

  friend bool operator==(const ZetaCombo& a, const ZetaCombo& b) {
    return a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

 private:
  SymbolKind kind_;
  Terms terms_;
};

}  // namespace mzv

#endif  // MZV_ZETA_COMBO_HPP
