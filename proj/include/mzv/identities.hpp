#ifndef MZV_IDENTITIES_HPP
#define MZV_IDENTITIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/word.hpp"
#include "mzv/zeta_combo.hpp"

namespace mzv {

enum class Theorem {
  height_one,         ///< zeta(k+1, 1^{r-1}) as an alternating sum over depths
  main,               ///< generalisation to an index k
  main_algebraic,     ///< same identity, produced from the word-algebra expansion
  finite,             ///< zeta_F counterpart with leading-ones strings
  finite_algebraic,   ///< same, via L_x conjugation
  ohno,               ///< Ohno relations (m = 0: duality)
  ohno_finite,        ///< Ohno-type relations with Hoffman's dual
  derivation,         ///< Z(d_l w) = 0, w in h^0
  derivation_finite,  ///< Z_F(L_x^{-1} d_l L_x w) = 0, w in h^1
};

std::string to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view tag);
/// zeta_F identities are checked mod p, the rest numerically.
SymbolKind symbol_kind_of(Theorem t);
const std::vector<Theorem>& all_theorems();

/// One named parameter of a generated instance.
using ParamValue = std::variant<int, Index, Word>;

struct Provenance {
  Theorem theorem = Theorem::main;
  std::vector<std::pair<std::string, ParamValue>> params;
};

/// lhs = rhs. Relation families (derivation) put the relation in lhs and leave rhs empty.
struct IdentityInstance {
  ZetaCombo lhs;
  ZetaCombo rhs;
  Provenance provenance;

  SymbolKind kind() const noexcept { return lhs.kind(); }
  /// lhs - rhs.
  ZetaCombo difference() const { return lhs - rhs; }
  /// Largest weight on either side.
  int weight() const noexcept;
};

IdentityInstance gen_height_one(int k, int r);

/// Throws DomainError unless r >= dep(k) >= 1.
IdentityInstance gen_main(const Index& k, int r);
IdentityInstance gen_finite(const Index& k, int r);

/// Throws AdmissibilityError for non-admissible k.
IdentityInstance gen_ohno(const Index& k, int m);
IdentityInstance gen_ohno_finite(const Index& k, int m);

/// Z(d_l(w)) for w in h^0; throws DomainError otherwise.
ZetaCombo gen_derivation(int l, const Word& w);
/// Z_F(L_x^{-1} d_l L_x(w)) for w in h^1; throws DomainError otherwise.
ZetaCombo gen_derivation_finite(int l, const Word& w);

/// The derivation relations wrapped as instances with an empty rhs.
IdentityInstance derivation_instance(int l, const Word& w);
IdentityInstance derivation_finite_instance(int l, const Word& w);

/// The generalised theorem rebuilt from word-algebra maps: the lhs from
/// beta_{k+r} tau sigma tau alpha(z_k), the rhs from the e_{i,j} expansion of
/// beta_{k+r} sigma alpha(z_k). Both carry the common (-1)^d sign removed.
IdentityInstance gen_main_algebraic(const Index& k, int r);
IdentityInstance gen_finite_algebraic(const Index& k, int r);

/// (-1)^d beta_{k+r} sigma alpha(z_{k_1} ... z_{k_d}) written out term by term:
/// factors (-x^e y) for the first k_i - 1 slots of each part (with x^0 y read
/// as -x) and x^e y, e >= 1, for the last slot.
NcPoly sigma_alpha_expansion(const Index& k, int r);

/// zeta_S^*(k) with harmonic-regularized constant terms; supported on admissible indices.
ZetaCombo sym_mzv_star(const Index& k);

}  // namespace mzv

#endif  // MZV_IDENTITIES_HPP
