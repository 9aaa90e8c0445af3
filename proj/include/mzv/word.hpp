#ifndef MZV_WORD_HPP
#define MZV_WORD_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"
#include "mzv/zeta_combo.hpp"

namespace mzv {

/// Monomial over {x, y}. The empty word is the unit 1.
class Word {
 public:
  Word() = default;
  /// Letters must be 'x' or 'y'; throws DomainError otherwise.
  explicit Word(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Empty or ends in y.
  bool in_h1() const noexcept;
  /// Empty or (starts with x and ends in y).
  bool in_h0() const noexcept;

  Word operator+(const Word& other) const { return Word(letters_ + other.letters_, {}); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Degree first, then lexicographic with x < y.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.letters() < b.letters();
  }
};

/// z_{k_1} ... z_{k_d} with z_k = x^{k-1} y.
Word word_from_index(const Index& k);
/// Inverse of word_from_index; throws DomainError unless w is nonempty and ends in y.
Index index_from_word(const Word& w);

/// Element of Q<x,y>: finite map from words to nonzero rationals.
class NcPoly {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  NcPoly() = default;
  NcPoly(const Word& w, const Rational& coef = 1) { add(w, coef); }
  /// Constant polynomial c * 1.
  static NcPoly constant(const Rational& c) { return NcPoly(Word(), c); }
  /// Convenience: NcPoly::from("xy") == xy.
  static NcPoly from(std::string_view letters, const Rational& coef = 1) {
    return NcPoly(Word(std::string(letters)), coef);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Word& w) const;
  /// Largest word degree; 0 for the zero polynomial.
  std::size_t degree() const noexcept;

  void add(const Word& w, const Rational& coef);

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  NcPoly& operator*=(const Rational& scale);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

/// Concatenation product, bilinear.
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
/// Concatenation product keeping only words of degree <= max_deg.
NcPoly nc_mul_trunc(const NcPoly& a, const NcPoly& b, std::size_t max_deg);

/// Anti-automorphism x <-> y (reverse the word, swap letters).
NcPoly tau(const NcPoly& a);
/// Ring endomorphism x -> x - xy, y -> -xy.
NcPoly alpha(const NcPoly& a);

enum class DerivationKind {
  del,  ///< d_l(x) = x z^{l-1} y, d_l(y) = -x z^{l-1} y, z = x + y
  D,    ///< D_l(x) = 0, D_l(y) = x^l y
};

/// The derivation of the given kind and order l >= 1, via Leibniz over letter positions.
NcPoly derivation(DerivationKind kind, int l, const NcPoly& a);

/// Degree-m homogeneous part.
NcPoly beta_proj(std::size_t m, const NcPoly& a);

/// sigma(x) = x, sigma(y) = (1 + x + x^2 + ...) y, keeping words of degree <= max_deg.
NcPoly sigma_trunc(const NcPoly& a, std::size_t max_deg);

enum class LxDirection { prepend, strip };

/// Left multiplication by x, or its inverse on words beginning with x
/// (throws DivisibilityError otherwise).
NcPoly lx_shift(LxDirection direction, const NcPoly& a);

/// Harmonic (stuffle) product on h^1; throws DomainError for words outside h^1.
NcPoly stuffle(const NcPoly& a, const NcPoly& b);

/// Replaces each h^1 word by its index; throws DomainError otherwise.
/// The empty word maps to the empty index, the symbol whose value is 1.
ZetaCombo to_zeta_combo(const NcPoly& a, SymbolKind kind = SymbolKind::real);

std::string to_string(const Word& w);
/// e.g. "xyy - xxy", "0" for zero; terms in WordOrder.
std::string to_string(const NcPoly& a);

}  // namespace mzv

#endif  // MZV_WORD_HPP
