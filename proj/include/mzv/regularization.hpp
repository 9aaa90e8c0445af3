#ifndef MZV_REGULARIZATION_HPP
#define MZV_REGULARIZATION_HPP

#include <map>

#include "mzv/word.hpp"

namespace mzv {

/// Polynomial in the regularization variable T with coefficients in h^0.
/// coefficients[n] is the coefficient of T^n; zero coefficients are not stored.
class RegPoly {
 public:
  using Coefficients = std::map<int, NcPoly>;

  RegPoly() = default;
  explicit RegPoly(const NcPoly& constant) { add(0, constant); }

  const Coefficients& coefficients() const noexcept { return coefficients_; }
  NcPoly coefficient(int power) const;
  /// Highest T-power present; 0 for the zero polynomial.
  int t_degree() const noexcept;
  /// Value at T = 0.
  NcPoly constant_term() const { return coefficient(0); }

  void add(int power, const NcPoly& coef);
  RegPoly& operator+=(const RegPoly& other);
  RegPoly& operator-=(const RegPoly& other);
  RegPoly& operator*=(const Rational& scale);
  /// Multiplication by T.
  RegPoly times_t() const;

  friend bool operator==(const RegPoly&, const RegPoly&) = default;

 private:
  Coefficients coefficients_;
};

/// Product in h^0[T] where coefficient words multiply by stuffle.
RegPoly reg_mul(const RegPoly& a, const RegPoly& b);

/// Harmonic regularization: writes a in h^0[z_1] under the stuffle product and
/// substitutes z_1 -> T. Uses the convention zeta*(1; T) = T. Throws DomainError
/// for words outside h^1.
RegPoly reg_star(const NcPoly& a);

}  // namespace mzv

#endif  // MZV_REGULARIZATION_HPP
