#ifndef MZV_ERRORS_HPP
#define MZV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

/// Index text that does not match the `k1,k2,...` grammar.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A value outside the mathematical domain of an operation (part < 1, r < depth, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation needs k_1 >= 2 (convergent series / dual index).
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// L_x^{-1} applied to a word that does not begin with x.
class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The prime divides a coefficient denominator, so the combo has no residue there.
class BadPrimeError : public std::domain_error {
 public:
  BadPrimeError(const std::string& what, unsigned long prime)
      : std::domain_error(what), prime_(prime) {}

  unsigned long prime() const noexcept { return prime_; }

 private:
  unsigned long prime_;
};

/// Verification could not run as configured (e.g. no admitted primes).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mzv

#endif  // MZV_ERRORS_HPP
