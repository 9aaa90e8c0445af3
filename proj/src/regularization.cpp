#include "mzv/regularization.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mzv/errors.hpp"

namespace mzv {

NcPoly RegPoly::coefficient(int power) const {
  auto it = coefficients_.find(power);
  return it == coefficients_.end() ? NcPoly() : it->second;
}

int RegPoly::t_degree() const noexcept {
  return coefficients_.empty() ? 0 : coefficients_.rbegin()->first;
}

void RegPoly::add(int power, const NcPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(power, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

RegPoly& RegPoly::operator+=(const RegPoly& other) {
  for (const auto& [n, c] : other.coefficients_) add(n, c);
  return *this;
}

RegPoly& RegPoly::operator-=(const RegPoly& other) {
  for (const auto& [n, c] : other.coefficients_) add(n, -c);
  return *this;
}

RegPoly& RegPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& [n, c] : coefficients_) c *= scale;
  return *this;
}

RegPoly RegPoly::times_t() const {
  RegPoly out;
  for (const auto& [n, c] : coefficients_) out.coefficients_.emplace(n + 1, c);
  return out;
}

RegPoly reg_mul(const RegPoly& a, const RegPoly& b) {
  RegPoly out;
  for (const auto& [m, ca] : a.coefficients()) {
    for (const auto& [n, cb] : b.coefficients()) out.add(m + n, stuffle(ca, cb));
  }
  return out;
}

namespace {

class Regularizer {
 public:
  const RegPoly& word(const Word& w) {
    if (auto it = memo_.find(w.letters()); it != memo_.end()) return it->second;
    RegPoly result = compute(w);
    return memo_.emplace(w.letters(), std::move(result)).first->second;
  }

 private:
  RegPoly compute(const Word& w) {
    // w = z_1^n u with u admissible or empty.
    const std::string& s = w.letters();
    const auto n = static_cast<std::size_t>(
        std::find_if(s.begin(), s.end(), [](char c) { return c != 'y'; }) - s.begin());
    if (n == 0) return RegPoly(NcPoly(w));
    // z_1 * (z_1^{n-1} u) = n z_1^n u + R, where every word of R has fewer than
    // n leading z_1 factors. Hence reg(z_1^n u) = (T reg(z_1^{n-1} u) - reg(R)) / n.
    const Word rest(s.substr(1));
    NcPoly remainder = stuffle(NcPoly::from("y"), NcPoly(rest));
    remainder.add(w, -Rational(static_cast<long>(n)));
    RegPoly out = word(rest).times_t();
    for (const auto& [v, c] : remainder.terms()) {
      RegPoly term = word(v);
      term *= c;
      out -= term;
    }
    out *= Rational(1, static_cast<long>(n));
    return out;
  }

  std::unordered_map<std::string, RegPoly> memo_;
};

}  // namespace

RegPoly reg_star(const NcPoly& a) {
  for (const auto& [w, c] : a.terms()) {
    if (!w.in_h1()) throw DomainError("reg_star: word '" + to_string(w) + "' is not in h^1");
  }
  Regularizer reg;
  RegPoly out;
  for (const auto& [w, c] : a.terms()) {
    RegPoly term = reg.word(w);
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace mzv
