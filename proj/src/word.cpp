#include "mzv/word.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'x' && c != 'y') {
      throw DomainError(std::string("words are over {x, y}, got '") + c + "'");
    }
  }
}

bool Word::in_h1() const noexcept { return letters_.empty() || letters_.back() == 'y'; }

bool Word::in_h0() const noexcept {
  return letters_.empty() || (letters_.front() == 'x' && letters_.back() == 'y');
}

Word word_from_index(const Index& k) {
  std::string s;
  s.reserve(static_cast<std::size_t>(k.weight()));
  for (int part : k) {
    s.append(static_cast<std::size_t>(part - 1), 'x');
    s.push_back('y');
  }
  return Word(std::move(s));
}

Index index_from_word(const Word& w) {
  if (w.empty() || w.letters().back() != 'y') {
    throw DomainError("word '" + to_string(w) + "' does not end in y");
  }
  std::vector<int> parts;
  int run = 1;
  for (char c : w.letters()) {
    if (c == 'x') {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  return Index(std::move(parts));
}

// NcPoly

Rational NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t NcPoly::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void NcPoly::add(const Word& w, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scale;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) { return nc_mul(a, b); }

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) out.add(u + v, cu * cv);
  }
  return out;
}

NcPoly nc_mul_trunc(const NcPoly& a, const NcPoly& b, std::size_t max_deg) {
  NcPoly out;
  for (const auto& [u, cu] : a.terms()) {
    if (u.degree() > max_deg) break;  // WordOrder sorts by degree first
    for (const auto& [v, cv] : b.terms()) {
      if (u.degree() + v.degree() > max_deg) break;
      out.add(u + v, cu * cv);
    }
  }
  return out;
}

namespace {

/// Applies the endomorphism determined by letter images, capped at max_deg.
NcPoly substitute(const NcPoly& a, const NcPoly& img_x, const NcPoly& img_y,
                  std::size_t max_deg) {
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    NcPoly acc = NcPoly::constant(c);
    for (char letter : w.letters()) {
      acc = nc_mul_trunc(acc, letter == 'x' ? img_x : img_y, max_deg);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

/// z^{n} = (x + y)^n: every word of length n, coefficient 1.
NcPoly z_power(int n) {
  NcPoly out = NcPoly::constant(1);
  const NcPoly z = NcPoly::from("x") + NcPoly::from("y");
  for (int i = 0; i < n; ++i) out = nc_mul(out, z);
  return out;
}

}  // namespace

NcPoly tau(const NcPoly& a) {
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    std::string s(w.letters().rbegin(), w.letters().rend());
    for (char& ch : s) ch = ch == 'x' ? 'y' : 'x';
    out.add(Word(std::move(s)), c);
  }
  return out;
}

NcPoly alpha(const NcPoly& a) {
  const NcPoly img_x = NcPoly::from("x") - NcPoly::from("xy");
  const NcPoly img_y = NcPoly::from("xy", -1);
  return substitute(a, img_x, img_y, 2 * a.degree());
}

NcPoly derivation(DerivationKind kind, int l, const NcPoly& a) {
  if (l < 1) throw DomainError("derivation order must be >= 1");
  NcPoly img_x;
  NcPoly img_y;
  if (kind == DerivationKind::del) {
    img_x = nc_mul(nc_mul(NcPoly::from("x"), z_power(l - 1)), NcPoly::from("y"));
    img_y = -img_x;
  } else {
    img_y = NcPoly::from(std::string(static_cast<std::size_t>(l), 'x') + "y");
  }
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    const std::string& s = w.letters();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const NcPoly& img = s[i] == 'x' ? img_x : img_y;
      if (img.is_zero()) continue;
      const Word prefix(s.substr(0, i));
      const Word suffix(s.substr(i + 1));
      for (const auto& [v, cv] : img.terms()) out.add(prefix + v + suffix, c * cv);
    }
  }
  return out;
}

NcPoly beta_proj(std::size_t m, const NcPoly& a) {
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    if (w.degree() == m) out.add(w, c);
  }
  return out;
}

NcPoly sigma_trunc(const NcPoly& a, std::size_t max_deg) {
  const NcPoly img_x = NcPoly::from("x");
  NcPoly img_y;
  for (std::size_t i = 0; i < max_deg; ++i) {
    img_y.add(Word(std::string(i, 'x') + "y"), 1);
  }
  return substitute(a, img_x, img_y, max_deg);
}

NcPoly lx_shift(LxDirection direction, const NcPoly& a) {
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    if (direction == LxDirection::prepend) {
      out.add(Word("x" + w.letters()), c);
    } else {
      if (w.empty() || w.letters().front() != 'x') {
        throw DivisibilityError("L_x^{-1}: word '" + to_string(w) + "' does not begin with x");
      }
      out.add(Word(w.letters().substr(1)), c);
    }
  }
  return out;
}

namespace {

using Parts = std::vector<int>;
using StuffleMemo = std::map<std::pair<Parts, Parts>, std::map<Parts, Rational>>;

const std::map<Parts, Rational>& stuffle_parts(const Parts& u, const Parts& v,
                                               StuffleMemo& memo) {
  auto key = std::make_pair(u, v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::map<Parts, Rational> out;
  if (u.empty()) {
    out[v] = 1;
  } else if (v.empty()) {
    out[u] = 1;
  } else {
    const Parts u_tail(u.begin() + 1, u.end());
    const Parts v_tail(v.begin() + 1, v.end());
    const auto prepend_all = [&out](int head, const std::map<Parts, Rational>& rest) {
      for (const auto& [p, c] : rest) {
        Parts q;
        q.reserve(p.size() + 1);
        q.push_back(head);
        q.insert(q.end(), p.begin(), p.end());
        out[q] += c;
      }
    };
    // z_j u * z_k v = z_j (u * z_k v) + z_k (z_j u * v) + z_{j+k} (u * v)
    prepend_all(u.front(), stuffle_parts(u_tail, v, memo));
    prepend_all(v.front(), stuffle_parts(u, v_tail, memo));
    prepend_all(u.front() + v.front(), stuffle_parts(u_tail, v_tail, memo));
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

Parts parts_of(const Word& w) {
  if (!w.in_h1()) {
    throw DomainError("stuffle operand word '" + to_string(w) + "' is not in h^1");
  }
  return w.empty() ? Parts{} : index_from_word(w).parts();
}

}  // namespace

NcPoly stuffle(const NcPoly& a, const NcPoly& b) {
  for (const auto& [w, c] : a.terms()) parts_of(w);
  for (const auto& [w, c] : b.terms()) parts_of(w);
  StuffleMemo memo;
  NcPoly out;
  for (const auto& [u, cu] : a.terms()) {
    const Parts pu = parts_of(u);
    for (const auto& [v, cv] : b.terms()) {
      const auto& prod = stuffle_parts(pu, parts_of(v), memo);
      for (const auto& [p, c] : prod) out.add(word_from_index(Index(p)), cu * cv * c);
    }
  }
  return out;
}

ZetaCombo to_zeta_combo(const NcPoly& a, SymbolKind kind) {
  ZetaCombo out(kind);
  for (const auto& [w, c] : a.terms()) {
    if (!w.in_h1()) {
      throw DomainError("word '" + to_string(w) + "' is not in h^1");
    }
    out.add(w.empty() ? Index() : index_from_word(w), c);
  }
  return out;
}

std::string to_string(const Word& w) { return w.empty() ? "1" : w.letters(); }

std::string to_string(const NcPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1 || w.empty()) {
      s += mag.get_str();
      if (!w.empty()) s += "*";
    }
    if (!w.empty()) s += w.letters();
  }
  return s;
}

}  // namespace mzv
