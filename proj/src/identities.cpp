#include "mzv/identities.hpp"

#include <algorithm>
#include <array>

#include "mzv/errors.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 9> kTheoremTags{{
    {Theorem::height_one, "height-one"},
    {Theorem::main, "main"},
    {Theorem::main_algebraic, "main-algebraic"},
    {Theorem::finite, "finite"},
    {Theorem::finite_algebraic, "finite-algebraic"},
    {Theorem::ohno, "ohno"},
    {Theorem::ohno_finite, "ohno-finite"},
    {Theorem::derivation, "derivation"},
    {Theorem::derivation_finite, "derivation-finite"},
}};

Rational sign(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

void require_depth(const Index& k, int r) {
  if (k.empty()) throw DomainError("index must have depth >= 1");
  if (r < static_cast<int>(k.depth())) {
    throw DomainError("need r >= dep(k), got r = " + std::to_string(r) + " and dep = " +
                      std::to_string(k.depth()));
  }
}

/// (k_1+1, 1^{r_1-1}, ..., k_d+1, 1^{r_d-1}) for one composition r.
Index attach_ones(const Index& k, const Index& rs) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < k.depth(); ++i) {
    parts.push_back(k[i] + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(rs[i] - 1), 1);
  }
  return Index(std::move(parts));
}

/// Sum over k' refining k with dep(k') <= r and compositions r of r into dep(k')
/// parts of (-1)^{dep(k') - d} zeta(k' + r).
ZetaCombo refinement_side(const Index& k, int r, SymbolKind kind) {
  ZetaCombo out(kind);
  const int d = static_cast<int>(k.depth());
  for (const Index& kp : refinements(k)) {
    const int j = static_cast<int>(kp.depth());
    if (j > r) continue;
    const Rational s = sign(j - d);
    for (const Index& rs : compositions(r, j)) out.add(add_parts(kp, rs.parts()), s);
  }
  return out;
}

ZetaCombo ohno_shift_sum(const Index& k, int m, SymbolKind kind, bool hoffman_after) {
  ZetaCombo out(kind);
  for (const auto& eps : weak_compositions(m, static_cast<int>(k.depth()))) {
    Index shifted = add_parts(k, eps);
    out.add(hoffman_after ? hoffman_dual(shifted) : shifted, 1);
  }
  return out;
}

Word z_word(const Index& k) { return word_from_index(k); }

}  // namespace

std::string to_string(Theorem t) {
  for (const auto& [theorem, tag] : kTheoremTags) {
    if (theorem == t) return std::string(tag);
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view tag) {
  for (const auto& [theorem, name] : kTheoremTags) {
    if (name == tag) return theorem;
  }
  return std::nullopt;
}

SymbolKind symbol_kind_of(Theorem t) {
  switch (t) {
    case Theorem::finite:
    case Theorem::finite_algebraic:
    case Theorem::ohno_finite:
    case Theorem::derivation_finite:
      return SymbolKind::finite;
    default:
      return SymbolKind::real;
  }
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& [t, tag] : kTheoremTags) v.push_back(t);
    return v;
  }();
  return all;
}

int IdentityInstance::weight() const noexcept {
  return std::max(lhs.max_weight(), rhs.max_weight());
}

IdentityInstance gen_height_one(int k, int r) {
  if (k < 1 || r < 1) throw DomainError("height-one identity needs k, r >= 1");
  IdentityInstance inst{ZetaCombo(SymbolKind::real), ZetaCombo(SymbolKind::real),
                        {Theorem::height_one, {{"k", k}, {"r", r}}}};
  std::vector<int> lhs{k + 1};
  lhs.insert(lhs.end(), static_cast<std::size_t>(r - 1), 1);
  inst.lhs.add(Index(lhs), 1);
  for (int i = 1; i <= std::min(k, r); ++i) {
    const Rational s = sign(i - 1);
    for (const Index& ks : compositions(k, i)) {
      for (const Index& rs : compositions(r, i)) inst.rhs.add(add_parts(ks, rs.parts()), s);
    }
  }
  return inst;
}

IdentityInstance gen_main(const Index& k, int r) {
  require_depth(k, r);
  IdentityInstance inst{ZetaCombo(SymbolKind::real), refinement_side(k, r, SymbolKind::real),
                        {Theorem::main, {{"k", k}, {"r", r}}}};
  for (const Index& rs : compositions(r, static_cast<int>(k.depth()))) {
    inst.lhs.add(attach_ones(k, rs), 1);
  }
  return inst;
}

IdentityInstance gen_finite(const Index& k, int r) {
  require_depth(k, r);
  IdentityInstance inst{ZetaCombo(SymbolKind::finite),
                        refinement_side(k, r, SymbolKind::finite),
                        {Theorem::finite, {{"k", k}, {"r", r}}}};
  for (const Index& rs : compositions(r + 1, static_cast<int>(k.depth()) + 1)) {
    std::vector<int> parts(static_cast<std::size_t>(rs[0] - 1), 1);
    const Index tail = attach_ones(k, Index(std::vector<int>(rs.begin() + 1, rs.end())));
    parts.insert(parts.end(), tail.begin(), tail.end());
    inst.lhs.add(Index(std::move(parts)), 1);
  }
  return inst;
}

IdentityInstance gen_ohno(const Index& k, int m) {
  if (m < 0) throw DomainError("Ohno shift m must be >= 0");
  const Index kd = dual(k);  // throws for non-admissible k
  return IdentityInstance{ohno_shift_sum(k, m, SymbolKind::real, false),
                          ohno_shift_sum(kd, m, SymbolKind::real, false),
                          {Theorem::ohno, {{"k", k}, {"m", m}}}};
}

IdentityInstance gen_ohno_finite(const Index& k, int m) {
  if (m < 0) throw DomainError("Ohno shift m must be >= 0");
  const Index kv = hoffman_dual(k);  // throws for the empty index
  return IdentityInstance{ohno_shift_sum(k, m, SymbolKind::finite, false),
                          ohno_shift_sum(kv, m, SymbolKind::finite, true),
                          {Theorem::ohno_finite, {{"k", k}, {"m", m}}}};
}

ZetaCombo gen_derivation(int l, const Word& w) {
  if (!w.in_h0()) throw DomainError("derivation relation needs w in h^0, got " + to_string(w));
  return to_zeta_combo(derivation(DerivationKind::del, l, NcPoly(w)), SymbolKind::real);
}

ZetaCombo gen_derivation_finite(int l, const Word& w) {
  if (!w.in_h1()) throw DomainError("derivation relation needs w in h^1, got " + to_string(w));
  const NcPoly shifted =
      derivation(DerivationKind::del, l, lx_shift(LxDirection::prepend, NcPoly(w)));
  try {
    return to_zeta_combo(lx_shift(LxDirection::strip, shifted), SymbolKind::finite);
  } catch (const DivisibilityError& e) {
    throw std::logic_error(std::string("internal error: ") + e.what());
  }
}

IdentityInstance derivation_instance(int l, const Word& w) {
  return IdentityInstance{gen_derivation(l, w), ZetaCombo(SymbolKind::real),
                          {Theorem::derivation, {{"l", l}, {"word", w}}}};
}

IdentityInstance derivation_finite_instance(int l, const Word& w) {
  return IdentityInstance{gen_derivation_finite(l, w), ZetaCombo(SymbolKind::finite),
                          {Theorem::derivation_finite, {{"l", l}, {"word", w}}}};
}

NcPoly sigma_alpha_expansion(const Index& k, int r) {
  // One slot per unit of weight; slot_last marks the final slot of each part.
  std::vector<bool> slot_last;
  for (int part : k) {
    for (int j = 1; j <= part; ++j) slot_last.push_back(j == part);
  }
  const auto slots = static_cast<int>(slot_last.size());
  NcPoly out;
  std::vector<int> e(slot_last.size(), 0);
  // Enumerate e with sum r, e >= 1 at last slots and e >= 0 elsewhere.
  const auto emit = [&] {
    std::string letters;
    Rational coef = 1;
    for (int s = 0; s < slots; ++s) {
      if (slot_last[static_cast<std::size_t>(s)]) {
        letters.append(static_cast<std::size_t>(e[static_cast<std::size_t>(s)]), 'x');
        letters.push_back('y');
      } else if (e[static_cast<std::size_t>(s)] == 0) {
        letters.push_back('x');  // -x^0 y = -(-x) = x
      } else {
        letters.append(static_cast<std::size_t>(e[static_cast<std::size_t>(s)]), 'x');
        letters.push_back('y');
        coef = -coef;
      }
    }
    out.add(Word(std::move(letters)), coef);
  };
  const auto recurse = [&](auto&& self, int s, int remaining) -> void {
    if (s == slots) {
      if (remaining == 0) emit();
      return;
    }
    const int lo = slot_last[static_cast<std::size_t>(s)] ? 1 : 0;
    for (int v = lo; v <= remaining; ++v) {
      e[static_cast<std::size_t>(s)] = v;
      self(self, s + 1, remaining - v);
    }
  };
  recurse(recurse, 0, r);
  return out;
}

IdentityInstance gen_main_algebraic(const Index& k, int r) {
  require_depth(k, r);
  const auto degree = static_cast<std::size_t>(k.weight() + r);
  const NcPoly a = alpha(NcPoly(z_word(k)));
  const Rational s = sign(static_cast<int>(k.depth()));
  NcPoly lhs = beta_proj(degree, tau(sigma_trunc(tau(a), degree)));
  lhs *= s;
  return IdentityInstance{to_zeta_combo(lhs, SymbolKind::real),
                          to_zeta_combo(sigma_alpha_expansion(k, r), SymbolKind::real),
                          {Theorem::main_algebraic, {{"k", k}, {"r", r}}}};
}

IdentityInstance gen_finite_algebraic(const Index& k, int r) {
  require_depth(k, r);
  const auto degree = static_cast<std::size_t>(k.weight() + r);
  const NcPoly a = lx_shift(LxDirection::prepend, alpha(NcPoly(z_word(k))));
  const Rational s = sign(static_cast<int>(k.depth()));
  NcPoly lhs = lx_shift(LxDirection::strip,
                        beta_proj(degree + 1, tau(sigma_trunc(tau(a), degree + 1))));
  lhs *= s;
  return IdentityInstance{to_zeta_combo(lhs, SymbolKind::finite),
                          to_zeta_combo(sigma_alpha_expansion(k, r), SymbolKind::finite),
                          {Theorem::finite_algebraic, {{"k", k}, {"r", r}}}};
}

ZetaCombo sym_mzv_star(const Index& k) {
  if (k.empty()) throw DomainError("symmetrized value needs depth >= 1");
  NcPoly total;
  int prefix_weight = 0;
  for (std::size_t i = 0; i <= k.depth(); ++i) {
    if (i > 0) prefix_weight += k[i - 1];
    const Index left(std::vector<int>(k.parts().rend() - static_cast<long>(i), k.parts().rend()));
    const Index right(std::vector<int>(k.begin() + static_cast<long>(i), k.end()));
    const NcPoly left_ct =
        reg_star(NcPoly(left.empty() ? Word() : word_from_index(left))).constant_term();
    const NcPoly right_ct =
        reg_star(NcPoly(right.empty() ? Word() : word_from_index(right))).constant_term();
    NcPoly product = stuffle(left_ct, right_ct);
    product *= sign(prefix_weight);
    total += product;
  }
  return to_zeta_combo(total, SymbolKind::real);
}

}  // namespace mzv
