#include "mzv/eval_finite.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

Residue mul_mod(Residue a, Residue b, std::uint64_t p) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t parse_u64(std::string_view text, std::size_t offset) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("expected a nonnegative integer in prime range", offset);
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) throw DomainError(std::to_string(primes_[i]) + " is not prime");
    if (i > 0 && primes_[i] <= primes_[i - 1]) {
      throw DomainError("prime list must be strictly ascending");
    }
  }
}

PrimeSet PrimeSet::range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return PrimeSet(std::move(out));
}

PrimeSet PrimeSet::parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::uint64_t p = parse_u64(text, 0);
    return range(p, p);
  }
  const std::uint64_t lo = parse_u64(text.substr(0, dots), 0);
  const std::uint64_t hi = parse_u64(text.substr(dots + 2), dots + 2);
  if (lo > hi) throw DomainError("empty prime range " + std::string(text));
  return range(lo, hi);
}

ModPEvaluator::ModPEvaluator(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  inv_.assign(p, 0);
  if (p > 1) inv_[1] = 1;
  // inv(i) = -(p / i) * inv(p mod i)
  for (std::uint64_t i = 2; i < p; ++i) {
    inv_[i] = (p - mul_mod(p / i, inv_[p % i], p)) % p;
  }
}

Residue ModPEvaluator::mzv(const Index& k) {
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  if (k.empty()) return cache_.emplace(k, 1 % p_).first->second;
  const std::size_t d = k.depth();
  const int max_part = *std::max_element(k.begin(), k.end());
  std::vector<Residue> level(d, 0);
  std::vector<Residue> inv_pow(static_cast<std::size_t>(max_part) + 1);
  for (std::uint64_t m = 1; m < p_; ++m) {
    inv_pow[0] = 1;
    for (std::size_t j = 1; j < inv_pow.size(); ++j) inv_pow[j] = mul_mod(inv_pow[j - 1], inv_[m], p_);
    for (std::size_t t = 0; t < d; ++t) {
      const Residue inner = t + 1 < d ? level[t + 1] : 1;
      level[t] = (level[t] + mul_mod(inv_pow[static_cast<std::size_t>(k[t])], inner, p_)) % p_;
    }
  }
  return cache_.emplace(k, level[0]).first->second;
}

Residue ModPEvaluator::rational(const Rational& q) const {
  const mpz_class p(static_cast<unsigned long>(p_));
  const mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw BadPrimeError("p = " + std::to_string(p_) + " divides the denominator of " + q.get_str(),
                        static_cast<unsigned long>(p_));
  }
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  const Residue n = num.get_ui();
  const Residue dn = den.get_ui();
  return mul_mod(n, inv_[dn], p_);
}

Residue ModPEvaluator::combo(const ZetaCombo& c) {
  Residue total = 0;
  for (const auto& [k, coef] : c.terms()) {
    total = (total + mul_mod(rational(coef), mzv(k), p_)) % p_;
  }
  return total;
}

Residue eval_fmzv_mod_p(const Index& k, std::uint64_t p) { return ModPEvaluator(p).mzv(k); }

FiniteEval eval_fmzv(const Index& k, const PrimeSet& ps) {
  FiniteEval out;
  for (std::uint64_t p : ps.primes()) out.residues[p] = eval_fmzv_mod_p(k, p);
  return out;
}

Residue eval_combo_mod_p(const ZetaCombo& c, std::uint64_t p) { return ModPEvaluator(p).combo(c); }

VerificationReport verify_finite(const IdentityInstance& inst, const PrimeSet& ps) {
  if (inst.kind() != SymbolKind::finite) {
    throw DomainError("the finite backend checks zeta_F identities only");
  }
  const ZetaCombo diff = inst.difference();
  const int weight = inst.weight();
  VerificationReport rep;
  rep.backend = Backend::finite;
  for (std::uint64_t p : ps.primes()) {
    if (!PrimeSet::admits(p, weight)) {
      rep.skipped.push_back({static_cast<unsigned long>(p), "weight"});
      continue;
    }
    ModPEvaluator ev(p);
    Residue r = 0;
    try {
      // A denominator clash on either side disqualifies p even if it cancels in lhs - rhs.
      for (const ZetaCombo* side : {&inst.lhs, &inst.rhs}) {
        for (const auto& [k, coef] : side->terms()) ev.rational(coef);
      }
      r = ev.combo(diff);
    } catch (const BadPrimeError&) {
      rep.skipped.push_back({static_cast<unsigned long>(p), "denominator"});
      continue;
    }
    rep.primes_tested.push_back(static_cast<unsigned long>(p));
    if (r != 0) rep.failures.push_back({static_cast<unsigned long>(p), static_cast<unsigned long>(r)});
  }
  if (rep.primes_tested.empty()) {
    throw ConfigError("no admitted primes: need p - 1 > " + std::to_string(weight) +
                      " and p coprime to all denominators");
  }
  rep.status = rep.failures.empty() ? VerifyStatus::pass : VerifyStatus::fail;
  return rep;
}

}  // namespace mzv
