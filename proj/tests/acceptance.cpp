// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/eval_finite.hpp"
#include "mzv/eval_real.hpp"
#include "mzv/identities.hpp"
#include "mzv/regularization.hpp"
#include "mzv/serialize.hpp"

using namespace mzv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

ZetaCombo combo(SymbolKind kind, std::initializer_list<std::pair<Index, long>> terms) {
  ZetaCombo c(kind);
  for (const auto& [k, v] : terms) c.add(k, v);
  return c;
}

const std::initializer_list<std::pair<Index, long>> kExample2Rhs{
    {{6, 3}, 1},     {{5, 4}, 1},     {{4, 5}, 1},     {{5, 2, 2}, -1},    {{4, 3, 2}, -1},
    {{4, 2, 3}, -2}, {{3, 3, 3}, -2}, {{3, 2, 4}, -1}, {{2, 4, 3}, -1},    {{2, 3, 4}, -1},
    {{3, 2, 2, 2}, 1}, {{2, 3, 2, 2}, 1}, {{2, 2, 2, 3}, 1}};

std::vector<Index> indices_up_to(int max_weight) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w) {
    auto v = indices_of_weight(w);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t max_degree) {
  std::vector<Word> out{Word()};
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s += (bits >> i & 1U) ? 'y' : 'x';
      out.emplace_back(s);
    }
  }
  return out;
}

std::string describe(const IdentityInstance& inst) {
  return to_json(inst)["theorem"].get<std::string>() + " " + to_json(inst)["params"].dump();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1
void example1(Outcome& o) {
  const auto start = Clock::now();
  const IdentityInstance inst = gen_height_one(3, 4);
  const double elapsed = seconds_since(start);
  o.expect(inst.lhs == combo(SymbolKind::real, {{{4, 1, 1, 1}, 1}}), "LHS");
  o.expect(inst.rhs == combo(SymbolKind::real, {{{7}, 1},
                                               {{5, 2}, -1},
                                               {{4, 3}, -2},
                                               {{3, 4}, -2},
                                               {{2, 5}, -1},
                                               {{3, 2, 2}, 1},
                                               {{2, 3, 2}, 1},
                                               {{2, 2, 3}, 1}}),
           "RHS");
  o.expect(elapsed < 1.0, "runtime >= 1 s");
}

// 2
void example2(Outcome& o) {
  const IdentityInstance inst = gen_main(Index{3, 2}, 4);
  o.expect(inst.lhs.size() == 3 && inst.rhs.size() == 13, "term counts");
  o.expect(inst.lhs == combo(SymbolKind::real,
                             {{{4, 3, 1, 1}, 1}, {{4, 1, 3, 1}, 1}, {{4, 1, 1, 3}, 1}}),
           "LHS");
  o.expect(inst.rhs == combo(SymbolKind::real, kExample2Rhs), "RHS");
  o.expect(inst.rhs.coefficient(Index{4, 2, 3}) == -2 && inst.rhs.coefficient(Index{3, 3, 3}) == -2,
           "merged coefficients");
}

// 3
void example3(Outcome& o) {
  const IdentityInstance inst = gen_finite(Index{3, 2}, 4);
  o.expect(inst.lhs.size() == 6, "6 LHS terms");
  o.expect(inst.lhs == combo(SymbolKind::finite, {{{4, 3, 1, 1}, 1},
                                                  {{4, 1, 3, 1}, 1},
                                                  {{4, 1, 1, 3}, 1},
                                                  {{1, 4, 3, 1}, 1},
                                                  {{1, 4, 1, 3}, 1},
                                                  {{1, 1, 4, 3}, 1}}),
           "LHS");
  o.expect(inst.rhs == combo(SymbolKind::finite, kExample2Rhs), "RHS");
}

// 4
void oracle_equivalence(Outcome& o) {
  const auto start = Clock::now();
  int count = 0;
  for (const Index& k : indices_up_to(9)) {
    for (int r = static_cast<int>(k.depth()); k.weight() + r <= 10; ++r) {
      const IdentityInstance a = gen_main(k, r);
      const IdentityInstance b = gen_main_algebraic(k, r);
      o.expect(a.lhs == b.lhs && a.rhs == b.rhs, "main " + describe(a));
      const IdentityInstance c = gen_finite(k, r);
      const IdentityInstance d = gen_finite_algebraic(k, r);
      o.expect(c.lhs == d.lhs && c.rhs == d.rhs, "finite " + describe(c));
      ++count;
    }
  }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 60.0, "runtime >= 60 s");
  o.detail << (o.pass ? "" : "; ") << count << " (k, r) pairs, both theorems";
}

// 5
void real_numeric(Outcome& o) {
  RealEvaluator ev(1'000'000);
  int count = 0;
  double worst_ratio = 0.0;
  for (const Index& k : indices_up_to(7)) {
    for (int r = static_cast<int>(k.depth()); k.weight() + r <= 8; ++r) {
      const IdentityInstance inst = gen_main(k, r);
      const VerificationReport rep = ev.verify(inst);
      o.expect(rep.passed(), describe(inst));
      worst_ratio = std::max(worst_ratio, std::fabs(rep.residual) / rep.tolerance);
      ++count;
    }
  }
  const VerificationReport spot = ev.verify(gen_main(Index{3}, 4));
  o.expect(spot.passed() && spot.tolerance <= 1e-3, "spot-check tolerance (k=(3), r=4)");
  const RealEval z2 = eval_mzv(Index{2}, 1'000'000);
  o.expect(std::fabs(z2.value - 1.6449340668) <= 2e-6, "zeta(2)");
  const RealEval& z21 = ev.mzv(Index{2, 1});
  const RealEval& z3 = ev.mzv(Index{3});
  o.expect(std::fabs(z21.value - z3.value) <= z21.tail_bound + z3.tail_bound, "zeta(2,1) vs zeta(3)");
  o.detail << (o.pass ? "" : "; ") << count << " instances, spot tolerance " << std::scientific
           << std::setprecision(2) << spot.tolerance << ", worst |residual|/tolerance "
           << worst_ratio << ", |zeta(2) - 1.6449340668| = " << std::fabs(z2.value - 1.6449340668);
}

// 6
void finite_numeric(Outcome& o) {
  const auto start = Clock::now();
  const PrimeSet ps = PrimeSet::range(11, 1009);
  int count = 0;
  const auto check = [&](const IdentityInstance& inst) {
    const VerificationReport rep = verify_finite(inst, ps);
    o.expect(rep.passed() && rep.failures.empty(), describe(inst));
    ++count;
  };
  for (const Index& k : indices_up_to(7)) {
    for (int r = static_cast<int>(k.depth()); k.weight() + r <= 8; ++r) check(gen_finite(k, r));
  }
  for (const Index& k : indices_up_to(6)) {
    for (int m = 0; m <= 2; ++m) check(gen_ohno_finite(k, m));
  }
  for (const Word& w : words_up_to(6)) {
    if (!w.in_h1()) continue;
    for (int l = 1; l <= 3; ++l) check(derivation_finite_instance(l, w));
  }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 300.0, "runtime >= 5 min");
  o.detail << (o.pass ? "" : "; ") << count << " instances over " << ps.primes().size()
           << " primes in " << std::fixed << std::setprecision(1) << elapsed << " s";
}

// 7
void relation_suites(Outcome& o) {
  RealEvaluator ev(1'000'000);
  int count = 0;
  for (const Word& w : words_up_to(6)) {
    if (w.empty() || !w.in_h0()) continue;
    for (int l = 1; l <= 3; ++l) {
      const IdentityInstance inst = derivation_instance(l, w);
      o.expect(ev.verify(inst).passed(), describe(inst));
      ++count;
    }
  }
  for (const Index& k : indices_up_to(7)) {
    if (!k.admissible()) continue;
    for (int m = 0; m <= 2; ++m) {
      const IdentityInstance inst = gen_ohno(k, m);
      o.expect(ev.verify(inst).passed(), describe(inst));
      ++count;
    }
  }
  o.detail << (o.pass ? "" : "; ") << count << " instances";
}

// 8
void structural(Outcome& o) {
  for (const Index& k : indices_up_to(12)) {
    if (k.admissible()) {
      const Index kd = dual(k);
      o.expect(dual(kd) == k, "dual involution");
      o.expect(kd.weight() == k.weight() && kd.height() == k.height() &&
                   static_cast<int>(kd.depth()) == k.weight() - static_cast<int>(k.depth()),
               "dual wt/dep/ht");
    }
    const Index kv = hoffman_dual(k);
    o.expect(hoffman_dual(kv) == k && kv.weight() == k.weight(), "Hoffman dual involution");
    o.expect(parse_index(format_index(k)) == k, "parse/format");
  }
  for (const Index& k : indices_up_to(10)) {
    o.expect(refinements(k).size() == std::size_t{1} << (k.weight() - static_cast<int>(k.depth())),
             "refinement cardinality");
    o.expect(index_from_word(word_from_index(k)) == k, "word/index bijection");
  }
  const std::vector<Word> words = words_up_to(6);
  const NcPoly zsum = NcPoly::from("x") + NcPoly::from("y");
  for (int l = 1; l <= 4; ++l) {
    o.expect(derivation(DerivationKind::del, l, zsum).is_zero(), "d_l(x + y) = 0");
    o.expect(derivation(DerivationKind::del, l, NcPoly::constant(1)).is_zero(), "d_l(1) = 0");
  }
  for (const Word& a : words) {
    o.expect(tau(tau(NcPoly(a))) == NcPoly(a), "tau^2 = id");
    if (a.in_h1()) {
      for (std::size_t cap = 0; cap <= 8; ++cap) {
        o.expect(lx_shift(LxDirection::strip,
                          sigma_trunc(lx_shift(LxDirection::prepend, NcPoly(a)), cap + 1)) ==
                     sigma_trunc(NcPoly(a), cap),
                 "strip sigma prepend = sigma");
      }
    }
    if (a.degree() > 3) continue;
    for (const Word& b : words) {
      if (b.degree() > 3) continue;
      const NcPoly pa(a);
      const NcPoly pb(b);
      for (int l = 1; l <= 2; ++l) {
        o.expect(derivation(DerivationKind::del, l, pa * pb) ==
                     derivation(DerivationKind::del, l, pa) * pb +
                         pa * derivation(DerivationKind::del, l, pb),
                 "Leibniz");
      }
      o.expect(tau(pa * pb) == tau(pb) * tau(pa), "tau anti-automorphism");
    }
  }
  std::vector<Word> h1;
  for (const Word& w : words_up_to(4)) {
    if (w.in_h1()) h1.push_back(w);
  }
  for (const Word& a : h1) {
    for (const Word& b : h1) {
      const NcPoly ab = stuffle(NcPoly(a), NcPoly(b));
      o.expect(ab == stuffle(NcPoly(b), NcPoly(a)), "stuffle commutative");
      if (a.degree() + b.degree() > 6) continue;
      for (const Word& c : h1) {
        if (c.degree() > 3) continue;
        o.expect(stuffle(ab, NcPoly(c)) == stuffle(NcPoly(a), stuffle(NcPoly(b), NcPoly(c))),
                 "stuffle associative");
      }
    }
  }
}

// 9
void symmetrized(Outcome& o) {
  o.expect(sym_mzv_star(Index{1}).empty(), "zeta_S*(1) = 0");
  for (int k = 1; k <= 7; k += 2) o.expect(sym_mzv_star(Index{k}).empty(), "odd single index");
  for (const Index& k : indices_up_to(7)) {
    ZetaCombo flipped = sym_mzv_star(k.reversed());
    if (k.weight() % 2 == 1) flipped *= Rational(-1);
    o.expect(flipped == sym_mzv_star(k), "reversal antisymmetry " + format_index(k));
  }
  // Brute force: z_1 * z_2 = z_1 z_2 + z_2 z_1 + z_3, so at T = 0
  // zeta*(1,2) = -(z_1 * z_2 - z_1 z_2) = -zeta(2,1) - zeta(3), zeta*(1) = 0.
  const NcPoly z12 = NcPoly::from("yxy");
  NcPoly star12 = z12 - stuffle(NcPoly::from("y"), NcPoly::from("xy"));
  ZetaCombo oracle = to_zeta_combo(NcPoly::from("xyy"));  // i = 0: zeta(2,1)
  // i = 1: (+1) zeta*(2) zeta*(1) = 0; i = 2: (-1)^3 zeta*(1,2)
  oracle -= to_zeta_combo(star12);
  o.expect(sym_mzv_star(Index{2, 1}) == oracle, "zeta_S*(2,1) brute force");
  o.expect(oracle == combo(SymbolKind::real, {{{2, 1}, 2}, {{3}, 1}}), "2 zeta(2,1) + zeta(3)");
}

// 10
// One family, one perturbed coefficient: bump the zeta(5,2) coefficient of the
// k=(3), r=4 relation from -1 to 0 on both backends. Example 3's merged -2 on
// (4,2,3) is also bumped on the finite side.
void defect_detection(Outcome& o) {
  const Index bumped{5, 2};
  IdentityInstance real_bad = gen_main(Index{3}, 4);
  o.expect(real_bad.rhs.coefficient(bumped) == -1, "setup");
  real_bad.rhs.add(bumped, 1);
  const VerificationReport r = verify_real(real_bad, 1'000'000);
  o.expect(!r.passed(), "real backend missed the defect");

  const PrimeSet ps = PrimeSet::range(11, 1009);
  IdentityInstance finite_bad = gen_finite(Index{3}, 4);
  finite_bad.rhs.add(bumped, 1);
  const VerificationReport f = verify_finite(finite_bad, ps);
  o.expect(!f.passed(), "finite backend missed the defect");

  IdentityInstance ex3_bad = gen_finite(Index{3, 2}, 4);
  ex3_bad.rhs.add(Index{4, 2, 3}, 1);
  const VerificationReport f3 = verify_finite(ex3_bad, ps);
  o.expect(!f3.passed(), "finite backend missed the Example 3 defect");

  o.detail << (o.pass ? "" : "; ") << "real |residual| " << std::scientific << std::setprecision(2)
           << std::fabs(r.residual) << " vs tolerance " << r.tolerance << ", finite fails at "
           << f.failures.size() << "/" << f.primes_tested.size() << " primes (Example 3: "
           << f3.failures.size() << "/" << f3.primes_tested.size() << ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1  Example 1 golden (height one, k=3, r=4)", example1},
      {"AC2  Example 2 golden (k=(3,2), r=4)", example2},
      {"AC3  Example 3 golden (finite, k=(3,2), r=4)", example3},
      {"AC4  algebraic oracle equivalence, wt(k)+r <= 10", oracle_equivalence},
      {"AC5  real verification of main theorem, wt(k)+r <= 8, N = 1e6", real_numeric},
      {"AC6  finite verification over primes in [11, 1009]", finite_numeric},
      {"AC7  derivation and Ohno relation suites (real)", relation_suites},
      {"AC8  structural property suites", structural},
      {"AC9  symmetrized star values", symmetrized},
      {"AC10 defect detection on both backends", defect_detection},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << std::fixed
              << std::setprecision(2) << elapsed << " s)";
    const std::string detail = o.detail.str();
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
