#include "mzv/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mzv/errors.hpp"
#include "mzv/eval_finite.hpp"
#include "mzv/eval_real.hpp"
#include "mzv/identities.hpp"
#include "mzv/serialize.hpp"

namespace mzv::cli {

namespace {

/// Thrown for parameter combinations that are syntactically fine but unusable.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Params {
  std::string theorem;
  std::optional<std::string> k;
  std::optional<int> r;
  std::optional<int> m;
  std::optional<int> l;
  std::optional<std::string> word;
  std::string backend;
  long trunc = kDefaultTrunc;
  std::string primes = "11..1009";
  std::string format;
  int max_weight = 0;
};

enum class Family { height_one, index_r, index_m, derivation };

Family family_of(Theorem t) {
  switch (t) {
    case Theorem::height_one:
      return Family::height_one;
    case Theorem::ohno:
    case Theorem::ohno_finite:
      return Family::index_m;
    case Theorem::derivation:
    case Theorem::derivation_finite:
      return Family::derivation;
    default:
      return Family::index_r;
  }
}

Theorem theorem_of(const std::string& tag) {
  const auto t = parse_theorem(tag);
  if (!t) {
    std::string known;
    for (Theorem x : all_theorems()) known += (known.empty() ? "" : ", ") + to_string(x);
    throw UsageError("unknown theorem '" + tag + "' (expected one of: " + known + ")");
  }
  return *t;
}

void require(bool present, const char* flag, Theorem t) {
  if (!present) {
    throw UsageError(std::string("theorem ") + to_string(t) + " requires " + flag);
  }
}

void forbid(bool present, const char* flag, Theorem t) {
  if (present) {
    throw UsageError(std::string(flag) + " does not apply to theorem " + to_string(t));
  }
}

void check_params(Theorem t, const Params& p) {
  const Family f = family_of(t);
  const bool index_family = f != Family::derivation;
  require(!index_family || p.k.has_value(), "--k", t);
  require((f != Family::index_r && f != Family::height_one) || p.r.has_value(), "--r", t);
  require(f != Family::index_m || p.m.has_value(), "--m", t);
  require(f != Family::derivation || p.l.has_value(), "--l", t);
  require(f != Family::derivation || p.word.has_value(), "--word", t);
  forbid(!index_family && p.k.has_value(), "--k", t);
  forbid((f == Family::index_m || f == Family::derivation) && p.r.has_value(), "--r", t);
  forbid(f != Family::index_m && p.m.has_value(), "--m", t);
  forbid(f != Family::derivation && p.l.has_value(), "--l", t);
  forbid(f != Family::derivation && p.word.has_value(), "--word", t);
}

IdentityInstance build_instance(Theorem t, const Params& p) {
  check_params(t, p);
  switch (t) {
    case Theorem::height_one: {
      const Index k = parse_index(*p.k);
      if (k.depth() != 1) throw UsageError("theorem height-one takes a single integer --k");
      return gen_height_one(k[0], *p.r);
    }
    case Theorem::main:
      return gen_main(parse_index(*p.k), *p.r);
    case Theorem::main_algebraic:
      return gen_main_algebraic(parse_index(*p.k), *p.r);
    case Theorem::finite:
      return gen_finite(parse_index(*p.k), *p.r);
    case Theorem::finite_algebraic:
      return gen_finite_algebraic(parse_index(*p.k), *p.r);
    case Theorem::ohno:
      return gen_ohno(parse_index(*p.k), *p.m);
    case Theorem::ohno_finite:
      return gen_ohno_finite(parse_index(*p.k), *p.m);
    case Theorem::derivation:
      return derivation_instance(*p.l, Word(*p.word));
    case Theorem::derivation_finite:
      return derivation_finite_instance(*p.l, Word(*p.word));
  }
  throw UsageError("unhandled theorem");
}

Backend backend_for(Theorem t, const std::string& requested) {
  const Backend natural =
      symbol_kind_of(t) == SymbolKind::finite ? Backend::finite : Backend::real;
  if (requested.empty()) return natural;
  const Backend b = requested == "finite" ? Backend::finite : Backend::real;
  if (b != natural) {
    throw UsageError("theorem " + to_string(t) + " cannot be verified with backend " +
                     requested + " (use " + to_string(natural) + ")");
  }
  return b;
}

/// Verifies instances with evaluators shared across calls (symbol caches).
class Verifier {
 public:
  Verifier(long trunc, PrimeSet primes) : real_(trunc), primes_(std::move(primes)) {}

  VerificationReport verify(const IdentityInstance& inst, Backend backend) {
    if (backend == Backend::real) return real_.verify(inst);
    return verify_finite(inst, primes_);
  }

 private:
  RealEvaluator real_;
  PrimeSet primes_;
};

std::vector<Word> words_up_to(std::size_t max_degree, bool admissible_only) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::string s(n, 'x');
      for (std::size_t i = 0; i < n; ++i) {
        if (bits >> (n - 1 - i) & 1U) s[i] = 'y';
      }
      Word w(std::move(s));
      if (w.in_h1() && (!admissible_only || w.in_h0())) out.push_back(std::move(w));
    }
  }
  return out;
}

/// Every valid parameter set for a theorem with total weight at most max_weight.
std::vector<IdentityInstance> sweep_instances(Theorem t, int max_weight) {
  std::vector<IdentityInstance> out;
  switch (family_of(t)) {
    case Family::height_one:
      for (int k = 1; k < max_weight; ++k) {
        for (int r = 1; k + r <= max_weight; ++r) out.push_back(gen_height_one(k, r));
      }
      break;
    case Family::index_r:
      for (int w = 1; w < max_weight; ++w) {
        for (const Index& k : indices_of_weight(w)) {
          for (int r = static_cast<int>(k.depth()); w + r <= max_weight; ++r) {
            Params p;
            p.k = format_index(k);
            p.r = r;
            out.push_back(build_instance(t, p));
          }
        }
      }
      break;
    case Family::index_m:
      for (int w = 1; w <= max_weight; ++w) {
        for (const Index& k : indices_of_weight(w)) {
          if (t == Theorem::ohno && !k.admissible()) continue;
          for (int m = 0; w + m <= max_weight; ++m) {
            out.push_back(t == Theorem::ohno ? gen_ohno(k, m) : gen_ohno_finite(k, m));
          }
        }
      }
      break;
    case Family::derivation: {
      const bool finite = t == Theorem::derivation_finite;
      for (const Word& w : words_up_to(static_cast<std::size_t>(max_weight - 1), !finite)) {
        for (int l = 1; static_cast<int>(w.degree()) + l <= max_weight; ++l) {
          out.push_back(finite ? derivation_finite_instance(l, w) : derivation_instance(l, w));
        }
      }
      break;
    }
  }
  return out;
}

std::string describe(const Provenance& prov) {
  std::string s = to_string(prov.theorem);
  for (const auto& [name, value] : prov.params) {
    s += ' ' + name + '=';
    if (const int* i = std::get_if<int>(&value)) {
      s += std::to_string(*i);
    } else if (const Index* k = std::get_if<Index>(&value)) {
      s += format_index(*k);
    } else {
      s += std::get<Word>(value).letters();
    }
  }
  return s;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format " + format);
}

void add_instance_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--theorem", p.theorem, "theorem tag")->required();
  cmd->add_option("--k", p.k, "index, e.g. 3,2");
  cmd->add_option("--r", p.r, "number of appended units r")->check(CLI::PositiveNumber);
  cmd->add_option("--m", p.m, "Ohno shift m")->check(CLI::NonNegativeNumber);
  cmd->add_option("--l", p.l, "derivation order l")->check(CLI::PositiveNumber);
  cmd->add_option("--word", p.word, "word over {x, y}");
}

void add_backend_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--backend", p.backend, "real or finite")
      ->check(CLI::IsMember({"real", "finite"}));
  cmd->add_option("--trunc", p.trunc, "truncation cutoff N")->check(CLI::Range(2L, 1'000'000'000L));
  cmd->add_option("--primes", p.primes, "inclusive prime range a..b");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple zeta value identity generator and verifier", "mzv"};
  app.require_subcommand(1);

  Params p;
  std::string index_action;
  std::string index_text;
  std::optional<std::uint64_t> single_prime;

  auto* gen = app.add_subcommand("gen", "print an identity instance");
  add_instance_flags(gen, p);
  std::string gen_format = "latex";
  gen->add_option("--format", gen_format, "latex or json");

  auto* verify = app.add_subcommand("verify", "verify an identity instance");
  add_instance_flags(verify, p);
  add_backend_flags(verify, p);
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text or json");

  auto* eval = app.add_subcommand("eval", "truncated real value of zeta(k)");
  eval->add_option("--k", p.k, "admissible index")->required();
  eval->add_option("--trunc", p.trunc, "truncation cutoff N")->check(CLI::Range(2L, 1'000'000'000L));
  std::string eval_format = "text";
  eval->add_option("--format", eval_format, "text or json");

  auto* eval_finite = app.add_subcommand("eval-finite", "residues of zeta_p(k)");
  eval_finite->add_option("--k", p.k, "index")->required();
  eval_finite->add_option("--primes", p.primes, "inclusive prime range a..b");
  eval_finite->add_option("--p", single_prime, "a single prime");
  std::string eval_finite_format = "text";
  eval_finite->add_option("--format", eval_finite_format, "text or json");

  auto* index = app.add_subcommand("index", "index combinatorics");
  index->add_option("action", index_action, "dual | hdual | refine | stats")
      ->required()
      ->check(CLI::IsMember({"dual", "hdual", "refine", "stats"}));
  index->add_option("index", index_text, "index, e.g. 4,1,1,1")->required();

  auto* sweep = app.add_subcommand("sweep", "verify every instance up to a weight");
  sweep->add_option("--theorem", p.theorem, "theorem tag")->required();
  sweep->add_option("--max-weight", p.max_weight, "largest total weight")
      ->required()
      ->check(CLI::Range(2, 14));
  add_backend_flags(sweep, p);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (gen->parsed()) {
      p.format = gen_format;
      check_format(p.format, {"latex", "json"});
      const IdentityInstance inst = build_instance(theorem_of(p.theorem), p);
      if (p.format == "json") {
        out << to_json(inst).dump(2) << '\n';
      } else {
        out << to_latex(inst) << '\n';
      }
      return kPass;
    }
    if (verify->parsed()) {
      p.format = verify_format;
      check_format(p.format, {"text", "json"});
      const Theorem t = theorem_of(p.theorem);
      const Backend backend = backend_for(t, p.backend);
      check_params(t, p);
      const PrimeSet primes = PrimeSet::parse_range(p.primes);
      const IdentityInstance inst = build_instance(t, p);
      Verifier v(p.trunc, primes);
      const VerificationReport rep = v.verify(inst, backend);
      if (p.format == "json") {
        out << to_json(rep).dump(2) << '\n';
      } else {
        out << to_text(rep);
      }
      return rep.passed() ? kPass : kVerificationFailed;
    }
    if (eval->parsed()) {
      p.format = eval_format;
      check_format(p.format, {"text", "json"});
      const Index k = parse_index(*p.k);
      const RealEval e = eval_mzv(k, p.trunc);
      if (p.format == "json") {
        const Json j{{"index", k.parts()},
                     {"value", e.value},
                     {"tail_bound", e.tail_bound},
                     {"trunc", e.trunc_n}};
        out << j.dump(2) << '\n';
      } else {
        std::ostringstream os;
        os << std::setprecision(17) << e.value << " +- " << std::setprecision(3)
           << std::scientific << e.tail_bound << " (N = " << e.trunc_n << ")\n";
        out << os.str();
      }
      return kPass;
    }
    if (eval_finite->parsed()) {
      p.format = eval_finite_format;
      check_format(p.format, {"text", "json"});
      const Index k = parse_index(*p.k);
      if (k.empty()) throw UsageError("eval-finite needs depth >= 1");
      const PrimeSet primes = single_prime ? PrimeSet(std::vector<std::uint64_t>{*single_prime})
                                           : PrimeSet::parse_range(p.primes);
      const FiniteEval e = eval_fmzv(k, primes);
      if (p.format == "json") {
        Json residues = Json::array();
        for (const auto& [prime, r] : e.residues) residues.push_back({{"p", prime}, {"residue", r}});
        out << Json{{"index", k.parts()}, {"residues", residues}}.dump(2) << '\n';
      } else {
        for (const auto& [prime, r] : e.residues) out << prime << ' ' << r << '\n';
      }
      return kPass;
    }
    if (index->parsed()) {
      const Index k = parse_index(index_text);
      if (index_action == "dual") {
        out << format_index(dual(k)) << '\n';
      } else if (index_action == "hdual") {
        out << format_index(hoffman_dual(k)) << '\n';
      } else if (index_action == "refine") {
        if (k.empty()) throw UsageError("refine needs depth >= 1");
        for (const Index& kp : refinements(k)) out << format_index(kp) << '\n';
      } else {
        const IndexStats s = stats(k);
        out << "weight " << s.weight << "\ndepth " << s.depth << "\nheight " << s.height
            << "\nadmissible " << (s.admissible ? "true" : "false") << '\n';
      }
      return kPass;
    }
    if (sweep->parsed()) {
      const Theorem t = theorem_of(p.theorem);
      const Backend backend = backend_for(t, p.backend);
      Verifier v(p.trunc, PrimeSet::parse_range(p.primes));
      std::size_t failed = 0;
      std::size_t count = 0;
      for (const IdentityInstance& inst : sweep_instances(t, p.max_weight)) {
        ++count;
        VerificationReport rep;
        try {
          rep = v.verify(inst, backend);
        } catch (const ConfigError& e) {
          // No admissible prime for this weight: counts as a failure to verify.
          err << "error: " << describe(inst.provenance) << ": " << e.what() << '\n';
          ++failed;
          continue;
        }
        if (!rep.passed()) ++failed;
        out << to_string(rep.status) << ' ' << describe(inst.provenance) << '\n';
      }
      out << count << " instances, " << failed << " failed\n";
      return failed == 0 ? kPass : kVerificationFailed;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    // ParseError, DomainError, AdmissibilityError, UsageError
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mzv::cli
