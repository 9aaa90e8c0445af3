#include "mzv/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

Json param_json(const ParamValue& v) {
  if (const int* i = std::get_if<int>(&v)) return *i;
  if (const Index* k = std::get_if<Index>(&v)) return k->parts();
  return std::get<Word>(v).letters();
}

ZetaCombo combo_from_json(const Json& terms, SymbolKind kind) {
  ZetaCombo c(kind);
  for (const auto& t : terms) {
    c.add(Index(t.at("index").get<std::vector<int>>()),
          parse_rational(t.at("coef").get<std::string>()));
  }
  return c;
}

std::string latex_symbol(const Index& k, SymbolKind kind) {
  if (k.empty()) return "1";
  return std::string(kind == SymbolKind::finite ? "\\zeta_{\\mathcal F}" : "\\zeta") + "(" +
         format_index(k) + ")";
}

std::string latex_magnitude(const Rational& q) {
  const Rational mag = abs(q);
  if (mag.get_den() == 1) return mag.get_num().get_str();
  return "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

}  // namespace

std::string to_string(VerifyStatus s) { return s == VerifyStatus::pass ? "pass" : "fail"; }
std::string to_string(Backend b) { return b == Backend::real ? "real" : "finite"; }

Json to_json(const ZetaCombo& c) {
  Json arr = Json::array();
  for (const auto& [k, coef] : c.terms()) {
    Json t;
    t["coef"] = coef.get_str();
    t["index"] = k.parts();
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const IdentityInstance& inst) {
  Json j;
  j["theorem"] = to_string(inst.provenance.theorem);
  Json params = Json::object();
  for (const auto& [name, value] : inst.provenance.params) params[name] = param_json(value);
  j["params"] = std::move(params);
  j["kind"] = to_string(inst.kind());
  j["lhs"] = to_json(inst.lhs);
  j["rhs"] = to_json(inst.rhs);
  return j;
}

IdentityInstance instance_from_json(const Json& j) {
  const auto theorem = parse_theorem(j.at("theorem").get<std::string>());
  if (!theorem) throw DomainError("unknown theorem tag " + j.at("theorem").dump());
  const SymbolKind kind = symbol_kind_of(*theorem);
  IdentityInstance inst{combo_from_json(j.at("lhs"), kind), combo_from_json(j.at("rhs"), kind),
                        {*theorem, {}}};
  for (const auto& [name, value] : j.at("params").items()) {
    if (value.is_number_integer()) {
      inst.provenance.params.emplace_back(name, value.get<int>());
    } else if (value.is_array()) {
      inst.provenance.params.emplace_back(name, Index(value.get<std::vector<int>>()));
    } else {
      inst.provenance.params.emplace_back(name, Word(value.get<std::string>()));
    }
  }
  return inst;
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["status"] = to_string(rep.status);
  j["backend"] = to_string(rep.backend);
  if (rep.backend == Backend::real) {
    j["residual"] = rep.residual;
    j["tolerance"] = rep.tolerance;
    j["trunc"] = rep.trunc_n;
    Json terms = Json::array();
    for (const auto& t : rep.terms) {
      Json e;
      e["coef"] = t.coef.get_str();
      e["index"] = t.index.parts();
      e["value"] = t.value;
      e["tail_bound"] = t.tail_bound;
      terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
  } else {
    j["primes_tested"] = rep.primes_tested.size();
    Json skipped = Json::array();
    for (const auto& s : rep.skipped) skipped.push_back(Json{{"p", s.prime}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    Json failures = Json::array();
    for (const auto& f : rep.failures) {
      failures.push_back(Json{{"p", f.prime}, {"residue", f.residue}});
    }
    j["failures"] = std::move(failures);
  }
  return j;
}

std::string to_latex(const ZetaCombo& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, coef] : c.terms()) {
    if (first) {
      if (coef < 0) s += "-";
    } else {
      s += coef < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = abs(coef) == 1;
    if (!unit || k.empty()) {
      s += latex_magnitude(coef);
      if (!k.empty()) s += latex_symbol(k, c.kind());
    } else {
      s += latex_symbol(k, c.kind());
    }
  }
  return s;
}

std::string to_latex(const IdentityInstance& inst) {
  return to_latex(inst.lhs) + " = " + to_latex(inst.rhs);
}

std::string to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "status: " << to_string(rep.status) << "\nbackend: " << to_string(rep.backend) << '\n';
  if (rep.backend == Backend::real) {
    os << std::scientific << std::setprecision(6) << "residual: " << rep.residual
       << "\ntolerance: " << rep.tolerance << "\ntrunc: " << rep.trunc_n << '\n';
  } else {
    os << "primes tested: " << rep.primes_tested.size() << "\nskipped:";
    for (const auto& s : rep.skipped) os << ' ' << s.prime << '(' << s.reason << ')';
    os << "\nfailures:";
    for (const auto& f : rep.failures) os << ' ' << f.prime;
    os << '\n';
  }
  return os.str();
}

}  // namespace mzv
