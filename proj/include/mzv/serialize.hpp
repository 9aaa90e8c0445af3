#ifndef MZV_SERIALIZE_HPP
#define MZV_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "mzv/identities.hpp"
#include "mzv/report.hpp"
#include "mzv/zeta_combo.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

/// [{"coef": "-2", "index": [4,3]}, ...] in canonical term order.
Json to_json(const ZetaCombo& c);
/// {"theorem", "params", "kind", "lhs", "rhs"}.
Json to_json(const IdentityInstance& inst);
Json to_json(const VerificationReport& rep);

/// Reads back the structure written by to_json(const IdentityInstance&).
IdentityInstance instance_from_json(const Json& j);

/// "\zeta(7) - 2\zeta(4,3)", zeta_F printed as \zeta_{\mathcal F}; "0" when empty.
std::string to_latex(const ZetaCombo& c);
std::string to_latex(const IdentityInstance& inst);

/// Short human readable summary, one line per fact.
std::string to_text(const VerificationReport& rep);

}  // namespace mzv

#endif  // MZV_SERIALIZE_HPP
