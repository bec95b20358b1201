#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "paratop/parabase.hpp"
#include "paratop/space.hpp"
#include "paratop/verify.hpp"
#include "paratop/words.hpp"

namespace paratop {

using Json = nlohmann::json;

/// Accepts {"points": [...], "min_nbhd": {...}} or {"points": [...],
/// "opens": [[...], ...]}, exactly one of the two. Malformed documents raise
/// SyntaxError; well-formed ones that are not topologies raise NotATopology.
FiniteSpace space_from_json(const Json& doc);
FiniteSpace parse_space(std::string_view text);

/// Minimal-neighbourhood form.
Json space_to_json(const FiniteSpace& space);
Json opens_to_json(const FiniteSpace& space);

/// {"point": coeff, ...}
Json abelian_to_json(const AbelianVector& v, const FiniteSpace& space);
AbelianVector abelian_from_json(const Json& doc, const FiniteSpace& space);

Json verdict_to_json(const MembershipVerdict& verdict, const FiniteSpace& space);
Json separation_to_json(const Separation& separation, const FiniteSpace& space);
Json basep_to_json(const BasepReport& report);

/// Wall time is left out unless asked for, so equal inputs give equal bytes.
Json report_to_json(const SuiteReport& report, bool include_timing = false);
std::string report_to_text(const SuiteReport& report, bool include_timing = false);

}  // namespace paratop
