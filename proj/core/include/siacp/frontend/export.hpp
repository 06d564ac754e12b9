#pragma once

#include <string>
#include <string_view>

#include "siacp/sos/lts.hpp"

namespace siacp::frontend {

enum class LtsFormat { Dot, Json };

/// Dot: one node per state, terminating states drawn as doublecircle,
/// truncated states dashed. Json:
///   {"states":[{"id":0,"terminating":false,"truncated":false}],
///    "edges":[{"from":0,"label":"a","to":1}], "init":0}
std::string export_lts(const sos::Lts& l, LtsFormat format);

/// Inverse of the Json export. State terms are not recorded, so the result
/// carries none. Throws SyntaxError on malformed input.
sos::Lts import_json(std::string_view text);

}  // namespace siacp::frontend
