#pragma once

#include <string>

#include "siacp/kernel/hist.hpp"
#include "siacp/kernel/term.hpp"

namespace siacp::frontend {

/// Concrete syntax accepted by parse_term, with the fewest parentheses that
/// reproduce the same tree.
std::string render_term(const Term& t);

/// "(1,2),(2,2)"; empty for the empty history.
std::string render_history(const Hist& h);

/// One "X = body" line per equation, `root` first, the rest in numeric-aware
/// order (Z2 before Z10).
std::string render_equations(const RecSpec& spec, const std::string& root);

}  // namespace siacp::frontend
