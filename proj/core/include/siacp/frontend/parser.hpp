#pragma once

#include <string_view>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::frontend {

struct ParseOptions {
  /// Declare unknown identifiers as plain actions instead of rejecting them.
  bool infer_actions = false;
  /// Rewrite budget for the guardedness check of rec blocks.
  std::size_t guard_budget = 1000;
};

/// Grammar, loosest binding first:
///   term  := merge ('+' merge)*                 left associative
///   merge := seq [('||' | '|_' | '|') seq]      non-associative
///   seq   := prim ['.' seq]                     right associative
///   prim  := 'delta' | 'eps' | action | '(' term ')'
///          | 'encap' '{' actions '}' '(' term ')'
///          | 'si' '[' n ';' hist ';' state ']' '(' term, ... ')'
///          | 'pos' '[' n ';' i ';' hist ';' state ']' '(' term, ... ')'
///          | 'rec' [X] '{' X '=' term (';' Y '=' term)* [';'] '}' X
///   hist  := empty | '(' i ',' n ')' (',' '(' i ',' n ')')*
/// A state literal is handed to the strategy verbatim.
///
/// Throws SyntaxError (with location), UndeclaredAction, or
/// UnguardedRecursion for rec blocks not shown guarded.
Term parse_term(std::string_view src, const SystemConfig& cfg, const strategy::Strategy& strat);

/// As above; with infer_actions, unknown identifiers are added to `cfg`.
Term parse_term(std::string_view src, SystemConfig& cfg, const strategy::Strategy& strat,
                const ParseOptions& opts);

}  // namespace siacp::frontend
