#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"

namespace siacp {

enum class Guardedness {
  SyntacticallyGuarded,
  GuardedAfterRewriting,
  NotShownGuarded,
};

struct EquationGuardedness {
  std::string var;
  Guardedness verdict = Guardedness::NotShownGuarded;
  /// Rule names applied, in order ("A9", "CM1T", "unfold Y", "RDP", ...).
  std::vector<std::string> rewrite_steps;
  /// The guarded term the body was rewritten to.
  std::optional<Term> witness;
  /// Why the equation was not shown guarded.
  std::string reason;
};

struct GuardednessReport {
  std::vector<EquationGuardedness> equations;

  bool all_guarded() const;
  /// Throws std::out_of_range for unknown variables.
  const EquationGuardedness& of(const std::string& var) const;
};

/// Every occurrence of a variable from `vars` lies inside a subterm a.t' with
/// a an action constant.
bool is_syntactically_guarded(const Term& t, const std::set<std::string>& vars);

/// Classifies each equation of `spec`. Equations that are not syntactically
/// guarded are head-normalized with the ACPε axioms, unfolding the other
/// equations left to right, for at most `rewrite_budget` steps. A missing
/// communication table is treated as all-δ; the verdict does not depend on
/// it since communication summands are action-prefixed either way.
GuardednessReport check_guarded(const RecSpec& spec, std::size_t rewrite_budget = 1000,
                                const CommTable* comm = nullptr);

std::string to_string(Guardedness g);

}  // namespace siacp
