#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/rewrite/hnf.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::rewrite {

struct EliminateOptions {
  /// Maximum number of distinct (digest-normalized) configurations.
  std::size_t max_configurations = 100000;
  RewriteOptions rewrite{};
};

/// A basic term (δ, ε, actions, +, . only) derivably equal to t, returned in
/// canonical form. Throws BudgetExceeded when t has infinite behavior (a
/// configuration recurs on a path) or the budget runs out.
Term eliminate(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
               const EliminateOptions& opts = {});

/// The unique representative of the bisimulation class of a basic term:
/// summands a.t' with canonical t' (a.ε written a), sorted by (action,
/// successor), duplicates merged, ε last. Throws std::invalid_argument on
/// non-basic input.
Term canonical_basic_form(const Term& t);

/// Builds the canonical sum of a.t' summands whose successors are already
/// canonical, plus ε when `eps`.
Term assemble_canonical(std::vector<std::pair<std::string, Term>> summands, bool eps);

}  // namespace siacp::rewrite
