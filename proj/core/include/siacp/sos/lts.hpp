#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::sos {

using StateId = std::size_t;

struct LtsEdge {
  StateId from = 0;
  std::string label;
  StateId to = 0;

  friend bool operator==(const LtsEdge&, const LtsEdge&) = default;
  friend auto operator<=>(const LtsEdge&, const LtsEdge&) = default;
};

struct LtsState {
  bool terminating = false;
  /// Successors were cut by the budget; the state has no outgoing edges.
  bool truncated = false;
  /// The canonical term of the state; absent for imported systems.
  std::optional<Term> term;
  /// (label, target), sorted.
  std::vector<std::pair<std::string, StateId>> out;
};

class Lts {
 public:
  std::vector<LtsState> states;
  StateId init = 0;

  std::size_t size() const noexcept { return states.size(); }
  std::size_t edge_count() const noexcept;
  std::vector<LtsEdge> edges() const;
  bool truncated() const noexcept;

  StateId add_state(bool terminating, std::optional<Term> term = std::nullopt);
  void add_edge(StateId from, std::string label, StateId to);
  /// Sorts and deduplicates every out-list.
  void tidy();
};

struct LtsOptions {
  std::size_t max_states = 100000;
  std::size_t max_depth = 10000;
  /// Identify states up to the strategy's history digest.
  bool digest = true;
  /// Throw BudgetExceeded instead of returning a truncated system.
  bool require_complete = false;
};

/// Breadth-first closure of the transition relation from t. States are
/// identified by normalize() of their term (digest applied when enabled).
Lts build_lts(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
              const LtsOptions& opts = {});

/// LTS of a term without strategic interleaving (no strategy consulted).
Lts build_plain_lts(const Term& t, const SystemConfig& cfg, const LtsOptions& opts = {});

}  // namespace siacp::sos
