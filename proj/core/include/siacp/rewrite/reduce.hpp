#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/rewrite/hnf.hpp"
#include "siacp/sos/lts.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::rewrite {

struct ReducedSpec {
  std::shared_ptr<const RecSpec> spec;
  std::string root;

  /// <root|spec>.
  Term as_term() const { return Term::rec(root, spec); }
};

struct ReduceOptions {
  std::size_t max_configurations = 100000;
  RewriteOptions rewrite{};
  /// Variable prefix; variables are numbered from 0 breadth-first.
  std::string prefix = "Z";
};

/// The configurations reachable from t through head normal forms, as a
/// transition system whose states carry the (digest-normalized) terms.
/// Throws BudgetExceeded past max_configurations.
sos::Lts configuration_graph(const Term& t, const SystemConfig& cfg,
                             const strategy::Strategy& strat, const ReduceOptions& opts = {});

/// A guarded specification over action prefixes and + only whose root is
/// bisimilar to t: one equation per bisimulation class of reachable
/// configurations, Z_k = Σ a.Z_j (+ ε), or δ for a configuration with
/// neither moves nor termination.
ReducedSpec reduce_spec(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
                        const ReduceOptions& opts = {});

}  // namespace siacp::rewrite
