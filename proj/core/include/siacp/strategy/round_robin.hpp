#pragma once

#include "siacp/strategy/strategy.hpp"

namespace siacp::strategy {

/// Plain round-robin: sched_n(<>, s) = 1, sched_n(h ^ <j,n>, s) = (j mod n) + 1,
/// updat leaves the (unit) control state alone, no control actions.
class RoundRobin final : public Strategy {
 public:
  std::string name() const override { return "round-robin"; }
  std::optional<int> sched(int n, const Hist& h, const ControlState& s) const override;
  ControlState updat(int n, const Hist& h, const ControlState& s, int i,
                     const StepLabel& alpha) const override;
  const std::set<std::string>& control_actions() const override;
  ControlState initial_state() const override { return {}; }

  /// Keeps only the last pair.
  Hist digest(const Hist& h) const override;
  bool has_digest() const override { return true; }
};

StrategyPtr rr_strategy();

}  // namespace siacp::strategy
