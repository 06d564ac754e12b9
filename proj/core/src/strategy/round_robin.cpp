#include "siacp/strategy/round_robin.hpp"

#include <stdexcept>

namespace siacp::strategy {

ControlState Strategy::parse_state(std::string_view literal) const {
  if (literal == "init") return initial_state();
  throw std::invalid_argument("strategy " + name() + " does not understand control state '" +
                              std::string(literal) + "'");
}

HistDigest Strategy::hist_digest() const {
  if (!has_digest()) return {};
  return [this](const Hist& h) { return digest(h); };
}

std::optional<int> RoundRobin::sched(int n, const Hist& h, const ControlState&) const {
  if (h.empty()) return 1;
  return h.back().process % n + 1;
}

ControlState RoundRobin::updat(int, const Hist&, const ControlState& s, int,
                               const StepLabel&) const {
  return s;
}

const std::set<std::string>& RoundRobin::control_actions() const {
  static const std::set<std::string> none;
  return none;
}

Hist RoundRobin::digest(const Hist& h) const {
  if (h.empty()) return h;
  const Turn last = h.back();
  // A lone first pair must satisfy i <= n; a process index one above the
  // count (right after a termination) needs a predecessor pair.
  if (last.process <= last.count) return Hist::from({last});
  return Hist::from({{last.process, last.process}, last});
}

StrategyPtr rr_strategy() {
  static const StrategyPtr instance = std::make_shared<const RoundRobin>();
  return instance;
}

}  // namespace siacp::strategy
