#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "siacp/kernel/control_state.hpp"
#include "siacp/kernel/hist.hpp"
#include "siacp/kernel/normalize.hpp"

namespace siacp::strategy {

/// What the scheduled process just did: an action, successful termination,
/// or (deferred deadlock mode only) inaction.
struct StepLabel {
  enum class Kind { Action, Epsilon, Delta };

  Kind kind = Kind::Epsilon;
  std::string action;

  static StepLabel act(std::string a) { return {Kind::Action, std::move(a)}; }
  static StepLabel eps() { return {Kind::Epsilon, {}}; }
  static StepLabel dead() { return {Kind::Delta, {}}; }
};

/// An interleaving strategy: control states, a partial scheduler sched_n and
/// a total control state transformer updat_n for every process count n.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;

  /// Index in 1..n of the process that gets the next turn, or nullopt when
  /// no process can be given a turn.
  virtual std::optional<int> sched(int n, const Hist& h, const ControlState& s) const = 0;

  virtual ControlState updat(int n, const Hist& h, const ControlState& s, int i,
                             const StepLabel& alpha) const = 0;

  /// The control actions C owned by this strategy.
  virtual const std::set<std::string>& control_actions() const = 0;

  virtual ControlState initial_state() const = 0;

  /// A representative history indistinguishable from `h` for sched and
  /// updat. Strategies without a finite digest return `h` unchanged and
  /// report has_digest() == false.
  virtual Hist digest(const Hist& h) const { return h; }
  virtual bool has_digest() const { return false; }

  /// Parses a control state literal. "init" denotes initial_state().
  /// Throws std::invalid_argument on malformed input.
  virtual ControlState parse_state(std::string_view literal) const;

  bool is_control(const std::string& action) const { return control_actions().contains(action); }

  /// Digest as a normalize() callback; empty when has_digest() is false.
  HistDigest hist_digest() const;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

}  // namespace siacp::strategy
