#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "siacp/kernel/system.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::strategy {

/// Semaphore control state: r in dom means semaphore r is taken; the value is
/// the FIFO queue of suspended process indices.
using Queues = std::map<std::string, std::vector<int>>;

/// How many consecutive turns the k bound of `next` grants.
enum class TurnsConvention {
  AsWritten,  // guard turns(prefix, j) < k: k + 1 consecutive turns
  Prose,      // guard turns(h, j) < k: k consecutive turns
};

class QueueState final : public ControlStateValue {
 public:
  explicit QueueState(Queues queues) : queues_(std::move(queues)) {}

  const Queues& queues() const noexcept { return queues_; }

  std::string_view tag() const noexcept override { return "semaphore"; }
  std::size_t hash() const noexcept override;
  std::strong_ordering compare_same(const ControlStateValue& other) const override;
  /// "{}" or "{q:[1,3],r:[]}".
  std::string render() const override;

 private:
  Queues queues_;
};

ControlState make_queue_state(Queues queues);
/// Throws std::invalid_argument when `s` is not a semaphore state.
const Queues& queues_of(const ControlState& s);
/// Parses "{}", "{r:[]}", "{r:[1,2], q:[3]}".
Queues parse_queues(std::string_view literal);

std::string p_action(const std::string& semaphore);
std::string v_action(const std::string& semaphore);

/// Number of consecutive turns of process i at the end of h.
int sem_turns(const Hist& h, int i);

/// The process that gets the (i+1)-th next turn after h.
int sem_next(int n, const Hist& h, int i, int k, TurnsConvention conv = TurnsConvention::AsWritten);

std::set<int> sem_waiting(const Queues& s);

/// sched'(h, s, 0): the first candidate not waiting, trying skip counters
/// 0 .. k*n - 1.
std::optional<int> sem_sched(int n, const Hist& h, const Queues& s, int k,
                             TurnsConvention conv = TurnsConvention::AsWritten);

std::vector<int> sem_remove_prime(int n, const std::vector<int>& q, int i);
Queues sem_remove(int n, const Queues& s, int i);

/// The argument of updat_n as the semaphore strategy sees it.
struct SemStep {
  enum class Kind { Other, P, V, Epsilon, Delta };

  Kind kind = Kind::Other;
  std::string semaphore;

  static SemStep other() { return {}; }
  static SemStep p(std::string r) { return {Kind::P, std::move(r)}; }
  static SemStep v(std::string r) { return {Kind::V, std::move(r)}; }
  static SemStep eps() { return {Kind::Epsilon, {}}; }
  static SemStep dead() { return {Kind::Delta, {}}; }
};

/// The ten-clause control state transformer. Other covers every action
/// outside C, creation actions included; Delta is treated like Epsilon.
Queues sem_updat(int n, const Hist& h, const Queues& s, int i, const SemStep& alpha);

class SemaphoreStrategy final : public Strategy {
 public:
  SemaphoreStrategy(int k, std::set<std::string> semaphores, TurnsConvention conv);

  std::string name() const override { return "rr-semaphore"; }
  std::optional<int> sched(int n, const Hist& h, const ControlState& s) const override;
  ControlState updat(int n, const Hist& h, const ControlState& s, int i,
                     const StepLabel& alpha) const override;
  const std::set<std::string>& control_actions() const override { return control_; }
  ControlState initial_state() const override;

  /// Last pair (j, m), preceded by min(turns(prefix, j), k) further turns of j.
  Hist digest(const Hist& h) const override;
  bool has_digest() const override { return true; }
  ControlState parse_state(std::string_view literal) const override;

  int k() const noexcept { return k_; }
  const std::set<std::string>& semaphores() const noexcept { return semaphores_; }
  TurnsConvention convention() const noexcept { return conv_; }

  SemStep classify(const StepLabel& alpha) const;

 private:
  int k_;
  std::set<std::string> semaphores_;
  TurnsConvention conv_;
  std::set<std::string> control_;
  std::map<std::string, SemStep> by_action_;
};

/// Throws std::invalid_argument if k < 1 or R is empty.
StrategyPtr sem_strategy(int k, std::set<std::string> semaphores,
                         TurnsConvention conv = TurnsConvention::AsWritten);

/// Declares P_r / V_r as control actions (with their bar actions) for every
/// r. Throws std::invalid_argument when a name is already declared with
/// another class.
void declare_semaphores(SystemConfig& cfg, const std::set<std::string>& semaphores);

std::string to_string(TurnsConvention conv);

}  // namespace siacp::strategy
