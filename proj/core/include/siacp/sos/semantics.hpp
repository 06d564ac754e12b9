#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::sos {

struct Transition {
  std::string label;
  Term target;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// The transition relation and termination predicate of closed terms for one
/// system and strategy. Results are memoized per instance, so an instance is
/// not safe to share between threads; the free functions below are.
class Semantics {
 public:
  Semantics(const SystemConfig& cfg, const strategy::Strategy& strat);

  /// Every derivable (label, target), sorted, without duplicates.
  const std::vector<Transition>& step(const Term& t);
  bool terminates(const Term& t);

  const SystemConfig& config() const noexcept { return cfg_; }
  const strategy::Strategy& strat() const noexcept { return strat_; }

 private:
  std::vector<Transition> compute_step(const Term& t);
  bool compute_terminates(const Term& t);
  void interleave_moves(const Term& t, int i, std::vector<Transition>& out);
  bool interleave_terminates(const Term& t, int i);
  /// The operator over the remaining processes after process i is dropped.
  Term drop_process(const Term& t, int i, const strategy::StepLabel& why);
  const Term& unfolded(const Term& rec_const);
  void check_declared(const std::string& action) const;

  const SystemConfig& cfg_;
  const strategy::Strategy& strat_;
  std::unordered_map<Term, std::vector<Transition>, TermHash> step_memo_;
  std::unordered_map<Term, bool, TermHash> term_memo_;
  std::unordered_map<Term, Term, TermHash> unfold_memo_;
  std::set<std::pair<int, Term>> active_;
};

std::vector<Transition> step(const Term& t, const SystemConfig& cfg,
                             const strategy::Strategy& strat);
bool terminates(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat);

/// The index of the argument an Si/PosSi node acts through: sched for Si
/// (nullopt when undefined), the position for PosSi.
std::optional<int> acting_index(const Term& t, const strategy::Strategy& strat);

}  // namespace siacp::sos
