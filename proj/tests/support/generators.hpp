#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/sos/semantics.hpp"
#include "siacp/strategy/semaphore.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp {
/// Readable gtest failure output.
void PrintTo(const Term& t, std::ostream* os);
}  // namespace siacp

namespace siacp::sos {
void PrintTo(const Transition& t, std::ostream* os);
}  // namespace siacp::sos

namespace siacp::testing {

/// A system configuration with its strategy and the actions random terms
/// draw from (at most four).
struct World {
  std::string label;
  SystemConfig cfg;
  strategy::StrategyPtr strat;
  std::vector<std::string> draw;
  bool semaphore = false;
};

/// Alphabet a, b, c, d with gamma(a,b) = c; datum n with phi(n) = c . eps.
World rr_world(DeadlockMode mode = DeadlockMode::Immediate);
/// As rr_world plus semaphore r (P_r, V_r) under rr-semaphore.
World sem_world(DeadlockMode mode = DeadlockMode::Immediate, int k = 1,
                strategy::TurnsConvention conv = strategy::TurnsConvention::AsWritten);

class Gen {
 public:
  Gen(const World& w, std::uint64_t seed) : w_(w), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }
  const World& world() const { return w_; }

  std::string action_name();
  std::string plain_action_name();
  Term action() { return Term::action(action_name()); }

  /// delta, eps, actions, +, .
  Term basic(int depth);
  /// basic plus ||, |_, |, encap.
  Term plain(int depth);
  /// plain plus si/pos over 1..3 arguments with consistent histories and states.
  Term full(int depth);

  /// Empty, or a well-formed history whose last pair has count n.
  Hist history(int n);
  /// A control state for n processes: unit for round-robin, random distinct
  /// queues over 1..n otherwise.
  ControlState state(int n);
  ActionSet blocked();

 private:
  Term gen(int depth, int level);

  const World& w_;
  std::mt19937_64 rng_;
};

/// Guarded, finite-state recursive system: si over two recursion constants,
/// each a small set of equations X = sum of a . Y (or a . eps).
Term random_recursive_system(Gen& g);

}  // namespace siacp::testing
