#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "siacp/sos/lts.hpp"

namespace siacp::analysis {

using Trace = std::vector<std::string>;

enum class Outcome { Terminated, Deadlocked, Cut };

struct TraceResult {
  Trace trace;
  Outcome outcome = Outcome::Cut;

  friend bool operator==(const TraceResult&, const TraceResult&) = default;
  friend auto operator<=>(const TraceResult&, const TraceResult&) = default;
};

/// Every path of at most `depth` steps from init that either reaches a state
/// without outgoing edges (Terminated or Deadlocked by its termination flag;
/// truncated states count as Cut) or is cut at `depth`.
std::set<TraceResult> maximal_traces(const sos::Lts& l, std::size_t depth);

/// States reached from init by following `trace`.
std::set<sos::StateId> replay(const sos::Lts& l, const Trace& trace);

enum class ViolationKind { MutexOverlap, Deadlock };

struct Violation {
  ViolationKind kind = ViolationKind::Deadlock;
  Trace witness;
  sos::StateId state = 0;
  /// Human-readable detail, e.g. the region and positions involved.
  std::string detail;
};

/// Instrumentation of one critical region: per process position, the
/// actions marking entry and exit.
struct MutexRegion {
  std::string semaphore;
  std::map<int, std::string> enter_actions;
  std::map<int, std::string> exit_actions;
};

/// Reports, for each LTS state where two positions are inside the same
/// region at once, the shortest overlapping trace (ties broken by labels).
/// Exploration stops at `depth` steps.
std::vector<Violation> check_mutex(const sos::Lts& l, const std::vector<MutexRegion>& regions,
                                   std::size_t depth = 10000);

/// Reachable states with no outgoing edges, not terminating and not
/// truncated, each with its shortest witness (ties broken by labels).
std::vector<Violation> find_deadlocks(const sos::Lts& l);

std::string to_string(Outcome o);
std::string to_string(ViolationKind k);
std::string render_trace(const Trace& t);

}  // namespace siacp::analysis
