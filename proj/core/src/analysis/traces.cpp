#include "siacp/analysis/traces.hpp"

#include <functional>

namespace siacp::analysis {

std::set<TraceResult> maximal_traces(const sos::Lts& l, std::size_t depth) {
  std::set<TraceResult> out;
  Trace path;
  std::function<void(sos::StateId)> walk = [&](sos::StateId q) {
    const auto& s = l.states[q];
    if (s.truncated) {
      out.insert({path, Outcome::Cut});
      return;
    }
    if (s.out.empty()) {
      out.insert({path, s.terminating ? Outcome::Terminated : Outcome::Deadlocked});
      return;
    }
    if (path.size() >= depth) {
      out.insert({path, Outcome::Cut});
      return;
    }
    for (const auto& [a, r] : s.out) {
      path.push_back(a);
      walk(r);
      path.pop_back();
    }
  };
  walk(l.init);
  return out;
}

std::set<sos::StateId> replay(const sos::Lts& l, const Trace& trace) {
  std::set<sos::StateId> here{l.init};
  for (const auto& a : trace) {
    std::set<sos::StateId> next;
    for (auto q : here) {
      for (const auto& [b, r] : l.states[q].out) {
        if (a == b) next.insert(r);
      }
    }
    here = std::move(next);
  }
  return here;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Terminated: return "terminated";
    case Outcome::Deadlocked: return "deadlocked";
    case Outcome::Cut: return "cut";
  }
  return "unknown";
}

std::string to_string(ViolationKind k) {
  return k == ViolationKind::MutexOverlap ? "mutex-overlap" : "deadlock";
}

std::string render_trace(const Trace& t) {
  std::string out = "<";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ", ";
    out += t[k];
  }
  return out + ">";
}

}  // namespace siacp::analysis
