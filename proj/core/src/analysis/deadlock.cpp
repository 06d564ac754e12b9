#include <algorithm>
#include <deque>
#include <limits>

#include "siacp/analysis/traces.hpp"

namespace siacp::analysis {

std::vector<Violation> find_deadlocks(const sos::Lts& l) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(l.size(), none);
  std::vector<std::string> via(l.size());
  std::vector<bool> seen(l.size(), false);
  std::vector<sos::StateId> order;
  std::deque<sos::StateId> todo{l.init};
  seen[l.init] = true;

  // Out-lists are sorted by label, so the first discovery of a state is
  // along the lexicographically least shortest path.
  while (!todo.empty()) {
    const sos::StateId q = todo.front();
    todo.pop_front();
    order.push_back(q);
    for (const auto& [a, r] : l.states[q].out) {
      if (seen[r]) continue;
      seen[r] = true;
      parent[r] = q;
      via[r] = a;
      todo.push_back(r);
    }
  }

  std::vector<Violation> out;
  for (sos::StateId q : order) {
    const auto& s = l.states[q];
    if (!s.out.empty() || s.terminating || s.truncated) continue;
    Trace w;
    for (sos::StateId p = q; p != l.init; p = parent[p]) w.push_back(via[p]);
    std::reverse(w.begin(), w.end());
    out.push_back({ViolationKind::Deadlock, std::move(w), q, "no move and no termination"});
  }
  return out;
}

}  // namespace siacp::analysis
