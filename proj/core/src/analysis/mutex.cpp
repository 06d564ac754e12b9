#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "siacp/analysis/traces.hpp"

namespace siacp::analysis {

namespace {

using Occupancy = std::vector<std::set<int>>;

struct Node {
  sos::StateId q;
  Occupancy occ;
  std::size_t parent;
  std::string label;
  std::size_t depth;
};

Trace path_to(const std::vector<Node>& nodes, std::size_t k) {
  Trace t;
  while (k != 0) {
    t.push_back(nodes[k].label);
    k = nodes[k].parent;
  }
  std::reverse(t.begin(), t.end());
  return t;
}

}  // namespace

std::vector<Violation> check_mutex(const sos::Lts& l, const std::vector<MutexRegion>& regions,
                                   std::size_t depth) {
  // Label -> (region, position, entering?)
  struct Mark {
    std::size_t region;
    int position;
    bool enter;
  };
  std::multimap<std::string, Mark> marks;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (const auto& [pos, a] : regions[r].enter_actions) marks.emplace(a, Mark{r, pos, true});
    for (const auto& [pos, a] : regions[r].exit_actions) marks.emplace(a, Mark{r, pos, false});
  }

  std::vector<Violation> out;
  std::set<sos::StateId> reported;
  std::vector<Node> nodes;
  std::map<std::pair<sos::StateId, Occupancy>, std::size_t> seen;
  std::deque<std::size_t> todo;

  nodes.push_back({l.init, Occupancy(regions.size()), 0, {}, 0});
  seen.emplace(std::make_pair(l.init, nodes[0].occ), 0);
  todo.push_back(0);
  while (!todo.empty()) {
    const std::size_t k = todo.front();
    todo.pop_front();
    if (nodes[k].depth >= depth) continue;
    const sos::StateId q = nodes[k].q;
    for (const auto& [a, r] : l.states[q].out) {
      Occupancy occ = nodes[k].occ;
      std::string clash;
      auto [lo, hi] = marks.equal_range(a);
      for (auto it = lo; it != hi; ++it) {
        const Mark& m = it->second;
        auto& inside = occ[m.region];
        if (m.enter) {
          for (int other : inside) {
            if (other != m.position && clash.empty()) {
              clash = "region " + regions[m.region].semaphore + ": position " +
                      std::to_string(m.position) + " enters while position " +
                      std::to_string(other) + " is inside";
            }
          }
          inside.insert(m.position);
        } else {
          inside.erase(m.position);
        }
      }
      auto key = std::make_pair(r, occ);
      if (!clash.empty() && !reported.contains(r)) {
        reported.insert(r);
        Trace w = path_to(nodes, k);
        w.push_back(a);
        out.push_back({ViolationKind::MutexOverlap, std::move(w), r, std::move(clash)});
      }
      if (seen.contains(key)) continue;
      nodes.push_back({r, std::move(occ), k, a, nodes[k].depth + 1});
      seen.emplace(std::move(key), nodes.size() - 1);
      todo.push_back(nodes.size() - 1);
    }
  }
  return out;
}

}  // namespace siacp::analysis
