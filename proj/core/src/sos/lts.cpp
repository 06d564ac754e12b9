#include "siacp/sos/lts.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "siacp/kernel/error.hpp"
#include "siacp/kernel/normalize.hpp"
#include "siacp/sos/semantics.hpp"
#include "siacp/strategy/round_robin.hpp"

namespace siacp::sos {

std::size_t Lts::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : states) n += s.out.size();
  return n;
}

std::vector<LtsEdge> Lts::edges() const {
  std::vector<LtsEdge> out;
  out.reserve(edge_count());
  for (StateId q = 0; q < states.size(); ++q) {
    for (const auto& [a, r] : states[q].out) out.push_back({q, a, r});
  }
  return out;
}

bool Lts::truncated() const noexcept {
  return std::any_of(states.begin(), states.end(), [](const LtsState& s) { return s.truncated; });
}

StateId Lts::add_state(bool terminating, std::optional<Term> term) {
  states.push_back({terminating, false, std::move(term), {}});
  return states.size() - 1;
}

void Lts::add_edge(StateId from, std::string label, StateId to) {
  states.at(from).out.emplace_back(std::move(label), to);
}

void Lts::tidy() {
  for (auto& s : states) {
    std::sort(s.out.begin(), s.out.end());
    s.out.erase(std::unique(s.out.begin(), s.out.end()), s.out.end());
  }
}

Lts build_lts(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
              const LtsOptions& opts) {
  Semantics sem(cfg, strat);
  const HistDigest digest = opts.digest ? strat.hist_digest() : HistDigest{};
  auto canon = [&](const Term& x) { return normalize(x, digest); };

  Lts lts;
  std::unordered_map<Term, StateId, TermHash> ids;
  std::vector<std::size_t> depth;
  std::deque<StateId> frontier;

  auto intern = [&](const Term& x, std::size_t d) {
    lts.states.push_back({sem.terminates(x), false, x, {}});
    const StateId id = lts.states.size() - 1;
    ids.emplace(x, id);
    depth.push_back(d);
    frontier.push_back(id);
    return id;
  };

  lts.init = intern(canon(t), 0);
  while (!frontier.empty()) {
    const StateId q = frontier.front();
    frontier.pop_front();
    const Term here = *lts.states[q].term;
    if (depth[q] >= opts.max_depth) {
      lts.states[q].truncated = !sem.step(here).empty();
      continue;
    }
    std::vector<std::pair<std::string, Term>> succ;
    std::size_t fresh = 0;
    for (const auto& [a, x] : sem.step(here)) {
      Term y = canon(x);
      if (!ids.contains(y)) ++fresh;
      succ.emplace_back(a, std::move(y));
    }
    if (lts.states.size() + fresh > opts.max_states) {
      lts.states[q].truncated = true;
      continue;
    }
    for (auto& [a, y] : succ) {
      auto it = ids.find(y);
      const StateId r = it != ids.end() ? it->second : intern(y, depth[q] + 1);
      lts.states[q].out.emplace_back(a, r);
    }
  }
  lts.tidy();
  if (opts.require_complete && lts.truncated()) {
    throw BudgetExceeded("state space exceeds the budget (" + std::to_string(opts.max_states) +
                         " states, depth " + std::to_string(opts.max_depth) + ")");
  }
  return lts;
}

Lts build_plain_lts(const Term& t, const SystemConfig& cfg, const LtsOptions& opts) {
  return build_lts(t, cfg, *strategy::rr_strategy(), opts);
}

}  // namespace siacp::sos
