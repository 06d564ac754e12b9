#include "siacp/rewrite/reduce.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "siacp/analysis/bisim.hpp"
#include "siacp/kernel/error.hpp"

namespace siacp::rewrite {

sos::Lts configuration_graph(const Term& t, const SystemConfig& cfg,
                             const strategy::Strategy& strat, const ReduceOptions& opts) {
  Rewriter rw(cfg, strat, opts.rewrite);
  const HistDigest digest = strat.hist_digest();
  sos::Lts g;
  std::unordered_map<Term, sos::StateId, TermHash> ids;
  std::deque<sos::StateId> todo;
  auto intern = [&](const Term& x) {
    if (auto it = ids.find(x); it != ids.end()) return it->second;
    if (g.size() >= opts.max_configurations) {
      throw BudgetExceeded("more than " + std::to_string(opts.max_configurations) +
                           " reachable configurations");
    }
    const sos::StateId id = g.add_state(false, x);
    ids.emplace(x, id);
    todo.push_back(id);
    return id;
  };
  g.init = intern(normalize(t, digest));
  while (!todo.empty()) {
    const sos::StateId q = todo.front();
    todo.pop_front();
    const Hnf h = rw.hnf(*g.states[q].term).canonical(digest);
    g.states[q].terminating = h.has_epsilon;
    for (const auto& [a, x] : h.summands) {
      const sos::StateId r = intern(x);
      g.add_edge(q, a, r);
    }
  }
  g.tidy();
  return g;
}

ReducedSpec reduce_spec(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
                        const ReduceOptions& opts) {
  const sos::Lts m = analysis::minimize(configuration_graph(t, cfg, strat, opts));
  auto var = [&](sos::StateId q) { return opts.prefix + std::to_string(q); };

  std::map<std::string, Term> equations;
  for (sos::StateId q = 0; q < m.size(); ++q) {
    std::vector<Term> parts;
    for (const auto& [a, r] : m.states[q].out) {
      parts.push_back(Term::seq(Term::action(a), Term::variable(var(r))));
    }
    if (m.states[q].terminating) parts.push_back(Term::epsilon());
    equations.emplace(var(q), Term::sum_of(parts));
  }
  return {std::make_shared<const RecSpec>(std::move(equations)), var(m.init)};
}

}  // namespace siacp::rewrite
