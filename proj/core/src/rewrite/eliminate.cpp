#include "siacp/rewrite/eliminate.hpp"

#include <set>
#include <unordered_map>

#include "siacp/kernel/error.hpp"

namespace siacp::rewrite {

namespace {

class Eliminator {
 public:
  Eliminator(const SystemConfig& cfg, const strategy::Strategy& strat, const EliminateOptions& opts)
      : rw_(cfg, strat, opts.rewrite), digest_(strat.hist_digest()), opts_(opts) {}

  Term run(const Term& t) {
    const Term key = normalize(t, digest_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!on_path_.insert(key).second) {
      throw BudgetExceeded("infinite behavior: a configuration recurs, no basic term exists");
    }
    if (memo_.size() >= opts_.max_configurations) {
      throw BudgetExceeded("elimination explored more than " +
                           std::to_string(opts_.max_configurations) + " configurations");
    }
    const Hnf h = rw_.hnf(key);
    std::vector<std::pair<std::string, Term>> parts;
    for (const auto& [a, rest] : h.summands) parts.emplace_back(a, run(rest));
    on_path_.erase(key);
    Term out = assemble_canonical(std::move(parts), h.has_epsilon);
    memo_.emplace(key, out);
    return out;
  }

 private:
  Rewriter rw_;
  HistDigest digest_;
  const EliminateOptions& opts_;
  std::unordered_map<Term, Term, TermHash> memo_;
  std::set<Term> on_path_;
};

}  // namespace

Term eliminate(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
               const EliminateOptions& opts) {
  return Eliminator(cfg, strat, opts).run(t);
}

}  // namespace siacp::rewrite
