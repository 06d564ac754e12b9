#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siacp/kernel/normalize.hpp"
#include "siacp/kernel/system.hpp"
#include "siacp/kernel/term.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::rewrite {

using siacp::unfold;

/// Σ aᵢ.tᵢ (+ ε); δ when there are no summands and no ε.
struct Hnf {
  std::vector<std::pair<std::string, Term>> summands;
  bool has_epsilon = false;

  Term to_term() const;
  /// Summands with normalized successors, sorted and deduplicated.
  Hnf canonical(const HistDigest& digest = {}) const;
  bool is_delta() const { return summands.empty() && !has_epsilon; }
};

struct RewriteOptions {
  /// Maximum number of distinct terms head-normalized.
  std::size_t budget = 2'000'000;
  /// When false, Si/PosSi terms are rejected instead of rewritten.
  bool si_axioms = true;
};

/// Head normalization by the axioms, read left to right: A1-A9, D0-D4,
/// CM1T-CM12, RDP and SI0-SI8 (SI2a/SI2b in deferred deadlock mode).
/// Results are memoized per instance.
class Rewriter {
 public:
  Rewriter(const SystemConfig& cfg, const strategy::Strategy& strat, RewriteOptions opts = {});

  const Hnf& hnf(const Term& t);

  const SystemConfig& config() const noexcept { return cfg_; }
  const strategy::Strategy& strat() const noexcept { return strat_; }
  std::size_t work() const noexcept { return memo_.size(); }

 private:
  Hnf compute(const Term& t);
  Hnf alternative(const Term& x, const Term& y);
  Hnf sequential(const Term& x, const Term& y);
  Hnf merge(const Term& x, const Term& y);
  Hnf left_merge(const Hnf& hx, const Term& y);
  Hnf comm_merge(const Hnf& hx, const Hnf& hy);
  Hnf encapsulation(const ActionSet& blocked, const Term& x);
  Hnf recursion(const Term& rec_const);
  Hnf strategic(const Term& t);
  Hnf positional(const Term& t, int i);

  const SystemConfig& cfg_;
  const strategy::Strategy& strat_;
  RewriteOptions opts_;
  std::unordered_map<Term, Hnf, TermHash> memo_;
  std::set<Term> unfolding_;
};

Hnf head_normal_form(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
                     RewriteOptions opts = {});

}  // namespace siacp::rewrite
