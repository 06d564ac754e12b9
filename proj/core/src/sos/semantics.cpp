#include "siacp/sos/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "siacp/kernel/error.hpp"

namespace siacp::sos {

using strategy::StepLabel;

namespace {

constexpr int kStepQuery = 0;
constexpr int kTermQuery = 1;

class ActiveGuard {
 public:
  ActiveGuard(std::set<std::pair<int, Term>>& active, int query, const Term& t)
      : active_(active), key_(query, t) {
    if (!active_.insert(key_).second) throw UnguardedRecursion(t.name());
  }
  ~ActiveGuard() { active_.erase(key_); }
  ActiveGuard(const ActiveGuard&) = delete;
  ActiveGuard& operator=(const ActiveGuard&) = delete;

 private:
  std::set<std::pair<int, Term>>& active_;
  std::pair<int, Term> key_;
};

std::vector<Term> replace_arg(std::span<const Term> args, int i, Term x) {
  std::vector<Term> out(args.begin(), args.end());
  out[static_cast<std::size_t>(i - 1)] = std::move(x);
  return out;
}

std::vector<Term> without_arg(std::span<const Term> args, int i) {
  std::vector<Term> out;
  out.reserve(args.size() - 1);
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (static_cast<int>(k) != i - 1) out.push_back(args[k]);
  }
  return out;
}

}  // namespace

std::optional<int> acting_index(const Term& t, const strategy::Strategy& strat) {
  if (t.is(TermKind::PosSi)) return t.position();
  if (!t.is(TermKind::Si)) throw std::logic_error("acting_index on a non-interleaving term");
  auto i = strat.sched(t.arity(), t.history(), t.state());
  if (i && (*i < 1 || *i > t.arity())) {
    throw std::logic_error("scheduler returned an index out of range");
  }
  return i;
}

Semantics::Semantics(const SystemConfig& cfg, const strategy::Strategy& strat)
    : cfg_(cfg), strat_(strat) {}

const std::vector<Transition>& Semantics::step(const Term& t) {
  if (auto it = step_memo_.find(t); it != step_memo_.end()) return it->second;
  auto moves = compute_step(t);
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  return step_memo_.insert_or_assign(t, std::move(moves)).first->second;
}

bool Semantics::terminates(const Term& t) {
  if (auto it = term_memo_.find(t); it != term_memo_.end()) return it->second;
  const bool v = compute_terminates(t);
  term_memo_.emplace(t, v);
  return v;
}

void Semantics::check_declared(const std::string& action) const {
  if (!cfg_.declared(action)) throw UndeclaredAction(action);
}

const Term& Semantics::unfolded(const Term& rec_const) {
  if (auto it = unfold_memo_.find(rec_const); it != unfold_memo_.end()) return it->second;
  return unfold_memo_.emplace(rec_const, unfold(rec_const)).first->second;
}

std::vector<Transition> Semantics::compute_step(const Term& t) {
  std::vector<Transition> out;
  switch (t.kind()) {
    case TermKind::Delta:
    case TermKind::Epsilon:
      break;
    case TermKind::Action:
      check_declared(t.name());
      out.push_back({t.name(), Term::epsilon()});
      break;
    case TermKind::Alt: {
      out = step(t.lhs());
      const auto& r = step(t.rhs());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case TermKind::Seq: {
      for (const auto& [a, x] : step(t.lhs())) out.push_back({a, Term::seq(x, t.rhs())});
      if (terminates(t.lhs())) {
        const auto& r = step(t.rhs());
        out.insert(out.end(), r.begin(), r.end());
      }
      break;
    }
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge: {
      const Term& x = t.lhs();
      const Term& y = t.rhs();
      const auto& mx = step(x);
      const auto& my = step(y);
      if (!t.is(TermKind::CommMerge)) {
        for (const auto& [a, x1] : mx) out.push_back({a, Term::par(x1, y)});
      }
      if (t.is(TermKind::Par)) {
        for (const auto& [b, y1] : my) out.push_back({b, Term::par(x, y1)});
      }
      if (!t.is(TermKind::LeftMerge) && !cfg_.comm.empty()) {
        for (const auto& [a, x1] : mx) {
          for (const auto& [b, y1] : my) {
            if (auto c = cfg_.comm.apply(a, b)) out.push_back({*c, Term::par(x1, y1)});
          }
        }
      }
      break;
    }
    case TermKind::Encap:
      for (const auto& [a, x] : step(t.operand())) {
        if (!t.blocked().contains(a)) out.push_back({a, Term::encap(t.blocked(), x)});
      }
      break;
    case TermKind::Si:
    case TermKind::PosSi:
      if (auto i = acting_index(t, strat_)) interleave_moves(t, *i, out);
      break;
    case TermKind::RecConst: {
      ActiveGuard guard(active_, kStepQuery, t);
      out = step(unfolded(t));
      break;
    }
    case TermKind::Var:
      throw std::logic_error("step on an open term (variable " + t.name() + ")");
  }
  return out;
}

bool Semantics::compute_terminates(const Term& t) {
  switch (t.kind()) {
    case TermKind::Delta:
    case TermKind::Action:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return false;
    case TermKind::Epsilon:
      return true;
    case TermKind::Alt:
      return terminates(t.lhs()) || terminates(t.rhs());
    case TermKind::Seq:
    case TermKind::Par:
      return terminates(t.lhs()) && terminates(t.rhs());
    case TermKind::Encap:
      return terminates(t.operand());
    case TermKind::Si:
    case TermKind::PosSi: {
      auto i = acting_index(t, strat_);
      return i && interleave_terminates(t, *i);
    }
    case TermKind::RecConst: {
      ActiveGuard guard(active_, kTermQuery, t);
      return terminates(unfolded(t));
    }
    case TermKind::Var:
      throw std::logic_error("termination of an open term (variable " + t.name() + ")");
  }
  return false;
}

Term Semantics::drop_process(const Term& t, int i, const StepLabel& why) {
  const int n = t.arity();
  const Hist& h = t.history();
  return Term::si(h.extended(i, n - 1), strat_.updat(n, h, t.state(), i, why),
                  without_arg(t.args(), i));
}

void Semantics::interleave_moves(const Term& t, int i, std::vector<Transition>& out) {
  const int n = t.arity();
  const Hist& h = t.history();
  const ControlState& s = t.state();
  const auto args = t.args();
  const Term& x = args[static_cast<std::size_t>(i - 1)];

  const auto& moves = step(x);
  for (const auto& [a, x1] : moves) {
    const ActionClass* cls = cfg_.classify(a);
    const ActionKind kind = cls ? cls->kind : ActionKind::Plain;
    if (kind == ActionKind::CreateAct) continue;
    if (kind == ActionKind::CreateRequest) {
      auto spawned = replace_arg(args, i, x1);
      spawned.push_back(cfg_.creation_body(cls->ref));
      out.push_back({create_act_name(cls->ref),
                     Term::si(h.extended(i, n + 1), strat_.updat(n, h, s, i, StepLabel::act(a)),
                              std::move(spawned))});
      continue;
    }
    const std::string label = kind == ActionKind::Control ? bar_name(a) : a;
    out.push_back({label, Term::si(h.extended(i, n), strat_.updat(n, h, s, i, StepLabel::act(a)),
                                   replace_arg(args, i, x1))});
  }

  if (n > 1 && terminates(x)) {
    const auto& rest = step(drop_process(t, i, StepLabel::eps()));
    out.insert(out.end(), rest.begin(), rest.end());
  }

  if (cfg_.deadlock_mode == DeadlockMode::Deferred && n > 1 && moves.empty() && !terminates(x)) {
    for (const auto& [a, y] : step(drop_process(t, i, StepLabel::dead()))) {
      out.push_back({a, Term::seq(y, Term::delta())});
    }
  }
}

bool Semantics::interleave_terminates(const Term& t, int i) {
  const Term& x = t.args()[static_cast<std::size_t>(i - 1)];
  if (!terminates(x)) return false;
  if (t.arity() == 1) return true;
  return terminates(drop_process(t, i, StepLabel::eps()));
}

std::vector<Transition> step(const Term& t, const SystemConfig& cfg,
                             const strategy::Strategy& strat) {
  Semantics sem(cfg, strat);
  return sem.step(t);
}

bool terminates(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat) {
  Semantics sem(cfg, strat);
  return sem.terminates(t);
}

}  // namespace siacp::sos
