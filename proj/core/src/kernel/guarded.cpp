#include "siacp/kernel/guarded.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace siacp {

namespace {

bool guarded_walk(const Term& t, const std::set<std::string>& vars, bool under_prefix) {
  switch (t.kind()) {
    case TermKind::Var:
      return under_prefix || !vars.contains(t.name());
    case TermKind::Seq:
      if (t.lhs().is(TermKind::Action)) return guarded_walk(t.rhs(), vars, true);
      return guarded_walk(t.lhs(), vars, under_prefix) && guarded_walk(t.rhs(), vars, under_prefix);
    case TermKind::Alt:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return guarded_walk(t.lhs(), vars, under_prefix) && guarded_walk(t.rhs(), vars, under_prefix);
    case TermKind::Encap:
      return guarded_walk(t.operand(), vars, under_prefix);
    case TermKind::Si:
    case TermKind::PosSi:
      return std::all_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return guarded_walk(a, vars, under_prefix); });
    default:
      return true;
  }
}

struct NotShown {
  std::string reason;
};

struct Head {
  std::vector<std::pair<std::string, Term>> summands;
  bool eps = false;
};

class Guarder {
 public:
  Guarder(const RecSpec& spec, std::size_t budget, const CommTable* comm)
      : spec_(spec), vars_(spec.vars()), budget_(budget), comm_(comm) {}

  std::vector<std::string> trace;

  Term guard_equation(const std::string& var) {
    unfolding_.insert(var);
    return guard(spec_.body(var));
  }

 private:
  void tick() {
    if (++used_ > budget_) throw NotShown{"rewrite budget exhausted"};
  }

  Term build(const Head& h) {
    std::vector<Term> parts;
    for (const auto& [a, rest] : h.summands) parts.push_back(Term::seq(Term::action(a), rest));
    if (h.eps) parts.push_back(Term::epsilon());
    return Term::sum_of(parts);
  }

  Term guard(const Term& t) {
    if (is_syntactically_guarded(t, vars_)) return t;
    tick();
    switch (t.kind()) {
      case TermKind::Alt:
        return Term::alt(guard(t.lhs()), guard(t.rhs()));
      case TermKind::Encap:
        return Term::encap(t.blocked(), guard(t.operand()));
      case TermKind::Var: {
        const std::string& x = t.name();
        if (unfolding_.contains(x)) throw NotShown{"unguarded occurrence of " + x};
        unfolding_.insert(x);
        trace.push_back("unfold " + x);
        Term out = guard(spec_.body(x));
        unfolding_.erase(x);
        return out;
      }
      case TermKind::Si:
      case TermKind::PosSi:
        throw NotShown{"variable under strategic interleaving needs a strategy to expose a guard"};
      default:
        return build(head(t));
    }
  }

  Head head(const Term& t) {
    tick();
    Head out;
    switch (t.kind()) {
      case TermKind::Delta:
        return out;
      case TermKind::Epsilon:
        out.eps = true;
        return out;
      case TermKind::Action:
        trace.push_back("A8");
        out.summands.emplace_back(t.name(), Term::epsilon());
        return out;
      case TermKind::Alt: {
        Head l = head(t.lhs());
        Head r = head(t.rhs());
        out.summands = std::move(l.summands);
        out.summands.insert(out.summands.end(), r.summands.begin(), r.summands.end());
        out.eps = l.eps || r.eps;
        return out;
      }
      case TermKind::Seq: {
        if (t.lhs().is(TermKind::Action)) {
          out.summands.emplace_back(t.lhs().name(), t.rhs());
          return out;
        }
        Head l = head(t.lhs());
        if (l.summands.empty() && !l.eps) {
          trace.push_back("A7");
          return out;
        }
        if (!l.summands.empty()) trace.push_back("A4/A5");
        for (auto& [a, rest] : l.summands) out.summands.emplace_back(a, Term::seq(rest, t.rhs()));
        if (l.eps) {
          trace.push_back("A9");
          Head r = head(t.rhs());
          out.summands.insert(out.summands.end(), r.summands.begin(), r.summands.end());
          out.eps = r.eps;
        }
        return out;
      }
      case TermKind::Var: {
        const std::string& x = t.name();
        if (!vars_.contains(x)) throw NotShown{"free variable " + x};
        if (unfolding_.contains(x)) throw NotShown{"unguarded occurrence of " + x};
        unfolding_.insert(x);
        trace.push_back("unfold " + x);
        out = head(spec_.body(x));
        unfolding_.erase(x);
        return out;
      }
      case TermKind::RecConst: {
        if (!active_consts_.insert(t).second) {
          throw NotShown{"unguarded recursion constant " + t.name()};
        }
        trace.push_back("RDP");
        out = head(unfold(t));
        active_consts_.erase(t);
        return out;
      }
      case TermKind::Encap: {
        Head x = head(t.operand());
        trace.push_back("D0-D4");
        for (auto& [a, rest] : x.summands) {
          if (!t.blocked().contains(a)) out.summands.emplace_back(a, Term::encap(t.blocked(), rest));
        }
        out.eps = x.eps;
        return out;
      }
      case TermKind::Par:
      case TermKind::LeftMerge:
      case TermKind::CommMerge: {
        const Term& x = t.lhs();
        const Term& y = t.rhs();
        Head hx = head(x);
        Head hy = t.is(TermKind::LeftMerge) ? Head{} : head(y);
        const bool par = t.is(TermKind::Par);
        trace.push_back(par ? "CM1T" : (t.is(TermKind::LeftMerge) ? "CM2T-CM4" : "CM5T-CM12"));
        if (!t.is(TermKind::CommMerge)) {
          for (auto& [a, rest] : hx.summands) out.summands.emplace_back(a, Term::par(rest, y));
        }
        if (par) {
          for (auto& [b, rest] : hy.summands) out.summands.emplace_back(b, Term::par(rest, x));
        }
        if (!t.is(TermKind::LeftMerge) && comm_) {
          for (auto& [a, ra] : hx.summands) {
            for (auto& [b, rb] : hy.summands) {
              if (auto c = comm_->apply(a, b)) out.summands.emplace_back(*c, Term::par(ra, rb));
            }
          }
        }
        out.eps = par && hx.eps && hy.eps;
        return out;
      }
      case TermKind::Si:
      case TermKind::PosSi:
        throw NotShown{"strategic interleaving in head position needs a strategy"};
    }
    return out;
  }

  const RecSpec& spec_;
  std::set<std::string> vars_;
  std::size_t budget_;
  const CommTable* comm_;
  std::size_t used_ = 0;
  std::set<std::string> unfolding_;
  std::set<Term> active_consts_;
};

}  // namespace

bool is_syntactically_guarded(const Term& t, const std::set<std::string>& vars) {
  return guarded_walk(t, vars, false);
}

bool GuardednessReport::all_guarded() const {
  return std::all_of(equations.begin(), equations.end(), [](const EquationGuardedness& e) {
    return e.verdict != Guardedness::NotShownGuarded;
  });
}

const EquationGuardedness& GuardednessReport::of(const std::string& var) const {
  for (const auto& e : equations) {
    if (e.var == var) return e;
  }
  throw std::out_of_range("no equation for " + var);
}

GuardednessReport check_guarded(const RecSpec& spec, std::size_t rewrite_budget,
                                const CommTable* comm) {
  GuardednessReport report;
  const auto vars = spec.vars();
  for (const auto& [var, body] : spec.equations()) {
    EquationGuardedness eq;
    eq.var = var;
    const auto foreign = free_vars(body);
    auto stray = std::find_if(foreign.begin(), foreign.end(),
                              [&](const std::string& v) { return !vars.contains(v); });
    if (stray != foreign.end()) {
      eq.reason = "free variable " + *stray + " not defined by the specification";
    } else if (is_syntactically_guarded(body, vars)) {
      eq.verdict = Guardedness::SyntacticallyGuarded;
      eq.witness = body;
    } else {
      Guarder g(spec, rewrite_budget, comm);
      try {
        Term w = g.guard_equation(var);
        if (is_syntactically_guarded(w, vars)) {
          eq.verdict = Guardedness::GuardedAfterRewriting;
          eq.witness = std::move(w);
          eq.rewrite_steps = std::move(g.trace);
        } else {
          eq.reason = "rewriting did not expose a guard";
        }
      } catch (const NotShown& e) {
        eq.reason = e.reason;
        eq.rewrite_steps = std::move(g.trace);
      }
    }
    report.equations.push_back(std::move(eq));
  }
  return report;
}

std::string to_string(Guardedness g) {
  switch (g) {
    case Guardedness::SyntacticallyGuarded: return "syntactically-guarded";
    case Guardedness::GuardedAfterRewriting: return "guarded-after-rewriting";
    case Guardedness::NotShownGuarded: return "not-shown-guarded";
  }
  return "unknown";
}

}  // namespace siacp
