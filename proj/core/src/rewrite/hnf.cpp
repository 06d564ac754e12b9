#include "siacp/rewrite/hnf.hpp"

#include <algorithm>
#include <stdexcept>

#include "siacp/kernel/error.hpp"

namespace siacp::rewrite {

using strategy::StepLabel;

Term Hnf::to_term() const {
  std::vector<Term> parts;
  parts.reserve(summands.size() + 1);
  for (const auto& [a, x] : summands) parts.push_back(Term::seq(Term::action(a), x));
  if (has_epsilon) parts.push_back(Term::epsilon());
  return Term::sum_of(parts);
}

Hnf Hnf::canonical(const HistDigest& digest) const {
  Hnf out;
  out.has_epsilon = has_epsilon;
  for (const auto& [a, x] : summands) out.summands.emplace_back(a, normalize(x, digest));
  std::sort(out.summands.begin(), out.summands.end());
  out.summands.erase(std::unique(out.summands.begin(), out.summands.end()), out.summands.end());
  return out;
}

namespace {

void absorb(Hnf& into, const Hnf& from) {
  into.summands.insert(into.summands.end(), from.summands.begin(), from.summands.end());
  into.has_epsilon = into.has_epsilon || from.has_epsilon;
}

std::vector<Term> replace_arg(std::span<const Term> args, int i, Term x) {
  std::vector<Term> out(args.begin(), args.end());
  out[static_cast<std::size_t>(i - 1)] = std::move(x);
  return out;
}

std::vector<Term> without_arg(std::span<const Term> args, int i) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (static_cast<int>(k) != i - 1) out.push_back(args[k]);
  }
  return out;
}

}  // namespace

Rewriter::Rewriter(const SystemConfig& cfg, const strategy::Strategy& strat, RewriteOptions opts)
    : cfg_(cfg), strat_(strat), opts_(opts) {}

const Hnf& Rewriter::hnf(const Term& t) {
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  if (memo_.size() >= opts_.budget) {
    throw BudgetExceeded("rewrite budget of " + std::to_string(opts_.budget) + " terms exhausted");
  }
  Hnf h = compute(t);
  std::sort(h.summands.begin(), h.summands.end());
  h.summands.erase(std::unique(h.summands.begin(), h.summands.end()), h.summands.end());
  return memo_.insert_or_assign(t, std::move(h)).first->second;
}

Hnf Rewriter::compute(const Term& t) {
  switch (t.kind()) {
    case TermKind::Delta:
      return {};
    case TermKind::Epsilon:
      return {{}, true};
    case TermKind::Action:
      // A8: a = a.ε
      if (!cfg_.declared(t.name())) throw UndeclaredAction(t.name());
      return {{{t.name(), Term::epsilon()}}, false};
    case TermKind::Alt:
      return alternative(t.lhs(), t.rhs());
    case TermKind::Seq:
      return sequential(t.lhs(), t.rhs());
    case TermKind::Par:
      return merge(t.lhs(), t.rhs());
    case TermKind::LeftMerge:
      return left_merge(hnf(t.lhs()), t.rhs());
    case TermKind::CommMerge:
      return comm_merge(hnf(t.lhs()), hnf(t.rhs()));
    case TermKind::Encap:
      return encapsulation(t.blocked(), t.operand());
    case TermKind::RecConst:
      return recursion(t);
    case TermKind::Si:
    case TermKind::PosSi:
      if (!opts_.si_axioms) throw std::logic_error("strategic interleaving axioms are disabled");
      return t.is(TermKind::Si) ? strategic(t) : positional(t, t.position());
    case TermKind::Var:
      throw std::logic_error("head normal form of an open term (variable " + t.name() + ")");
  }
  return {};
}

// A1-A3: summands of both sides; duplicates go when the result is tidied.
Hnf Rewriter::alternative(const Term& x, const Term& y) {
  Hnf out = hnf(x);
  absorb(out, hnf(y));
  return out;
}

// A4 (x + y).z = x.z + y.z, A5 (x.y).z = x.(y.z), A7 δ.x = δ, A9 ε.x = x.
Hnf Rewriter::sequential(const Term& x, const Term& y) {
  const Hnf& hx = hnf(x);
  Hnf out;
  for (const auto& [a, x1] : hx.summands) out.summands.emplace_back(a, Term::seq(x1, y));
  if (hx.has_epsilon) absorb(out, hnf(y));
  return out;
}

// CM1T x || y = x |_ y + y |_ x + x | y + encap_A(x).encap_A(y). The last
// summand is ε when both sides can terminate and δ otherwise.
Hnf Rewriter::merge(const Term& x, const Term& y) {
  const Hnf hx = hnf(x);
  const Hnf hy = hnf(y);
  Hnf out = left_merge(hx, y);
  absorb(out, left_merge(hy, x));
  absorb(out, comm_merge(hx, hy));
  out.has_epsilon = hx.has_epsilon && hy.has_epsilon;
  return out;
}

// CM2T ε |_ x = δ, CM3 a.x |_ y = a.(x || y), CM4 (x + y) |_ z = x |_ z + y |_ z.
Hnf Rewriter::left_merge(const Hnf& hx, const Term& y) {
  Hnf out;
  for (const auto& [a, x1] : hx.summands) out.summands.emplace_back(a, Term::par(x1, y));
  return out;
}

// CM5T-CM12: a.x | b.y = γ(a,b).(x || y), distributed over +; ε and δ
// operands contribute δ.
Hnf Rewriter::comm_merge(const Hnf& hx, const Hnf& hy) {
  Hnf out;
  if (cfg_.comm.empty()) return out;
  for (const auto& [a, x1] : hx.summands) {
    for (const auto& [b, y1] : hy.summands) {
      if (auto c = cfg_.comm.apply(a, b)) out.summands.emplace_back(*c, Term::par(x1, y1));
    }
  }
  return out;
}

// D0 encap(ε) = ε, D1 encap(δ) = δ, D2/D3 on action constants, D4 over + and .
Hnf Rewriter::encapsulation(const ActionSet& blocked, const Term& x) {
  const Hnf& hx = hnf(x);
  Hnf out;
  out.has_epsilon = hx.has_epsilon;
  for (const auto& [a, x1] : hx.summands) {
    if (!blocked.contains(a)) out.summands.emplace_back(a, Term::encap(blocked, x1));
  }
  return out;
}

// RDP: <X|E> = <t_X|E>.
Hnf Rewriter::recursion(const Term& rec_const) {
  if (!unfolding_.insert(rec_const).second) throw UnguardedRecursion(rec_const.name());
  struct Pop {
    std::set<Term>& s;
    const Term& t;
    ~Pop() { s.erase(t); }
  } pop{unfolding_, rec_const};
  return hnf(unfold(rec_const));
}

// SI0 when sched is undefined, SI1 otherwise.
Hnf Rewriter::strategic(const Term& t) {
  auto i = strat_.sched(t.arity(), t.history(), t.state());
  if (!i) return {};
  if (*i < 1 || *i > t.arity()) throw std::logic_error("scheduler returned an index out of range");
  return positional(t, *i);
}

// SI8 distributes over the summands of the scheduled argument; each summand
// is then dispatched to SI7 (creation), SI5Tb (control), SI5Ta (other
// action), SI3T/SI4T (ε) and SI2 or SI2a/SI2b (δ).
Hnf Rewriter::positional(const Term& t, int i) {
  const int n = t.arity();
  const Hist& h = t.history();
  const ControlState& s = t.state();
  const auto args = t.args();
  const Hnf hx = hnf(args[static_cast<std::size_t>(i - 1)]);

  Hnf out;
  for (const auto& [a, x1] : hx.summands) {
    const ActionClass* cls = cfg_.classify(a);
    const ActionKind kind = cls ? cls->kind : ActionKind::Plain;
    switch (kind) {
      case ActionKind::CreateRequest: {
        auto spawned = replace_arg(args, i, x1);
        spawned.push_back(cfg_.creation_body(cls->ref));
        out.summands.emplace_back(
            create_act_name(cls->ref),
            Term::si(h.extended(i, n + 1), strat_.updat(n, h, s, i, StepLabel::act(a)),
                     std::move(spawned)));
        break;
      }
      case ActionKind::CreateAct:
        // No axiom covers a created-process marker in argument position.
        break;
      case ActionKind::Control:
        out.summands.emplace_back(
            bar_name(a), Term::si(h.extended(i, n), strat_.updat(n, h, s, i, StepLabel::act(a)),
                                  replace_arg(args, i, x1)));
        break;
      default:
        out.summands.emplace_back(
            a, Term::si(h.extended(i, n), strat_.updat(n, h, s, i, StepLabel::act(a)),
                        replace_arg(args, i, x1)));
        break;
    }
  }

  if (hx.has_epsilon) {
    if (n == 1) {
      out.has_epsilon = true;  // SI3T
    } else {
      // SI4T
      const Term rest = Term::si(h.extended(i, n - 1), strat_.updat(n, h, s, i, StepLabel::eps()),
                                 without_arg(args, i));
      absorb(out, hnf(rest));
    }
  }

  if (hx.is_delta() && n > 1 && cfg_.deadlock_mode == DeadlockMode::Deferred) {
    // SI2b; SI2 and SI2a give δ, which adds nothing.
    const Term rest = Term::si(h.extended(i, n - 1), strat_.updat(n, h, s, i, StepLabel::dead()),
                               without_arg(args, i));
    absorb(out, sequential(rest, Term::delta()));
  }
  return out;
}

Hnf head_normal_form(const Term& t, const SystemConfig& cfg, const strategy::Strategy& strat,
                     RewriteOptions opts) {
  Rewriter rw(cfg, strat, opts);
  return rw.hnf(t);
}

}  // namespace siacp::rewrite
