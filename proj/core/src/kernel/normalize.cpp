#include "siacp/kernel/normalize.hpp"

#include <algorithm>
#include <vector>

namespace siacp {

namespace {

void collect_summands(const Term& t, std::vector<Term>& out) {
  if (t.is(TermKind::Alt)) {
    collect_summands(t.lhs(), out);
    collect_summands(t.rhs(), out);
  } else if (!t.is(TermKind::Delta)) {
    out.push_back(t);
  }
}

Term make_sum(Term x, Term y) {
  std::vector<Term> parts;
  collect_summands(x, parts);
  collect_summands(y, parts);
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return Term::sum_of(parts);
}

// Both operands already normalized.
Term make_seq(const Term& x, const Term& y) {
  if (x.is(TermKind::Delta)) return x;
  if (x.is(TermKind::Epsilon)) return y;
  if (y.is(TermKind::Epsilon)) return x;
  if (x.is(TermKind::Seq)) return make_seq(x.lhs(), make_seq(x.rhs(), y));
  return Term::seq(x, y);
}

Term make_par(const Term& x, const Term& y) {
  if (x.is(TermKind::Epsilon)) return y;
  if (y.is(TermKind::Epsilon)) return x;
  if (y < x) return Term::par(y, x);
  return Term::par(x, y);
}

class Normalizer {
 public:
  explicit Normalizer(const HistDigest& digest) : digest_(digest) {}

  Term run(const Term& t) {
    switch (t.kind()) {
      case TermKind::Delta:
      case TermKind::Epsilon:
      case TermKind::Action:
      case TermKind::Var:
      case TermKind::RecConst:
        return t;
      case TermKind::Alt:
        return make_sum(run(t.lhs()), run(t.rhs()));
      case TermKind::Seq:
        return make_seq(run(t.lhs()), run(t.rhs()));
      case TermKind::Par:
        return make_par(run(t.lhs()), run(t.rhs()));
      case TermKind::LeftMerge:
        return Term::left_merge(run(t.lhs()), run(t.rhs()));
      case TermKind::CommMerge:
        return Term::comm_merge(run(t.lhs()), run(t.rhs()));
      case TermKind::Encap: {
        Term x = run(t.operand());
        if (x.is(TermKind::Epsilon) || x.is(TermKind::Delta) || t.blocked().empty()) return x;
        return Term::encap(t.blocked(), std::move(x));
      }
      case TermKind::Si:
      case TermKind::PosSi: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(run(a));
        Hist h = digest_ ? digest_(t.history()) : t.history();
        if (t.is(TermKind::Si)) return Term::si(std::move(h), t.state(), std::move(args));
        return Term::pos_si(t.position(), std::move(h), t.state(), std::move(args));
      }
    }
    return t;
  }

 private:
  const HistDigest& digest_;
};

}  // namespace

Term normalize(const Term& t, const HistDigest& digest) { return Normalizer(digest).run(t); }

}  // namespace siacp
