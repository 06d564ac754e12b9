#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siacp/rewrite/eliminate.hpp"

namespace siacp::rewrite {

namespace {

struct BasicHead {
  std::vector<std::pair<std::string, Term>> summands;
  bool eps = false;
};

class Canonicalizer {
 public:
  Term run(const Term& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    BasicHead h;
    head(t, Term::epsilon(), h);
    std::vector<std::pair<std::string, Term>> parts;
    parts.reserve(h.summands.size());
    for (auto& [a, rest] : h.summands) parts.emplace_back(a, run(rest));
    Term out = assemble_canonical(std::move(parts), h.eps);
    memo_.emplace(t, out);
    return out;
  }

 private:
  // Head of t.k where k is the pending continuation.
  void head(const Term& t, const Term& k, BasicHead& out) {
    switch (t.kind()) {
      case TermKind::Delta:
        return;
      case TermKind::Epsilon:
        if (k.is(TermKind::Epsilon)) {
          out.eps = true;
        } else {
          head(k, Term::epsilon(), out);
        }
        return;
      case TermKind::Action:
        out.summands.emplace_back(t.name(), k);
        return;
      case TermKind::Alt:
        head(t.lhs(), k, out);
        head(t.rhs(), k, out);
        return;
      case TermKind::Seq:
        head(t.lhs(), k.is(TermKind::Epsilon) ? t.rhs() : Term::seq(t.rhs(), k), out);
        return;
      default:
        throw std::invalid_argument("canonical_basic_form needs a basic term");
    }
  }

  std::unordered_map<Term, Term, TermHash> memo_;
};

}  // namespace

Term assemble_canonical(std::vector<std::pair<std::string, Term>> summands, bool eps) {
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
  std::vector<Term> terms;
  terms.reserve(summands.size() + 1);
  for (auto& [a, rest] : summands) {
    terms.push_back(rest.is(TermKind::Epsilon) ? Term::action(a) : Term::seq(Term::action(a), rest));
  }
  if (eps) terms.push_back(Term::epsilon());
  return Term::sum_of(terms);
}

Term canonical_basic_form(const Term& t) { return Canonicalizer().run(t); }

}  // namespace siacp::rewrite
