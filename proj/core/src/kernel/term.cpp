#include "siacp/kernel/term.hpp"

#include <stdexcept>

#include "siacp/kernel/error.hpp"

namespace siacp {

namespace detail {

struct TermNode {
  TermKind kind = TermKind::Delta;
  std::size_t hash = 0;
  std::string name{};
  std::vector<Term> children{};
  int position = 0;
  Hist hist{};
  ControlState state{};
  std::shared_ptr<const ActionSet> blocked{};
  std::shared_ptr<const RecSpec> spec{};
};

}  // namespace detail

namespace {

using detail::TermNode;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t compute_hash(const TermNode& n) {
  std::size_t h = std::hash<int>{}(static_cast<int>(n.kind)) * 0x100000001b3ull;
  h = mix(h, std::hash<std::string>{}(n.name));
  for (const Term& c : n.children) h = mix(h, c.hash());
  h = mix(h, static_cast<std::size_t>(n.position));
  if (n.kind == TermKind::Si || n.kind == TermKind::PosSi) {
    h = mix(h, n.hist.hash());
    h = mix(h, n.state.hash());
  }
  if (n.blocked) {
    for (const auto& a : *n.blocked) h = mix(h, std::hash<std::string>{}(a));
  }
  if (n.spec) h = mix(h, n.spec->hash());
  return h;
}

std::shared_ptr<const TermNode> finish(TermNode node) {
  node.hash = compute_hash(node);
  return std::make_shared<const TermNode>(std::move(node));
}

const TermNode& require(const std::shared_ptr<const TermNode>& n, bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("term accessor misuse: ") + what);
  return *n;
}

template <class T>
std::strong_ordering cmp_seq(std::span<const T> a, std::span<const T> b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k) {
    if (auto c = a[k] <=> b[k]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering cmp_str(const std::string& a, const std::string& b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

Term::Term() : node_(delta().node_) {}

Term Term::delta() {
  static const auto node = finish(TermNode{.kind = TermKind::Delta});
  return Term(node);
}

Term Term::epsilon() {
  static const auto node = finish(TermNode{.kind = TermKind::Epsilon});
  return Term(node);
}

Term Term::action(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty action name");
  return Term(finish(TermNode{.kind = TermKind::Action, .name = std::move(name)}));
}

Term Term::alt(Term x, Term y) {
  TermNode n{.kind = TermKind::Alt};
  n.children = {std::move(x), std::move(y)};
  return Term(finish(std::move(n)));
}

Term Term::seq(Term x, Term y) {
  TermNode n{.kind = TermKind::Seq};
  n.children = {std::move(x), std::move(y)};
  return Term(finish(std::move(n)));
}

Term Term::par(Term x, Term y) {
  TermNode n{.kind = TermKind::Par};
  n.children = {std::move(x), std::move(y)};
  return Term(finish(std::move(n)));
}

Term Term::left_merge(Term x, Term y) {
  TermNode n{.kind = TermKind::LeftMerge};
  n.children = {std::move(x), std::move(y)};
  return Term(finish(std::move(n)));
}

Term Term::comm_merge(Term x, Term y) {
  TermNode n{.kind = TermKind::CommMerge};
  n.children = {std::move(x), std::move(y)};
  return Term(finish(std::move(n)));
}

Term Term::encap(ActionSet blocked, Term x) {
  TermNode n{.kind = TermKind::Encap};
  n.children = {std::move(x)};
  n.blocked = std::make_shared<const ActionSet>(std::move(blocked));
  return Term(finish(std::move(n)));
}

Term Term::si(Hist h, ControlState s, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("strategic interleaving needs at least one argument");
  TermNode n{.kind = TermKind::Si};
  n.children = std::move(args);
  n.hist = std::move(h);
  n.state = std::move(s);
  return Term(finish(std::move(n)));
}

Term Term::pos_si(int position, Hist h, ControlState s, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("strategic interleaving needs at least one argument");
  if (position < 1 || position > static_cast<int>(args.size())) {
    throw std::invalid_argument("positional interleaving index out of range");
  }
  TermNode n{.kind = TermKind::PosSi};
  n.children = std::move(args);
  n.position = position;
  n.hist = std::move(h);
  n.state = std::move(s);
  return Term(finish(std::move(n)));
}

Term Term::rec(std::string var, std::shared_ptr<const RecSpec> spec) {
  if (!spec || !spec->defines(var)) {
    throw std::invalid_argument("recursion constant <" + var + "|E> with " + var + " not in vars(E)");
  }
  TermNode n{.kind = TermKind::RecConst, .name = std::move(var)};
  n.spec = std::move(spec);
  return Term(finish(std::move(n)));
}

Term Term::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Term(finish(TermNode{.kind = TermKind::Var, .name = std::move(name)}));
}

Term Term::seq_of(std::span<const Term> parts) {
  if (parts.empty()) throw std::invalid_argument("seq_of: empty list");
  Term acc = parts.back();
  for (std::size_t k = parts.size() - 1; k-- > 0;) acc = seq(parts[k], acc);
  return acc;
}

Term Term::sum_of(std::span<const Term> summands) {
  if (summands.empty()) return delta();
  Term acc = summands.front();
  for (std::size_t k = 1; k < summands.size(); ++k) acc = alt(acc, summands[k]);
  return acc;
}

TermKind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  const auto k = kind();
  return require(node_, k == TermKind::Action || k == TermKind::Var || k == TermKind::RecConst,
                 "name")
      .name;
}

const Term& Term::lhs() const {
  const auto k = kind();
  const bool ok = k == TermKind::Alt || k == TermKind::Seq || k == TermKind::Par ||
                  k == TermKind::LeftMerge || k == TermKind::CommMerge;
  return require(node_, ok, "lhs").children[0];
}

const Term& Term::rhs() const {
  const auto k = kind();
  const bool ok = k == TermKind::Alt || k == TermKind::Seq || k == TermKind::Par ||
                  k == TermKind::LeftMerge || k == TermKind::CommMerge;
  return require(node_, ok, "rhs").children[1];
}

const Term& Term::operand() const {
  return require(node_, kind() == TermKind::Encap, "operand").children[0];
}

const ActionSet& Term::blocked() const {
  return *require(node_, kind() == TermKind::Encap, "blocked").blocked;
}

std::span<const Term> Term::args() const {
  const auto k = kind();
  return require(node_, k == TermKind::Si || k == TermKind::PosSi, "args").children;
}

int Term::arity() const { return static_cast<int>(args().size()); }

int Term::position() const {
  return require(node_, kind() == TermKind::PosSi, "position").position;
}

const Hist& Term::history() const {
  const auto k = kind();
  return require(node_, k == TermKind::Si || k == TermKind::PosSi, "history").hist;
}

const ControlState& Term::state() const {
  const auto k = kind();
  return require(node_, k == TermKind::Si || k == TermKind::PosSi, "state").state;
}

const RecSpec& Term::spec() const { return *spec_ptr(); }

const std::shared_ptr<const RecSpec>& Term::spec_ptr() const {
  return require(node_, kind() == TermKind::RecConst, "spec").spec;
}

std::size_t Term::hash() const noexcept { return node_->hash; }

const void* Term::identity() const noexcept { return node_.get(); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const TermNode& x = *a.node_;
  const TermNode& y = *b.node_;
  if (x.kind != y.kind) return x.kind <=> y.kind;
  switch (x.kind) {
    case TermKind::Delta:
    case TermKind::Epsilon:
      return std::strong_ordering::equal;
    case TermKind::Action:
    case TermKind::Var:
      return cmp_str(x.name, y.name);
    case TermKind::Alt:
    case TermKind::Seq:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return cmp_seq<Term>(x.children, y.children);
    case TermKind::Encap: {
      if (*x.blocked != *y.blocked) {
        return *x.blocked < *y.blocked ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return x.children[0] <=> y.children[0];
    }
    case TermKind::Si:
    case TermKind::PosSi: {
      if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
      if (auto c = x.position <=> y.position; c != 0) return c;
      if (auto c = x.hist <=> y.hist; c != 0) return c;
      if (auto c = x.state <=> y.state; c != 0) return c;
      return cmp_seq<Term>(x.children, y.children);
    }
    case TermKind::RecConst: {
      if (auto c = cmp_str(x.name, y.name); c != 0) return c;
      if (x.spec == y.spec) return std::strong_ordering::equal;
      return *x.spec <=> *y.spec;
    }
  }
  return std::strong_ordering::equal;
}

RecSpec::RecSpec(std::map<std::string, Term> equations) : equations_(std::move(equations)) {
  if (equations_.empty()) throw std::invalid_argument("empty recursive specification");
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& [var, body] : equations_) {
    h = mix(h, std::hash<std::string>{}(var));
    h = mix(h, body.hash());
  }
  hash_ = h;
}

const Term& RecSpec::body(const std::string& var) const {
  auto it = equations_.find(var);
  if (it == equations_.end()) throw std::out_of_range("no equation for " + var);
  return it->second;
}

std::set<std::string> RecSpec::vars() const {
  std::set<std::string> out;
  for (const auto& [var, body] : equations_) out.insert(var);
  return out;
}

std::strong_ordering operator<=>(const RecSpec& a, const RecSpec& b) {
  if (&a == &b) return std::strong_ordering::equal;
  auto ia = a.equations_.begin();
  auto ib = b.equations_.begin();
  for (; ia != a.equations_.end() && ib != b.equations_.end(); ++ia, ++ib) {
    if (auto c = cmp_str(ia->first, ib->first); c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  return a.equations_.size() <=> b.equations_.size();
}

namespace {

Term rebuild_binary(const Term& t, Term x, Term y) {
  switch (t.kind()) {
    case TermKind::Alt: return Term::alt(std::move(x), std::move(y));
    case TermKind::Seq: return Term::seq(std::move(x), std::move(y));
    case TermKind::Par: return Term::par(std::move(x), std::move(y));
    case TermKind::LeftMerge: return Term::left_merge(std::move(x), std::move(y));
    case TermKind::CommMerge: return Term::comm_merge(std::move(x), std::move(y));
    default: throw std::logic_error("rebuild_binary on non-binary term");
  }
}

}  // namespace

Term substitute_constants(const Term& t, const std::shared_ptr<const RecSpec>& spec) {
  switch (t.kind()) {
    case TermKind::Delta:
    case TermKind::Epsilon:
    case TermKind::Action:
    case TermKind::RecConst:
      return t;
    case TermKind::Var:
      return spec->defines(t.name()) ? Term::rec(t.name(), spec) : t;
    case TermKind::Alt:
    case TermKind::Seq:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return rebuild_binary(t, substitute_constants(t.lhs(), spec),
                            substitute_constants(t.rhs(), spec));
    case TermKind::Encap:
      return Term::encap(t.blocked(), substitute_constants(t.operand(), spec));
    case TermKind::Si:
    case TermKind::PosSi: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(substitute_constants(a, spec));
      if (t.is(TermKind::Si)) return Term::si(t.history(), t.state(), std::move(args));
      return Term::pos_si(t.position(), t.history(), t.state(), std::move(args));
    }
  }
  return t;
}

Term unfold(const Term& rec_const) {
  if (!rec_const.is(TermKind::RecConst)) throw std::invalid_argument("unfold: not a recursion constant");
  return substitute_constants(rec_const.spec().body(rec_const.name()), rec_const.spec_ptr());
}

namespace {

void collect_free_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out.insert(t.name());
      return;
    case TermKind::Alt:
    case TermKind::Seq:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      collect_free_vars(t.lhs(), out);
      collect_free_vars(t.rhs(), out);
      return;
    case TermKind::Encap:
      collect_free_vars(t.operand(), out);
      return;
    case TermKind::Si:
    case TermKind::PosSi:
      for (const Term& a : t.args()) collect_free_vars(a, out);
      return;
    default:
      return;
  }
}

void collect_actions(const Term& t, ActionSet& out, std::set<const RecSpec*>& seen) {
  switch (t.kind()) {
    case TermKind::Action:
      out.insert(t.name());
      return;
    case TermKind::Alt:
    case TermKind::Seq:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      collect_actions(t.lhs(), out, seen);
      collect_actions(t.rhs(), out, seen);
      return;
    case TermKind::Encap:
      out.insert(t.blocked().begin(), t.blocked().end());
      collect_actions(t.operand(), out, seen);
      return;
    case TermKind::Si:
    case TermKind::PosSi:
      for (const Term& a : t.args()) collect_actions(a, out, seen);
      return;
    case TermKind::RecConst:
      if (seen.insert(&t.spec()).second) {
        for (const auto& [var, body] : t.spec().equations()) collect_actions(body, out, seen);
      }
      return;
    default:
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free_vars(t, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

ActionSet actions_of(const Term& t) {
  ActionSet out;
  std::set<const RecSpec*> seen;
  collect_actions(t, out, seen);
  return out;
}

bool is_basic(const Term& t) {
  switch (t.kind()) {
    case TermKind::Delta:
    case TermKind::Epsilon:
    case TermKind::Action:
      return true;
    case TermKind::Alt:
    case TermKind::Seq:
      return is_basic(t.lhs()) && is_basic(t.rhs());
    default:
      return false;
  }
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case TermKind::Alt:
    case TermKind::Seq:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return 1 + term_size(t.lhs()) + term_size(t.rhs());
    case TermKind::Encap:
      return 1 + term_size(t.operand());
    case TermKind::Si:
    case TermKind::PosSi: {
      std::size_t n = 1;
      for (const Term& a : t.args()) n += term_size(a);
      return n;
    }
    default:
      return 1;
  }
}

}  // namespace siacp
