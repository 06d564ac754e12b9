#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "siacp/kernel/control_state.hpp"
#include "siacp/kernel/hist.hpp"

namespace siacp {

enum class TermKind : std::uint8_t {
  Delta,
  Epsilon,
  Action,
  Alt,        // x + y
  Seq,        // x . y
  Par,        // x || y
  LeftMerge,  // x |_ y
  CommMerge,  // x | y
  Encap,      // encap{H}(x)
  Si,         // strategic interleaving over n arguments
  PosSi,      // positional strategic interleaving
  RecConst,   // <X|E>
  Var,        // variable, only inside recursive specification bodies
};

using ActionSet = std::set<std::string>;

class RecSpec;

namespace detail {
struct TermNode;
}

/// Immutable, structurally shared process term. Copying is cheap.
///
/// Equality and ordering are structural. The total order is used to
/// ACI-normalize sums and to order summands reproducibly.
class Term {
 public:
  /// δ.
  Term();

  static Term delta();
  static Term epsilon();
  static Term action(std::string name);
  static Term alt(Term x, Term y);
  static Term seq(Term x, Term y);
  static Term par(Term x, Term y);
  static Term left_merge(Term x, Term y);
  static Term comm_merge(Term x, Term y);
  static Term encap(ActionSet blocked, Term x);
  /// n = args.size(), which must be positive.
  static Term si(Hist h, ControlState s, std::vector<Term> args);
  /// 1 <= position <= args.size().
  static Term pos_si(int position, Hist h, ControlState s, std::vector<Term> args);
  /// Requires `var` to be defined by `spec`.
  static Term rec(std::string var, std::shared_ptr<const RecSpec> spec);
  static Term variable(std::string name);

  /// Right-nested sequence / left-nested sum of a nonempty list.
  static Term seq_of(std::span<const Term> parts);
  static Term sum_of(std::span<const Term> summands);

  TermKind kind() const noexcept;
  bool is(TermKind k) const noexcept { return kind() == k; }

  /// Action name, variable name, or the selected variable of a RecConst.
  const std::string& name() const;
  const Term& lhs() const;
  const Term& rhs() const;
  /// Operand of Encap.
  const Term& operand() const;
  const ActionSet& blocked() const;

  std::span<const Term> args() const;
  int arity() const;
  int position() const;
  const Hist& history() const;
  const ControlState& state() const;

  const RecSpec& spec() const;
  const std::shared_ptr<const RecSpec>& spec_ptr() const;

  std::size_t hash() const noexcept;
  /// Identity of the shared node, for memo tables keyed by pointer.
  const void* identity() const noexcept;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::TermNode> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// A finite set of recursion equations X = t with distinct left-hand sides.
class RecSpec {
 public:
  explicit RecSpec(std::map<std::string, Term> equations);

  const std::map<std::string, Term>& equations() const noexcept { return equations_; }
  bool defines(const std::string& var) const { return equations_.contains(var); }
  const Term& body(const std::string& var) const;
  std::set<std::string> vars() const;

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const RecSpec& a, const RecSpec& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const RecSpec& a, const RecSpec& b);

 private:
  std::map<std::string, Term> equations_;
  std::size_t hash_ = 0;
};

/// ⟨t|E⟩: every variable of E occurring free in t replaced by ⟨Y|E⟩. Nested
/// RecConst nodes are left alone since their bodies bind their own variables.
Term substitute_constants(const Term& t, const std::shared_ptr<const RecSpec>& spec);

/// RDP unfolding of ⟨X|E⟩: the body of X with every Y ∈ vars(E) replaced by ⟨Y|E⟩.
Term unfold(const Term& rec_const);

/// Variables occurring outside of RecConst nodes.
std::set<std::string> free_vars(const Term& t);
bool is_closed(const Term& t);

/// Every action name occurring in t, including inside recursion bodies.
ActionSet actions_of(const Term& t);

/// Only δ, ε, action constants, + and . occur.
bool is_basic(const Term& t);

/// Number of nodes, counting recursion constants as leaves.
std::size_t term_size(const Term& t);

}  // namespace siacp

template <>
struct std::hash<siacp::Term> {
  std::size_t operator()(const siacp::Term& t) const noexcept { return t.hash(); }
};
