#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "siacp/kernel/term.hpp"

namespace siacp {

enum class ActionKind {
  Plain,
  Control,        // member of C
  Bar,            // c~ for a control action c
  CreateRequest,  // cr_d
  CreateAct,      // cr_d~
};

struct ActionClass {
  ActionKind kind = ActionKind::Plain;
  /// Base control action for Bar; datum name for CreateRequest/CreateAct.
  std::string ref;

  static ActionClass plain() { return {}; }
  static ActionClass control() { return {ActionKind::Control, {}}; }
  static ActionClass bar_of(std::string base) { return {ActionKind::Bar, std::move(base)}; }
  static ActionClass create_request(std::string datum) {
    return {ActionKind::CreateRequest, std::move(datum)};
  }
  static ActionClass create_act(std::string datum) {
    return {ActionKind::CreateAct, std::move(datum)};
  }

  friend bool operator==(const ActionClass&, const ActionClass&) = default;
};

std::string bar_name(const std::string& control_action);
std::string create_request_name(const std::string& datum);
std::string create_act_name(const std::string& datum);

/// Identifiers reserved by the term grammar.
bool is_keyword(const std::string& name);

/// The communication function γ as a finite table. Absent entries mean δ.
class CommTable {
 public:
  using Key = std::pair<std::string, std::string>;

  /// Sets γ(a, b) = c and γ(b, a) = c.
  void set(const std::string& a, const std::string& b, const std::string& c);
  /// Sets only γ(a, b) = c. Used to build (and test) asymmetric tables.
  void set_directed(const std::string& a, const std::string& b, const std::string& c);
  void erase(const std::string& a, const std::string& b);

  std::optional<std::string> apply(const std::string& a, const std::string& b) const;
  const std::map<Key, std::string>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<Key, std::string> entries_;
};

enum class DeadlockMode {
  Immediate,  // inaction of the scheduled process stops everything
  Deferred,   // the inactive process is dropped; the whole ends in δ
};

struct SystemConfig {
  std::map<std::string, ActionClass> alphabet;
  CommTable comm;
  /// φ: datum -> closed term.
  std::map<std::string, Term> creation;
  DeadlockMode deadlock_mode = DeadlockMode::Immediate;

  /// Adds or re-declares an action; throws std::invalid_argument when the
  /// name is already declared with a different class.
  void declare(const std::string& name, ActionClass cls = ActionClass::plain());
  /// Declares c as a control action together with its bar action.
  void declare_control(const std::string& c);
  /// Declares cr_d / cr_d~ and binds φ(d) = body.
  void declare_datum(const std::string& datum, Term body);

  bool declared(const std::string& name) const { return alphabet.contains(name); }
  /// nullptr when undeclared.
  const ActionClass* classify(const std::string& name) const;
  ActionKind kind_of(const std::string& name) const;
  bool is_control(const std::string& name) const { return kind_of(name) == ActionKind::Control; }
  std::set<std::string> control_actions() const;
  const Term& creation_body(const std::string& datum) const;
};

enum class ConfigViolationCode {
  ReservedName,
  MissingBar,
  BarWithoutControl,
  UndeclaredInComm,
  NotSymmetric,
  NotAssociative,
  CommYieldsReserved,  // γ(a,b) is a control, bar or creation action
  CommWithReserved,    // γ(a,c) defined for c a control, bar or creation action
  CreationMissing,     // cr_d declared without a body, or body without cr_d / cr_d~
  CreationNotClosed,
  CreationUndeclared,  // creation body uses undeclared actions
};

struct ConfigViolation {
  ConfigViolationCode code;
  std::string message;
};

using ValidationReport = std::vector<ConfigViolation>;

/// Lists every violated side condition; empty iff the configuration is admissible.
ValidationReport validate_config(const SystemConfig& cfg);

std::string to_string(ConfigViolationCode code);

}  // namespace siacp
