#include "siacp/kernel/system.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace siacp {

std::string bar_name(const std::string& control_action) { return control_action + "~"; }
std::string create_request_name(const std::string& datum) { return "cr_" + datum; }
std::string create_act_name(const std::string& datum) { return "cr_" + datum + "~"; }

bool is_keyword(const std::string& name) {
  static const std::array<const char*, 7> words = {"delta", "eps", "si", "pos", "rec", "encap",
                                                   "init"};
  return std::any_of(words.begin(), words.end(), [&](const char* w) { return name == w; });
}

void CommTable::set(const std::string& a, const std::string& b, const std::string& c) {
  entries_.insert_or_assign({a, b}, c);
  entries_.insert_or_assign({b, a}, c);
}

void CommTable::set_directed(const std::string& a, const std::string& b, const std::string& c) {
  entries_.insert_or_assign({a, b}, c);
}

void CommTable::erase(const std::string& a, const std::string& b) { entries_.erase({a, b}); }

std::optional<std::string> CommTable::apply(const std::string& a, const std::string& b) const {
  auto it = entries_.find({a, b});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void SystemConfig::declare(const std::string& name, ActionClass cls) {
  auto [it, inserted] = alphabet.emplace(name, cls);
  if (!inserted && !(it->second == cls)) {
    throw std::invalid_argument("action '" + name + "' already declared with a different class");
  }
}

void SystemConfig::declare_control(const std::string& c) {
  declare(c, ActionClass::control());
  declare(bar_name(c), ActionClass::bar_of(c));
}

void SystemConfig::declare_datum(const std::string& datum, Term body) {
  declare(create_request_name(datum), ActionClass::create_request(datum));
  declare(create_act_name(datum), ActionClass::create_act(datum));
  creation.insert_or_assign(datum, std::move(body));
}

const ActionClass* SystemConfig::classify(const std::string& name) const {
  auto it = alphabet.find(name);
  return it == alphabet.end() ? nullptr : &it->second;
}

ActionKind SystemConfig::kind_of(const std::string& name) const {
  const ActionClass* c = classify(name);
  return c ? c->kind : ActionKind::Plain;
}

std::set<std::string> SystemConfig::control_actions() const {
  std::set<std::string> out;
  for (const auto& [name, cls] : alphabet) {
    if (cls.kind == ActionKind::Control) out.insert(name);
  }
  return out;
}

const Term& SystemConfig::creation_body(const std::string& datum) const {
  auto it = creation.find(datum);
  if (it == creation.end()) throw std::out_of_range("no creation body for datum '" + datum + "'");
  return it->second;
}

namespace {

bool reserved_kind(ActionKind k) { return k != ActionKind::Plain; }

}  // namespace

ValidationReport validate_config(const SystemConfig& cfg) {
  ValidationReport report;
  auto add = [&](ConfigViolationCode code, std::string msg) {
    report.push_back({code, std::move(msg)});
  };

  for (const auto& [name, cls] : cfg.alphabet) {
    if (is_keyword(name)) add(ConfigViolationCode::ReservedName, "'" + name + "' is a keyword");
    switch (cls.kind) {
      case ActionKind::Plain:
        if (name.ends_with('~')) {
          add(ConfigViolationCode::ReservedName,
              "plain action '" + name + "' uses the bar-action rendering");
        } else if (name.starts_with("cr_")) {
          add(ConfigViolationCode::ReservedName,
              "plain action '" + name + "' uses the creation-action rendering");
        }
        break;
      case ActionKind::Control: {
        const ActionClass* bar = cfg.classify(bar_name(name));
        if (!bar || bar->kind != ActionKind::Bar || bar->ref != name) {
          add(ConfigViolationCode::MissingBar,
              "missing bar action '" + bar_name(name) + "' for control action '" + name + "'");
        }
        break;
      }
      case ActionKind::Bar: {
        if (cfg.kind_of(cls.ref) != ActionKind::Control || !cfg.declared(cls.ref) ||
            name != bar_name(cls.ref)) {
          add(ConfigViolationCode::BarWithoutControl,
              "bar action '" + name + "' has no matching control action");
        }
        break;
      }
      case ActionKind::CreateRequest:
      case ActionKind::CreateAct: {
        const std::string expect = cls.kind == ActionKind::CreateRequest
                                       ? create_request_name(cls.ref)
                                       : create_act_name(cls.ref);
        if (name != expect || !cfg.creation.contains(cls.ref)) {
          add(ConfigViolationCode::CreationMissing,
              "creation action '" + name + "' has no creation body for datum '" + cls.ref + "'");
        }
        break;
      }
    }
  }

  for (const auto& [datum, body] : cfg.creation) {
    const ActionClass* req = cfg.classify(create_request_name(datum));
    const ActionClass* act = cfg.classify(create_act_name(datum));
    if (!req || req->kind != ActionKind::CreateRequest || !act ||
        act->kind != ActionKind::CreateAct) {
      add(ConfigViolationCode::CreationMissing,
          "datum '" + datum + "' lacks its creation request/act actions");
    }
    if (!is_closed(body)) {
      add(ConfigViolationCode::CreationNotClosed,
          "creation body for datum '" + datum + "' is not closed");
    }
    for (const auto& a : actions_of(body)) {
      if (!cfg.declared(a)) {
        add(ConfigViolationCode::CreationUndeclared,
            "creation body for datum '" + datum + "' uses undeclared action '" + a + "'");
      }
    }
  }

  bool comm_declared = true;
  for (const auto& [key, result] : cfg.comm.entries()) {
    const auto& [a, b] = key;
    for (const std::string* x : {&a, &b, &result}) {
      if (!cfg.declared(*x)) {
        add(ConfigViolationCode::UndeclaredInComm,
            "communication entry gamma(" + a + "," + b + ") mentions undeclared action '" + *x +
                "'");
        comm_declared = false;
      }
    }
    auto back = cfg.comm.apply(b, a);
    if (!back || *back != result) {
      add(ConfigViolationCode::NotSymmetric,
          "communication not symmetric: gamma(" + a + "," + b + ") = " + result + " but gamma(" +
              b + "," + a + ") = " + (back ? *back : std::string("delta")));
    }
    if (reserved_kind(cfg.kind_of(result))) {
      add(ConfigViolationCode::CommYieldsReserved,
          "gamma(" + a + "," + b + ") = " + result + " is a control, bar or creation action");
    }
    if (reserved_kind(cfg.kind_of(a)) || reserved_kind(cfg.kind_of(b))) {
      add(ConfigViolationCode::CommWithReserved,
          "gamma(" + a + "," + b + ") must be delta: operand is a control, bar or creation action");
    }
  }

  if (comm_declared && !cfg.comm.empty()) {
    // Exhaustive associativity over the alphabet with δ propagation. Only
    // actions that occur in the table can produce a non-δ result.
    std::set<std::string> involved;
    for (const auto& [key, result] : cfg.comm.entries()) {
      involved.insert(key.first);
      involved.insert(key.second);
      involved.insert(result);
    }
    auto gamma = [&](const std::optional<std::string>& x,
                     const std::optional<std::string>& y) -> std::optional<std::string> {
      if (!x || !y) return std::nullopt;
      return cfg.comm.apply(*x, *y);
    };
    bool reported = false;
    for (const auto& a : involved) {
      for (const auto& b : involved) {
        for (const auto& c : involved) {
          if (reported) break;
          auto left = gamma(gamma(a, b), c);
          auto right = gamma(a, gamma(b, c));
          if (left != right) {
            add(ConfigViolationCode::NotAssociative,
                "communication not associative at (" + a + "," + b + "," + c + ")");
            reported = true;
          }
        }
      }
    }
  }

  return report;
}

std::string to_string(ConfigViolationCode code) {
  switch (code) {
    case ConfigViolationCode::ReservedName: return "reserved-name";
    case ConfigViolationCode::MissingBar: return "missing-bar";
    case ConfigViolationCode::BarWithoutControl: return "bar-without-control";
    case ConfigViolationCode::UndeclaredInComm: return "undeclared-in-communication";
    case ConfigViolationCode::NotSymmetric: return "not-symmetric";
    case ConfigViolationCode::NotAssociative: return "not-associative";
    case ConfigViolationCode::CommYieldsReserved: return "communication-yields-reserved";
    case ConfigViolationCode::CommWithReserved: return "communication-with-reserved";
    case ConfigViolationCode::CreationMissing: return "creation-missing";
    case ConfigViolationCode::CreationNotClosed: return "creation-not-closed";
    case ConfigViolationCode::CreationUndeclared: return "creation-undeclared";
  }
  return "unknown";
}

}  // namespace siacp
