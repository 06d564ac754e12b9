#include "siacp/frontend/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "siacp/frontend/parser.hpp"
#include "siacp/kernel/error.hpp"
#include "siacp/strategy/round_robin.hpp"
#include "siacp/strategy/semaphore.hpp"

namespace siacp::frontend {

namespace {

using Finding = ConfigError::Finding;

SourceLocation where(const YAML::Node& n) {
  const YAML::Mark m = n.Mark();
  if (m.is_null()) return {};
  return {static_cast<std::size_t>(m.line) + 1, static_cast<std::size_t>(m.column) + 1};
}

SourceLocation where(const YAML::Mark& m) {
  return {static_cast<std::size_t>(m.line) + 1, static_cast<std::size_t>(m.column) + 1};
}

class Loader {
 public:
  LoadedConfig run(std::string_view text) {
    YAML::Node root;
    try {
      root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
      throw ConfigError({{where(e.mark), e.msg}});
    }
    if (root.IsNull()) return finish(default_config());
    if (!root.IsMap()) {
      add(root, "configuration must be a mapping");
      throw ConfigError(findings_);
    }
    check_keys(root, {"alphabet", "communication", "strategy", "creation"});

    LoadedConfig out;
    strategy(root["strategy"], out);
    alphabet(root["alphabet"], out.cfg);
    communication(root["communication"], out.cfg);
    creation(root["creation"], out);
    if (!findings_.empty()) throw ConfigError(findings_);

    for (const auto& v : validate_config(out.cfg)) {
      findings_.push_back({{}, to_string(v.code) + ": " + v.message});
    }
    return finish(std::move(out));
  }

 private:
  LoadedConfig finish(LoadedConfig out) {
    if (!findings_.empty()) throw ConfigError(findings_);
    return out;
  }

  void add(const YAML::Node& n, std::string msg) { findings_.push_back({where(n), std::move(msg)}); }

  void check_keys(const YAML::Node& map, std::set<std::string> allowed) {
    for (const auto& kv : map) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.contains(key)) add(kv.first, "unknown key '" + key + "'");
    }
  }

  std::optional<std::string> scalar(const YAML::Node& n, const std::string& what) {
    if (!n.IsScalar()) {
      add(n, what + " must be a scalar");
      return std::nullopt;
    }
    return n.as<std::string>();
  }

  std::optional<int> integer(const YAML::Node& n, const std::string& what) {
    try {
      return n.as<int>();
    } catch (const YAML::Exception&) {
      add(n, what + " must be an integer");
      return std::nullopt;
    }
  }

  void strategy(const YAML::Node& s, LoadedConfig& out) {
    if (!s) {
      out.strategy = strategy::rr_strategy();
      return;
    }
    if (!s.IsMap()) {
      add(s, "strategy must be a mapping");
      out.strategy = strategy::rr_strategy();
      return;
    }
    check_keys(s, {"name", "k", "semaphores", "turns_convention", "deadlock_mode"});

    std::string name = "round-robin";
    if (s["name"]) name = scalar(s["name"], "strategy.name").value_or(name);

    if (const auto dm = s["deadlock_mode"]) {
      const auto v = scalar(dm, "strategy.deadlock_mode");
      if (v == "immediate") {
        out.cfg.deadlock_mode = DeadlockMode::Immediate;
      } else if (v == "deferred") {
        out.cfg.deadlock_mode = DeadlockMode::Deferred;
      } else if (v) {
        add(dm, "deadlock_mode must be immediate or deferred");
      }
    }

    if (name == "round-robin") {
      if (s["semaphores"]) add(s["semaphores"], "semaphores require rr-semaphore");
      if (s["k"]) add(s["k"], "k requires rr-semaphore");
      if (s["turns_convention"]) add(s["turns_convention"], "turns_convention requires rr-semaphore");
      out.strategy = strategy::rr_strategy();
      return;
    }
    if (name != "rr-semaphore") {
      add(s["name"], "unknown strategy '" + name + "'");
      out.strategy = strategy::rr_strategy();
      return;
    }

    int k = 1;
    if (const auto kn = s["k"]) {
      k = integer(kn, "strategy.k").value_or(1);
      if (k < 1) {
        add(kn, "k must be at least 1");
        k = 1;
      }
    }
    auto conv = strategy::TurnsConvention::AsWritten;
    if (const auto tc = s["turns_convention"]) {
      const auto v = scalar(tc, "strategy.turns_convention");
      if (v == "prose") {
        conv = strategy::TurnsConvention::Prose;
      } else if (v && v != "as-written") {
        add(tc, "turns_convention must be as-written or prose");
      }
    }
    std::set<std::string> sems;
    const auto sn = s["semaphores"];
    if (!sn || !sn.IsSequence() || sn.size() == 0) {
      add(sn ? sn : s, "rr-semaphore needs a non-empty semaphores list");
      out.strategy = strategy::rr_strategy();
      return;
    }
    for (const auto& r : sn) {
      const auto v = scalar(r, "semaphore name");
      if (!v) continue;
      if (!sems.insert(*v).second) add(r, "semaphore '" + *v + "' listed twice");
    }
    try {
      strategy::declare_semaphores(out.cfg, sems);
    } catch (const std::invalid_argument& e) {
      add(sn, e.what());
    }
    out.strategy = strategy::sem_strategy(k, sems, conv);
  }

  void alphabet(const YAML::Node& a, SystemConfig& cfg) {
    if (!a) return;
    if (!a.IsSequence()) {
      add(a, "alphabet must be a list");
      return;
    }
    for (const auto& n : a) {
      const auto v = scalar(n, "action name");
      if (!v) continue;
      if (is_keyword(*v)) {
        add(n, "'" + *v + "' is a keyword");
        continue;
      }
      if (v->empty() || v->find_first_of(" \t()[]{}.,;+|=#") != std::string::npos) {
        add(n, "'" + *v + "' is not a valid action name");
        continue;
      }
      if (cfg.declared(*v)) {
        if (cfg.kind_of(*v) != ActionKind::Plain) add(n, "'" + *v + "' is reserved for the strategy");
        continue;
      }
      cfg.declare(*v);
    }
  }

  void communication(const YAML::Node& c, SystemConfig& cfg) {
    if (!c) return;
    if (!c.IsSequence()) {
      add(c, "communication must be a list of [a, b, c] triples");
      return;
    }
    for (const auto& e : c) {
      if (!e.IsSequence() || e.size() != 3) {
        add(e, "communication entry must be [a, b, c]");
        continue;
      }
      const auto a = scalar(e[0], "action");
      const auto b = scalar(e[1], "action");
      const auto r = scalar(e[2], "action");
      if (!a || !b || !r) continue;
      const auto prior = cfg.comm.apply(*a, *b);
      if (prior && *prior != *r) {
        add(e, "gamma(" + *a + "," + *b + ") defined twice");
        continue;
      }
      cfg.comm.set(*a, *b, *r);
    }
  }

  void creation(const YAML::Node& c, LoadedConfig& out) {
    if (!c) return;
    if (!c.IsMap()) {
      add(c, "creation must be a mapping from datum to term");
      return;
    }
    std::vector<std::pair<std::string, YAML::Node>> bodies;
    for (const auto& kv : c) {
      const auto d = kv.first.as<std::string>();
      try {
        out.cfg.declare(create_request_name(d), ActionClass::create_request(d));
        out.cfg.declare(create_act_name(d), ActionClass::create_act(d));
      } catch (const std::invalid_argument& e) {
        add(kv.first, e.what());
        continue;
      }
      bodies.emplace_back(d, kv.second);
    }
    if (!findings_.empty()) return;
    for (const auto& [d, node] : bodies) {
      const auto src = scalar(node, "creation body");
      if (!src) continue;
      try {
        out.cfg.creation.insert_or_assign(d, parse_term(*src, out.cfg, *out.strategy));
      } catch (const SyntaxError& e) {
        add(node, "creation body for '" + d + "' at " + e.where().str() + ": " + e.detail());
      } catch (const Error& e) {
        add(node, "creation body for '" + d + "': " + e.what());
      }
    }
  }

  std::vector<Finding> findings_;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({{{}, "cannot read " + path.string()}});
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

LoadedConfig default_config() { return {SystemConfig{}, strategy::rr_strategy()}; }

LoadedConfig load_config(std::string_view text) { return Loader().run(text); }

LoadedConfig load_config_file(const std::filesystem::path& path) {
  return load_config(slurp(path));
}

std::vector<analysis::MutexRegion> load_regions(std::string_view text) {
  std::vector<Finding> findings;
  auto add = [&](const YAML::Node& n, std::string msg) {
    findings.push_back({where(n), std::move(msg)});
  };
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError({{where(e.mark), e.msg}});
  }
  std::vector<analysis::MutexRegion> out;
  const auto list = root.IsMap() ? root["regions"] : YAML::Node();
  if (!list || !list.IsSequence()) {
    add(root, "expected a 'regions' list");
    throw ConfigError(findings);
  }
  auto positions = [&](const YAML::Node& m, std::map<int, std::string>& dst, const char* what) {
    if (!m || !m.IsMap()) {
      add(m ? m : list, std::string(what) + " must map process positions to actions");
      return;
    }
    for (const auto& kv : m) {
      try {
        const int i = kv.first.as<int>();
        if (i < 1) throw YAML::Exception(kv.first.Mark(), "position must be positive");
        dst[i] = kv.second.as<std::string>();
      } catch (const YAML::Exception&) {
        add(kv.first, std::string(what) + " entries must be position: action");
      }
    }
  };
  for (const auto& r : list) {
    if (!r.IsMap()) {
      add(r, "region must be a mapping");
      continue;
    }
    for (const auto& kv : r) {
      const auto key = kv.first.as<std::string>();
      if (key != "semaphore" && key != "enter" && key != "exit") add(kv.first, "unknown key '" + key + "'");
    }
    analysis::MutexRegion region;
    if (r["semaphore"] && r["semaphore"].IsScalar()) region.semaphore = r["semaphore"].as<std::string>();
    positions(r["enter"], region.enter_actions, "enter");
    positions(r["exit"], region.exit_actions, "exit");
    out.push_back(std::move(region));
  }
  if (!findings.empty()) throw ConfigError(findings);
  return out;
}

std::vector<analysis::MutexRegion> load_regions_file(const std::filesystem::path& path) {
  return load_regions(slurp(path));
}

}  // namespace siacp::frontend
