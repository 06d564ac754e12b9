#include "siacp/frontend/export.hpp"

#include <json.hpp>

#include <sstream>

#include "siacp/kernel/error.hpp"

namespace siacp::frontend {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string to_dot(const sos::Lts& l) {
  std::ostringstream os;
  os << "digraph lts {\n";
  os << "  rankdir=LR;\n";
  os << "  start [shape=point];\n";
  for (sos::StateId s = 0; s < l.size(); ++s) {
    const auto& st = l.states[s];
    os << "  s" << s << " [label=\"" << s << "\", shape="
       << (st.terminating ? "doublecircle" : "circle");
    if (st.truncated) os << ", style=dashed";
    os << "];\n";
  }
  os << "  start -> s" << l.init << ";\n";
  for (const auto& e : l.edges()) {
    os << "  s" << e.from << " -> s" << e.to << " [label=" << dot_quote(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const sos::Lts& l) {
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  for (sos::StateId s = 0; s < l.size(); ++s) {
    states.push_back({{"id", s},
                      {"terminating", l.states[s].terminating},
                      {"truncated", l.states[s].truncated}});
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : l.edges()) {
    edges.push_back({{"from", e.from}, {"label", e.label}, {"to", e.to}});
  }
  nlohmann::ordered_json doc;
  doc["states"] = std::move(states);
  doc["edges"] = std::move(edges);
  doc["init"] = l.init;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string export_lts(const sos::Lts& l, LtsFormat format) {
  return format == LtsFormat::Dot ? to_dot(l) : to_json(l);
}

sos::Lts import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what(), {});
  }
  try {
    sos::Lts l;
    const auto& states = doc.at("states");
    std::vector<const nlohmann::json*> by_id(states.size(), nullptr);
    for (const auto& s : states) {
      const auto id = s.at("id").get<std::size_t>();
      if (id >= by_id.size() || by_id[id]) throw SyntaxError("state ids must be 0..n-1", {});
      by_id[id] = &s;
    }
    for (const auto* s : by_id) {
      const auto id = l.add_state(s->at("terminating").get<bool>());
      l.states[id].truncated = s->at("truncated").get<bool>();
    }
    for (const auto& e : doc.at("edges")) {
      const auto from = e.at("from").get<std::size_t>();
      const auto to = e.at("to").get<std::size_t>();
      if (from >= l.size() || to >= l.size()) throw SyntaxError("edge refers to unknown state", {});
      l.add_edge(from, e.at("label").get<std::string>(), to);
    }
    l.init = doc.at("init").get<std::size_t>();
    if (l.init >= l.size()) throw SyntaxError("init refers to unknown state", {});
    l.tidy();
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(e.what(), {});
  }
}

}  // namespace siacp::frontend
