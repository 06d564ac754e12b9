#include "siacp/kernel/error.hpp"

#include <sstream>

namespace siacp {

std::string SourceLocation::str() const {
  if (line == 0) return "<unknown>";
  std::ostringstream os;
  os << line << ':' << column;
  return os.str();
}

SyntaxError::SyntaxError(const std::string& message, SourceLocation where)
    : Error(where.str() + ": " + message), where_(where), detail_(message) {}

namespace {

std::string join_findings(const std::vector<ConfigError::Finding>& findings) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : findings) {
    if (!first) os << '\n';
    first = false;
    if (f.where.line != 0) os << f.where.str() << ": ";
    os << f.message;
  }
  return os.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<Finding> findings)
    : Error(join_findings(findings)), findings_(std::move(findings)) {}

UndeclaredAction::UndeclaredAction(const std::string& name)
    : Error("undeclared action '" + name + "'"), name_(name) {}

UnguardedRecursion::UnguardedRecursion(const std::string& variable)
    : Error("unguarded recursion through '" + variable + "'") {}

}  // namespace siacp
