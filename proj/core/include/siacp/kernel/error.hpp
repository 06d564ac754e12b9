#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace siacp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceLocation {
  std::size_t line = 0;    // 1-based, 0 when unknown
  std::size_t column = 0;  // 1-based, 0 when unknown

  std::string str() const;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceLocation where);

  const SourceLocation& where() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourceLocation where_;
  std::string detail_;
};

/// A configuration document was rejected. Carries every finding, not just the first.
class ConfigError : public Error {
 public:
  struct Finding {
    SourceLocation where;
    std::string message;
  };

  explicit ConfigError(std::vector<Finding> findings);

  const std::vector<Finding>& findings() const noexcept { return findings_; }

 private:
  std::vector<Finding> findings_;
};

class UndeclaredAction : public Error {
 public:
  explicit UndeclaredAction(const std::string& name);
  const std::string& action() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnguardedRecursion : public Error {
 public:
  explicit UnguardedRecursion(const std::string& variable);
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class TruncatedInput : public Error {
 public:
  using Error::Error;
};

/// Raised when an interleaving history would stop being well-formed. This is
/// a logic error: the semantics only ever extends histories legally unless the
/// input term already carries an inconsistent history.
class HistoryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace siacp
