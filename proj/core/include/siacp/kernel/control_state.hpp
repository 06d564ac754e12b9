#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace siacp {

/// Interface for strategy-private control data. Implementations are
/// immutable; equality, ordering and hashing must be consistent.
class ControlStateValue {
 public:
  virtual ~ControlStateValue() = default;

  /// Distinguishes implementations; values of different tags order by tag.
  virtual std::string_view tag() const noexcept = 0;
  virtual std::size_t hash() const noexcept = 0;
  /// Only called with `other.tag() == tag()`.
  virtual std::strong_ordering compare_same(const ControlStateValue& other) const = 0;
  /// Concrete-syntax literal, parseable by the owning strategy.
  virtual std::string render() const = 0;
};

/// The single control state of strategies that keep no private data.
class UnitState final : public ControlStateValue {
 public:
  std::string_view tag() const noexcept override { return "unit"; }
  std::size_t hash() const noexcept override { return 0x5bd1e995u; }
  std::strong_ordering compare_same(const ControlStateValue&) const override {
    return std::strong_ordering::equal;
  }
  std::string render() const override { return "init"; }
};

/// Shared handle to an immutable control state. Default-constructs to the unit state.
class ControlState {
 public:
  ControlState();
  explicit ControlState(std::shared_ptr<const ControlStateValue> value);

  const ControlStateValue& value() const noexcept { return *value_; }

  template <class T>
  const T* as() const noexcept {
    return dynamic_cast<const T*>(value_.get());
  }

  std::size_t hash() const noexcept { return value_->hash(); }
  std::string render() const { return value_->render(); }

  friend bool operator==(const ControlState& a, const ControlState& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const ControlState& a, const ControlState& b);

 private:
  std::shared_ptr<const ControlStateValue> value_;
};

}  // namespace siacp
