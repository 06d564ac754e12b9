#include "siacp/kernel/control_state.hpp"

#include <stdexcept>

namespace siacp {

namespace {

const std::shared_ptr<const ControlStateValue>& unit_value() {
  static const std::shared_ptr<const ControlStateValue> unit = std::make_shared<UnitState>();
  return unit;
}

}  // namespace

ControlState::ControlState() : value_(unit_value()) {}

ControlState::ControlState(std::shared_ptr<const ControlStateValue> value)
    : value_(std::move(value)) {
  if (!value_) throw std::invalid_argument("null control state");
}

std::strong_ordering operator<=>(const ControlState& a, const ControlState& b) {
  if (a.value_ == b.value_) return std::strong_ordering::equal;
  const auto ta = a.value_->tag();
  const auto tb = b.value_->tag();
  if (ta != tb) return ta.compare(tb) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.value_->compare_same(*b.value_);
}

}  // namespace siacp
