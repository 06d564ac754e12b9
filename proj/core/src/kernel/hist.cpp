#include "siacp/kernel/hist.hpp"

#include <sstream>

#include "siacp/kernel/error.hpp"

namespace siacp {

namespace {

bool can_follow(const Turn& prev, const Turn& next) {
  return next.process >= 1 && next.count >= 1 && next.process <= prev.count &&
         prev.count - 1 <= next.count && next.count <= prev.count + 1;
}

}  // namespace

bool hist_is_wellformed(std::span<const Turn> turns) {
  if (turns.empty()) return true;
  const Turn& first = turns.front();
  if (first.process < 1 || first.count < 1 || first.process > first.count) return false;
  for (std::size_t k = 1; k < turns.size(); ++k) {
    if (!can_follow(turns[k - 1], turns[k])) return false;
  }
  return true;
}

Hist Hist::from(std::vector<Turn> turns) {
  if (!hist_is_wellformed(turns)) {
    throw HistoryError("ill-formed interleaving history " + Hist(std::move(turns)).str());
  }
  return Hist(std::move(turns));
}

Hist Hist::extended(int process, int count) const {
  const Turn next{process, count};
  const bool ok = turns_.empty()
                      ? (process >= 1 && count >= 1 && process <= count)
                      : can_follow(turns_.back(), next);
  if (!ok) {
    std::ostringstream os;
    os << "extending " << str() << " with (" << process << ',' << count
       << ") breaks well-formedness";
    throw HistoryError(os.str());
  }
  std::vector<Turn> out;
  out.reserve(turns_.size() + 1);
  out = turns_;
  out.push_back(next);
  return Hist(std::move(out));
}

Hist Hist::prefix() const {
  return Hist(std::vector<Turn>(turns_.begin(), turns_.end() - 1));
}

std::size_t Hist::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Turn& t : turns_) {
    h ^= static_cast<std::size_t>(t.process) * 0x100000001b3ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(t.count) * 0xff51afd7ed558ccdull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Hist::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t k = 0; k < turns_.size(); ++k) {
    if (k) os << ',';
    os << '(' << turns_[k].process << ',' << turns_[k].count << ')';
  }
  os << ">";
  return os.str();
}

}  // namespace siacp
