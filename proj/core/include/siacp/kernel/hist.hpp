#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace siacp {

/// One interleaving step: process `process` got a turn, after which `count`
/// processes remained to be interleaved.
struct Turn {
  int process = 1;
  int count = 1;

  friend auto operator<=>(const Turn&, const Turn&) = default;
};

/// True iff the sequence is an interleaving history: empty, or a first pair
/// with i <= n, where every subsequent pair (j, m) following (i, n) has
/// j <= n and n - 1 <= m <= n + 1.
bool hist_is_wellformed(std::span<const Turn> turns);

/// A well-formed interleaving history. Immutable value; every constructor
/// path checks well-formedness.
class Hist {
 public:
  Hist() = default;

  /// Throws HistoryError if `turns` is not well-formed.
  static Hist from(std::vector<Turn> turns);

  /// h ⌢ ⟨i, n⟩. Throws HistoryError when the result would be ill-formed.
  Hist extended(int process, int count) const;

  bool empty() const noexcept { return turns_.empty(); }
  std::size_t size() const noexcept { return turns_.size(); }
  const Turn& back() const { return turns_.back(); }
  std::span<const Turn> turns() const noexcept { return turns_; }

  /// The history without its last pair. Requires !empty().
  Hist prefix() const;

  std::size_t hash() const noexcept;
  std::string str() const;

  friend bool operator==(const Hist&, const Hist&) = default;
  friend std::strong_ordering operator<=>(const Hist& a, const Hist& b) {
    return a.turns_ <=> b.turns_;
  }

 private:
  explicit Hist(std::vector<Turn> turns) : turns_(std::move(turns)) {}

  std::vector<Turn> turns_;
};

inline Hist hist_extend(const Hist& h, int process, int count) {
  return h.extended(process, count);
}

}  // namespace siacp
