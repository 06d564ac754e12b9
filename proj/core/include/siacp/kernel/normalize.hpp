#pragma once

#include <functional>

#include "siacp/kernel/hist.hpp"
#include "siacp/kernel/term.hpp"

namespace siacp {

/// Maps a history to a representative history that the strategy cannot
/// distinguish from it. Empty function = identity.
using HistDigest = std::function<Hist(const Hist&)>;

/// Canonical representative used for state identity. Applies, bottom-up:
///   sums:       flattening, δ summands dropped, sorted, duplicates removed
///               (A1-A3, A6); a sum of only δ is δ
///   sequencing: δ.x = δ, ε.x = x, x.ε = x, right association (A5, A7-A9)
///   merge:      ε || x = x, operands of || ordered
///   encap:      encap{H}(ε) = ε, encap{H}(δ) = δ, encap{}(x) = x
///   Si/PosSi:   history replaced by its digest, when one is given
/// Bodies of recursive specifications are left untouched.
Term normalize(const Term& t, const HistDigest& digest = {});

}  // namespace siacp
