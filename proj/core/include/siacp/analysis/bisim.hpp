#pragma once

#include <cstddef>
#include <vector>

#include "siacp/sos/lts.hpp"

namespace siacp::analysis {

/// Block index of every state under the coarsest strong bisimulation that
/// respects termination. Blocks are numbered in order of first occurrence.
std::vector<std::size_t> bisimulation_classes(const sos::Lts& l);

/// Strong bisimilarity of the initial states. Throws TruncatedInput when
/// either system was cut by a budget.
bool bisimilar(const sos::Lts& l1, const sos::Lts& l2);

/// Quotient by bisimilarity, restricted to states reachable from init and
/// numbered breadth-first (edges visited in label order). Each state keeps
/// the term of one member of its class.
sos::Lts minimize(const sos::Lts& l);

/// Disjoint union; the second system's states are shifted by l1.size().
/// The init of the result is l1's.
sos::Lts disjoint_union(const sos::Lts& l1, const sos::Lts& l2);

}  // namespace siacp::analysis
