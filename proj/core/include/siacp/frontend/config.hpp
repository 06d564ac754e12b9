#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "siacp/analysis/traces.hpp"
#include "siacp/kernel/system.hpp"
#include "siacp/strategy/strategy.hpp"

namespace siacp::frontend {

struct LoadedConfig {
  SystemConfig cfg;
  strategy::StrategyPtr strategy;
};

/// YAML document:
///
///   alphabet: [a, b, c]
///   communication:
///     - [a, b, c]            # gamma(a,b) = gamma(b,a) = c
///   strategy:
///     name: rr-semaphore     # or round-robin
///     k: 1
///     semaphores: [r]
///     turns_convention: as-written   # or prose
///     deadlock_mode: immediate       # or deferred
///   creation:
///     d: "a . eps"
///
/// Every section is optional. Throws ConfigError listing all findings.
LoadedConfig load_config(std::string_view text);
LoadedConfig load_config_file(const std::filesystem::path& path);

/// Round-robin, no actions declared.
LoadedConfig default_config();

///   regions:
///     - semaphore: r
///       enter: {1: enter1, 2: enter2}
///       exit: {1: exit1, 2: exit2}
std::vector<analysis::MutexRegion> load_regions(std::string_view text);
std::vector<analysis::MutexRegion> load_regions_file(const std::filesystem::path& path);

}  // namespace siacp::frontend
