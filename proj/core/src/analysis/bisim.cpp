#include "siacp/analysis/bisim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "siacp/kernel/error.hpp"

namespace siacp::analysis {

std::vector<std::size_t> bisimulation_classes(const sos::Lts& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> block(n);
  // Truncated states are kept apart: their behavior is unknown.
  using Signature = std::tuple<std::size_t, std::vector<std::pair<std::string, std::size_t>>>;
  {
    std::map<std::pair<bool, bool>, std::size_t> initial;
    for (std::size_t q = 0; q < n; ++q) {
      const auto key = std::make_pair(l.states[q].terminating, l.states[q].truncated);
      block[q] = initial.emplace(key, initial.size()).first->second;
    }
  }
  std::size_t count = 0;
  for (std::size_t q = 0; q < n; ++q) count = std::max(count, block[q] + 1);

  while (true) {
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::pair<std::string, std::size_t>> moves;
      moves.reserve(l.states[q].out.size());
      for (const auto& [a, r] : l.states[q].out) moves.emplace_back(a, block[r]);
      std::sort(moves.begin(), moves.end());
      moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
      Signature sig{block[q], std::move(moves)};
      next[q] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    const std::size_t refined = ids.size();
    block = std::move(next);
    if (refined == count) break;
    count = refined;
  }
  return block;
}

sos::Lts disjoint_union(const sos::Lts& l1, const sos::Lts& l2) {
  sos::Lts u = l1;
  const std::size_t shift = l1.size();
  for (const auto& s : l2.states) {
    sos::LtsState c = s;
    for (auto& [a, r] : c.out) r += shift;
    u.states.push_back(std::move(c));
  }
  return u;
}

bool bisimilar(const sos::Lts& l1, const sos::Lts& l2) {
  if (l1.truncated() || l2.truncated()) {
    throw TruncatedInput("bisimilarity needs complete transition systems");
  }
  const auto u = disjoint_union(l1, l2);
  const auto block = bisimulation_classes(u);
  return block[l1.init] == block[l2.init + l1.size()];
}

sos::Lts minimize(const sos::Lts& l) {
  const auto block = bisimulation_classes(l);
  std::map<std::size_t, sos::StateId> fresh;
  std::map<std::size_t, sos::StateId> member;
  for (sos::StateId q = 0; q < l.size(); ++q) member.emplace(block[q], q);

  sos::Lts out;
  std::deque<std::size_t> todo;
  auto id_of = [&](std::size_t b) {
    auto [it, inserted] = fresh.emplace(b, out.size());
    if (inserted) {
      const auto& rep = l.states[member.at(b)];
      out.states.push_back({rep.terminating, rep.truncated, rep.term, {}});
      todo.push_back(b);
    }
    return it->second;
  };
  out.init = id_of(block[l.init]);
  while (!todo.empty()) {
    const std::size_t b = todo.front();
    todo.pop_front();
    const sos::StateId from = fresh.at(b);
    std::vector<std::pair<std::string, std::size_t>> moves;
    for (const auto& [a, r] : l.states[member.at(b)].out) moves.emplace_back(a, block[r]);
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    for (const auto& [a, tb] : moves) {
      const sos::StateId to = id_of(tb);
      out.states[from].out.emplace_back(a, to);
    }
  }
  out.tidy();
  return out;
}

}  // namespace siacp::analysis
