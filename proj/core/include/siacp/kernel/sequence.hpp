#pragma once

// Finite sequence and finite partial map notation used by the strategy
// definitions: hd, tl, elems, concatenation, override, domain subtraction,
// maplets.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace siacp::seq {

template <class T>
const T& hd(const std::vector<T>& u) {
  if (u.empty()) throw std::out_of_range("hd of empty sequence");
  return u.front();
}

template <class T>
std::vector<T> tl(const std::vector<T>& u) {
  if (u.empty()) throw std::out_of_range("tl of empty sequence");
  return std::vector<T>(u.begin() + 1, u.end());
}

template <class T>
std::set<T> elems(const std::vector<T>& u) {
  return std::set<T>(u.begin(), u.end());
}

template <class T>
std::vector<T> concat(std::vector<T> u, const std::vector<T>& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

}  // namespace siacp::seq

namespace siacp::fmap {

template <class K, class V>
std::map<K, V> empty() {
  return {};
}

/// {d ↦ e}
template <class K, class V>
std::map<K, V> maplet(K d, V e) {
  std::map<K, V> out;
  out.emplace(std::move(d), std::move(e));
  return out;
}

/// f ⊕ g: dom(f) ∪ dom(g), values from g where defined.
template <class K, class V>
std::map<K, V> override_with(std::map<K, V> f, const std::map<K, V>& g) {
  for (const auto& [k, v] : g) f.insert_or_assign(k, v);
  return f;
}

/// f ⊖ S: f restricted to dom(f) \ S.
template <class K, class V>
std::map<K, V> domain_subtract(std::map<K, V> f, const std::set<K>& s) {
  for (const auto& k : s) f.erase(k);
  return f;
}

}  // namespace siacp::fmap
