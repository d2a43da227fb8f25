#pragma once

// Test-only brute force, written independently of the library: partitions are
// generated in ascending part order and classified from multiplicity maps.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint32_t>;  // ascending

inline void ascending_partitions(std::uint32_t n, std::uint32_t min_part,
                                 Parts& prefix,
                                 const std::function<void(const Parts&)>& f) {
  if (n == 0) {
    f(prefix);
    return;
  }
  for (std::uint32_t part = min_part; part <= n; ++part) {
    prefix.push_back(part);
    ascending_partitions(n - part, part, prefix, f);
    prefix.pop_back();
  }
}

inline std::vector<Parts> all_partitions(std::uint32_t n) {
  std::vector<Parts> out;
  Parts prefix;
  ascending_partitions(n, 1, prefix, [&](const Parts& p) { out.push_back(p); });
  return out;
}

inline std::map<std::uint32_t, int> multiplicities(const Parts& p) {
  std::map<std::uint32_t, int> m;
  for (auto x : p) ++m[x];
  return m;
}

inline bool in_a(const Parts& p) {
  for (auto [part, mult] : multiplicities(p))
    if (mult != 1) return false;
  return true;
}

inline bool in_b(const Parts& p) {
  for (auto x : p)
    if (x % 2 == 0) return false;
  return true;
}

inline bool in_c(const Parts& p) {
  if (p.empty()) return false;
  const auto largest = p.back();
  if (largest % 2 != 0) return false;
  for (auto [part, mult] : multiplicities(p))
    if (part <= largest / 2 && mult > 1) return false;
  return true;
}

// Non-negative presentation: prepend whatever zeros are needed so that the
// smallest part appears exactly twice and nothing else repeats.
inline bool in_d(const Parts& p) {
  auto m = multiplicities(p);
  if (m.empty()) return true;  // 0+0
  auto smallest = m.begin();
  if (smallest->second > 2) return false;
  for (auto it = std::next(smallest); it != m.end(); ++it)
    if (it->second != 1) return false;
  return true;
}

inline bool in_class(const Parts& p, char label) {
  switch (label) {
    case 'A': return in_a(p);
    case 'B': return in_b(p);
    case 'C': return in_c(p);
    case 'D': return in_d(p);
  }
  return false;
}

// Number of members of weight n, with the C(0) = 1 convention.
inline std::uint64_t count(std::uint32_t n, char label) {
  if (label == 'C' && n == 0) return 1;
  std::uint64_t total = 0;
  for (const auto& p : all_partitions(n))
    if (in_class(p, label)) ++total;
  return total;
}

}  // namespace oracle
