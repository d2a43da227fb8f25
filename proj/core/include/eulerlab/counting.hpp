#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerlab/bigint.hpp"
#include "eulerlab/enumerate.hpp"
#include "eulerlab/partition.hpp"
#include "eulerlab/series.hpp"

namespace eulerlab {

enum class CountMethod { enumeration, dynamic_program, series_coefficient };

inline constexpr CountMethod kAllCountMethods[] = {
    CountMethod::enumeration, CountMethod::dynamic_program,
    CountMethod::series_coefficient};

std::string_view to_string(CountMethod method);
std::optional<CountMethod> parse_count_method(std::string_view text);

// values[n] is the number of class members of weight n, n = 0..size-1.
// Every method uses C(0) = 1 and D(0) = D(1) = 1, so the enumeration count
// of C at n = 0 is 1 even though enumerate_class(0, C) is empty.
struct CountTable {
  PartitionClassId cls;
  CountMethod method;
  std::vector<BigInt> values;
};

// Dynamic programs, independent of the series engine:
//   A: 0/1 knapsack over parts 1..n
//   B: unbounded knapsack over odd parts
//   C: for each N, distinct parts <= N convolved with free parts in (N, 2N]
//   D: D(0) = D(1) = 1 and D(n) = 2 A(n-1) for n >= 2
std::vector<BigInt> dp_counts(PartitionClassId c, std::uint32_t max_n);

CountTable count_table(PartitionClassId c, std::uint32_t max_n,
                       CountMethod method,
                       std::uint32_t cutoff = kDefaultEnumerationCutoff);

// Memoizing counter. Caches are owned by the instance; separate instances
// share nothing, so one per worker is safe.
class Counter {
 public:
  explicit Counter(std::uint32_t cutoff = kDefaultEnumerationCutoff)
      : cutoff_(cutoff) {}

  // Throws CapacityError for enumeration above the cutoff.
  BigInt count(std::uint32_t n, PartitionClassId c, CountMethod method);

  std::uint32_t cutoff() const { return cutoff_; }

 private:
  std::uint32_t cutoff_;
  std::map<std::pair<PartitionClassId, CountMethod>, std::vector<BigInt>>
      cache_;
};

BigInt count_class(std::uint32_t n, PartitionClassId c, CountMethod method,
                   std::uint32_t cutoff = kDefaultEnumerationCutoff);

}  // namespace eulerlab
