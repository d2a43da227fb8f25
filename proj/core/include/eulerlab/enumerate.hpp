#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "eulerlab/partition.hpp"

namespace eulerlab {

inline constexpr std::uint32_t kDefaultEnumerationCutoff = 60;

// Visits every partition of n in lexicographically decreasing order of part
// sequences. The span is only valid for the duration of the callback.
void for_each_partition(std::uint32_t n,
                        const std::function<void(std::span<const Part>)>& visit);

// Brute force: every partition of n filtered through is_in_class.
// Throws CapacityError when n exceeds cutoff.
std::vector<Partition> enumerate_class(
    std::uint32_t n, PartitionClassId c,
    std::uint32_t cutoff = kDefaultEnumerationCutoff);

// Same filter as enumerate_class without materializing the list.
std::uint64_t count_by_enumeration(
    std::uint32_t n, PartitionClassId c,
    std::uint32_t cutoff = kDefaultEnumerationCutoff);

}  // namespace eulerlab
