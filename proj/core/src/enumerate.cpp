#include "eulerlab/enumerate.hpp"

#include <algorithm>
#include <string>

#include "eulerlab/errors.hpp"

namespace eulerlab {

namespace {

void check_cutoff(std::uint32_t n, std::uint32_t cutoff) {
  if (n > cutoff)
    throw CapacityError("enumeration of n=" + std::to_string(n) +
                        " exceeds the cutoff " + std::to_string(cutoff));
}

struct Generator {
  std::vector<Part> buffer;
  const std::function<void(std::span<const Part>)>& visit;

  // Extends buffer with parts <= max_part summing to remaining, largest
  // choice first, which yields lexicographically decreasing order.
  void run(std::uint32_t remaining, std::uint32_t max_part) {
    if (remaining == 0) {
      visit(buffer);
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1;
         --part) {
      buffer.push_back(part);
      run(remaining - part, part);
      buffer.pop_back();
    }
  }
};

}  // namespace

void for_each_partition(
    std::uint32_t n, const std::function<void(std::span<const Part>)>& visit) {
  Generator gen{{}, visit};
  gen.buffer.reserve(n);
  gen.run(n, n);
}

std::vector<Partition> enumerate_class(std::uint32_t n, PartitionClassId c,
                                       std::uint32_t cutoff) {
  check_cutoff(n, cutoff);
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const Part> parts) {
    if (is_in_class(parts, c))
      out.push_back(
          Partition::from_sorted(std::vector<Part>(parts.begin(), parts.end())));
  });
  return out;
}

std::uint64_t count_by_enumeration(std::uint32_t n, PartitionClassId c,
                                   std::uint32_t cutoff) {
  check_cutoff(n, cutoff);
  std::uint64_t count = 0;
  for_each_partition(n, [&](std::span<const Part> parts) {
    if (is_in_class(parts, c)) ++count;
  });
  return count;
}

}  // namespace eulerlab
