#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eulerlab {

using Part = std::uint32_t;

// The four partition families compared by the extended Euler theorem.
//   A: distinct parts
//   B: odd parts
//   C: largest part 2N even, parts <= N distinct, parts in (N, 2N] free
//   D: only the smallest part may repeat, at most twice
enum class PartitionClassId { A, B, C, D };

inline constexpr PartitionClassId kAllClasses[] = {
    PartitionClassId::A, PartitionClassId::B, PartitionClassId::C,
    PartitionClassId::D};

char class_label(PartitionClassId c);
std::optional<PartitionClassId> parse_class_label(std::string_view text);

// Canonical partition: positive parts in non-increasing order with the
// weight cached. Zero parts never appear here; the "0+0+..." form of class D
// lives only in parse_partition / render_class_d.
class Partition {
 public:
  Partition() = default;

  // Takes positive parts in any order. Throws std::invalid_argument on a zero.
  static Partition from_parts(std::vector<Part> parts);

  // Takes parts already sorted non-increasing and positive; checked.
  static Partition from_sorted(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  std::uint64_t weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // Precondition: non-empty.
  Part largest() const { return parts_.front(); }
  Part smallest() const { return parts_.back(); }

  std::size_t multiplicity(Part value) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  explicit Partition(std::vector<Part> parts);

  std::vector<Part> parts_;
  std::uint64_t weight_ = 0;
};

// Drops zeros, sorts the rest non-increasing.
Partition normalize(std::span<const Part> raw_parts);

bool is_in_class(std::span<const Part> sorted_parts, PartitionClassId c);
inline bool is_in_class(const Partition& p, PartitionClassId c) {
  return is_in_class(p.parts(), c);
}

// Grammar: decimal integers joined by '+', whitespace allowed around each
// token, any order. Zero parts are accepted only with allow_zero_parts, and
// then there must be exactly two of them (the non-negative class-D form).
// The lone token "0" denotes the empty partition for every class.
Partition parse_partition(std::string_view text, bool allow_zero_parts = false);

// Parts in non-increasing order joined by '+'; the empty partition is "0".
std::string render(const Partition& p);

// Non-negative presentation of a class-D partition: "0+0+" followed by the
// parts in decreasing order when the smallest part is not repeated, else the
// parts in increasing order. Throws ClassViolation outside class D.
std::string render_class_d(const Partition& p);

// render_class_d for D, render otherwise.
std::string render_for_class(const Partition& p, PartitionClassId c);

}  // namespace eulerlab
