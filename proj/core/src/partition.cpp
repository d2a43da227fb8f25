#include "eulerlab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <stdexcept>

#include "eulerlab/errors.hpp"

namespace eulerlab {

char class_label(PartitionClassId c) {
  switch (c) {
    case PartitionClassId::A: return 'A';
    case PartitionClassId::B: return 'B';
    case PartitionClassId::C: return 'C';
    case PartitionClassId::D: return 'D';
  }
  return '?';
}

std::optional<PartitionClassId> parse_class_label(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': return PartitionClassId::A;
    case 'B': return PartitionClassId::B;
    case 'C': return PartitionClassId::C;
    case 'D': return PartitionClassId::D;
    default: return std::nullopt;
  }
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (Part x : parts_) weight_ += x;
}

Partition Partition::from_parts(std::vector<Part> parts) {
  if (std::find(parts.begin(), parts.end(), Part{0}) != parts.end())
    throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_sorted(std::vector<Part> parts) {
  if (!parts.empty() && parts.back() == 0)
    throw std::invalid_argument("partition parts must be positive");
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw std::invalid_argument("partition parts must be non-increasing");
  return Partition(std::move(parts));
}

std::size_t Partition::multiplicity(Part value) const {
  // parts_ is sorted descending
  auto range = std::equal_range(parts_.begin(), parts_.end(), value,
                                std::greater<>());
  return static_cast<std::size_t>(range.second - range.first);
}

Partition normalize(std::span<const Part> raw_parts) {
  std::vector<Part> kept;
  kept.reserve(raw_parts.size());
  for (Part x : raw_parts)
    if (x != 0) kept.push_back(x);
  return Partition::from_parts(std::move(kept));
}

namespace {

bool strictly_decreasing(std::span<const Part> parts) {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] == parts[i]) return false;
  return true;
}

bool all_odd(std::span<const Part> parts) {
  return std::all_of(parts.begin(), parts.end(),
                     [](Part x) { return x % 2 == 1; });
}

bool largest_even_small_parts_distinct(std::span<const Part> parts) {
  if (parts.empty() || parts.front() % 2 != 0) return false;
  const Part half = parts.front() / 2;
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] <= half && parts[i - 1] == parts[i]) return false;
  return true;
}

bool only_smallest_repeats_at_most_twice(std::span<const Part> parts) {
  const std::size_t len = parts.size();
  if (len <= 1) return true;
  // Everything above the smallest value must be distinct.
  std::size_t first_smallest = len - 1;
  while (first_smallest > 0 && parts[first_smallest - 1] == parts[len - 1])
    --first_smallest;
  if (len - first_smallest > 2) return false;
  return strictly_decreasing(parts.first(first_smallest + 1));
}

}  // namespace

bool is_in_class(std::span<const Part> parts, PartitionClassId c) {
  switch (c) {
    case PartitionClassId::A: return strictly_decreasing(parts);
    case PartitionClassId::B: return all_odd(parts);
    case PartitionClassId::C: return largest_even_small_parts_distinct(parts);
    case PartitionClassId::D: return only_smallest_repeats_at_most_twice(parts);
  }
  return false;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Part parse_token(std::string_view token, std::string_view whole) {
  token = trim(token);
  if (token.empty())
    throw ParseError("empty part in \"" + std::string(whole) + "\"");
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("not a non-negative integer: \"" + std::string(token) +
                     "\"");
  if (value > std::numeric_limits<Part>::max())
    throw ParseError("part too large: " + std::string(token));
  return static_cast<Part>(value);
}

void append_joined(std::string& out, std::span<const Part> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
}

}  // namespace

Partition parse_partition(std::string_view text, bool allow_zero_parts) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty partition string");
  if (body == "0") return Partition();

  std::vector<Part> raw;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = body.find('+', start);
    raw.push_back(parse_token(body.substr(start, plus - start), body));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }

  const auto zeros = std::count(raw.begin(), raw.end(), Part{0});
  if (zeros != 0) {
    if (!allow_zero_parts)
      throw ParseError("zero parts are only accepted for class D: \"" +
                       std::string(body) + "\"");
    if (zeros != 2)
      throw ParseError("the non-negative form carries exactly two zeros: \"" +
                       std::string(body) + "\"");
  }
  return normalize(raw);
}

std::string render(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  append_joined(out, p.parts());
  return out;
}

std::string render_class_d(const Partition& p) {
  if (!is_in_class(p, PartitionClassId::D))
    throw ClassViolation("not a class-D partition: " + render(p));
  if (p.empty()) return "0+0";
  std::string out;
  if (p.multiplicity(p.smallest()) == 1) {
    out = "0+0+";
    append_joined(out, p.parts());
  } else {
    std::vector<Part> ascending(p.parts().rbegin(), p.parts().rend());
    append_joined(out, ascending);
  }
  return out;
}

std::string render_for_class(const Partition& p, PartitionClassId c) {
  return c == PartitionClassId::D ? render_class_d(p) : render(p);
}

}  // namespace eulerlab
