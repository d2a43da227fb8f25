#include "eulerlab/bijections.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "eulerlab/enumerate.hpp"
#include "eulerlab/errors.hpp"

namespace eulerlab {

EvenPartFactorization factor_part(std::uint64_t part,
                                  std::uint64_t multiplicity) {
  if (part == 0) throw std::invalid_argument("cannot factor a zero part");
  if (multiplicity == 0) throw std::invalid_argument("multiplicity must be >= 1");
  EvenPartFactorization f;
  f.power = static_cast<std::uint32_t>(std::countr_zero(part));
  f.base = part >> f.power;
  f.multiplicity = multiplicity;
  for (std::uint64_t rest = multiplicity; rest != 0; rest >>= 1)
    f.bits.push_back(static_cast<std::uint8_t>(rest & 1));
  return f;
}

namespace {

Part checked_part(std::uint64_t value) {
  if (value > std::numeric_limits<Part>::max())
    throw std::overflow_error("part " + std::to_string(value) +
                              " exceeds the part range");
  return static_cast<Part>(value);
}

// odd base -> number of copies, ordered for deterministic output
using OddMultiplicities = std::map<std::uint64_t, std::uint64_t>;

void split_into_odd(OddMultiplicities& out, std::span<const Part> parts) {
  for (Part x : parts) {
    const EvenPartFactorization f = factor_part(x);
    out[f.base] += std::uint64_t{1} << f.power;
  }
}

Partition from_multiplicities(const OddMultiplicities& counts) {
  std::vector<Part> parts;
  for (const auto& [base, copies] : counts)
    parts.insert(parts.end(), copies, checked_part(base));
  return Partition::from_parts(std::move(parts));
}

void require(bool ok, PartitionClassId c, const Partition& p,
             std::string_view what) {
  if (!ok)
    throw ClassViolation(std::string(what) + ": " + render(p) +
                         " is not in class " + class_label(c));
}

}  // namespace

Partition glaisher_to_odd(const Partition& p) {
  OddMultiplicities counts;
  split_into_odd(counts, p.parts());
  return from_multiplicities(counts);
}

Partition glaisher_to_distinct(const Partition& p) {
  require(is_in_class(p, PartitionClassId::B), PartitionClassId::B, p,
          "glaisher_to_distinct");
  std::vector<Part> parts;
  const auto values = p.parts();
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const EvenPartFactorization f = factor_part(values[i], j - i);
    for (std::size_t bit = 0; bit < f.bits.size(); ++bit)
      if (f.bits[bit]) parts.push_back(checked_part(f.base << bit));
    i = j;
  }
  return Partition::from_parts(std::move(parts));
}

Reduction d_reduce(const Partition& p) {
  require(is_in_class(p, PartitionClassId::D), PartitionClassId::D, p,
          "d_reduce");
  if (p.weight() < 2)
    throw ClassViolation("d_reduce: weight of " + render(p) + " is below 2");
  std::vector<Part> parts(p.parts().begin(), p.parts().end());
  ReductionTag tag;
  if (parts.size() == 1)
    tag.kase = ReductionCase::single_part;
  else if (parts.back() > 1)
    tag.kase = ReductionCase::smallest_above_one;
  else
    tag.kase = ReductionCase::smallest_equals_one;
  // the last entry is a copy of the smallest part; decrementing it keeps order
  if (--parts.back() == 0) parts.pop_back();
  return {Partition::from_sorted(std::move(parts)), tag};
}

Partition d_lift(const Partition& mu, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("lift bit must be 0 or 1");
  require(is_in_class(mu, PartitionClassId::A), PartitionClassId::A, mu,
          "d_lift");
  if (mu.empty()) throw ClassViolation("d_lift: empty partition");
  std::vector<Part> parts(mu.parts().begin(), mu.parts().end());
  if (bit == 0)
    parts.back() = checked_part(std::uint64_t{parts.back()} + 1);
  else
    parts.push_back(1);
  return Partition::from_sorted(std::move(parts));
}

Partition c_to_b(const Partition& p) {
  require(is_in_class(p, PartitionClassId::C), PartitionClassId::C, p, "c_to_b");
  std::vector<Part> parts(p.parts().begin(), p.parts().end());
  parts.front() -= 1;  // one copy of 2N becomes 2N-1
  OddMultiplicities counts;
  split_into_odd(counts, parts);
  return from_multiplicities(counts);
}

Partition b_to_c(const Partition& p) {
  require(is_in_class(p, PartitionClassId::B), PartitionClassId::B, p, "b_to_c");
  if (p.empty()) throw ClassViolation("b_to_c: empty partition");
  const std::uint64_t top = std::uint64_t{p.largest()} + 1;  // 2N

  OddMultiplicities counts;
  for (Part x : p.parts()) ++counts[x];
  --counts[p.largest()];

  std::vector<Part> parts{checked_part(top)};
  for (const auto& [base, total] : counts) {
    if (total == 0) continue;
    std::uint32_t k = 0;
    while ((base << (k + 1)) <= top) ++k;
    const std::uint64_t block = std::uint64_t{1} << k;
    const std::uint64_t repeated = total / block;
    const std::uint64_t rest = total % block;
    parts.insert(parts.end(), repeated, checked_part(base << k));
    for (std::uint32_t j = 0; j < k; ++j)
      if ((rest >> j) & 1) parts.push_back(checked_part(base << j));
  }
  return Partition::from_parts(std::move(parts));
}

std::string_view to_string(BijectionSuite suite) {
  switch (suite) {
    case BijectionSuite::glaisher: return "glaisher";
    case BijectionSuite::c_b: return "c_b";
    case BijectionSuite::d_a: return "d_a";
  }
  return "?";
}

std::optional<BijectionSuite> parse_bijection_suite(std::string_view text) {
  for (BijectionSuite s : kAllBijectionSuites)
    if (to_string(s) == text) return s;
  return std::nullopt;
}

namespace {

Mismatch failure(std::uint64_t weight, std::string detail, BigInt lhs = 0,
                 BigInt rhs = 0) {
  return Mismatch{static_cast<std::size_t>(weight), std::move(lhs),
                  std::move(rhs), std::move(detail)};
}

// Runs check on every partition of weight 0..max_weight, stopping at the
// first failure.
std::optional<Mismatch> scan(
    std::uint32_t max_weight,
    const std::function<std::optional<Mismatch>(const Partition&)>& check) {
  std::optional<Mismatch> result;
  for (std::uint32_t n = 0; n <= max_weight && !result; ++n) {
    for_each_partition(n, [&](std::span<const Part> parts) {
      if (result) return;
      result = check(
          Partition::from_sorted(std::vector<Part>(parts.begin(), parts.end())));
    });
  }
  return result;
}

std::optional<Mismatch> glaisher_suite(std::uint32_t max_weight) {
  return scan(max_weight, [](const Partition& p) -> std::optional<Mismatch> {
    if (is_in_class(p, PartitionClassId::A)) {
      const Partition odd = glaisher_to_odd(p);
      if (!is_in_class(odd, PartitionClassId::B) || odd.weight() != p.weight())
        return failure(p.weight(), "glaisher_to_odd image not in B: " + render(p));
      if (glaisher_to_distinct(odd) != p)
        return failure(p.weight(), "A round trip broken at " + render(p));
    }
    if (is_in_class(p, PartitionClassId::B)) {
      const Partition distinct = glaisher_to_distinct(p);
      if (!is_in_class(distinct, PartitionClassId::A) ||
          distinct.weight() != p.weight())
        return failure(p.weight(),
                       "glaisher_to_distinct image not in A: " + render(p));
      if (glaisher_to_odd(distinct) != p)
        return failure(p.weight(), "B round trip broken at " + render(p));
    }
    return std::nullopt;
  });
}

std::optional<Mismatch> c_b_suite(std::uint32_t max_weight) {
  auto round_trips =
      scan(max_weight, [](const Partition& p) -> std::optional<Mismatch> {
        if (is_in_class(p, PartitionClassId::C)) {
          const Partition b = c_to_b(p);
          if (!is_in_class(b, PartitionClassId::B) ||
              b.weight() + 1 != p.weight() || b.largest() + 1 != p.largest())
            return failure(p.weight(), "c_to_b image malformed: " + render(p));
          if (b_to_c(b) != p)
            return failure(p.weight(), "C round trip broken at " + render(p));
        }
        if (is_in_class(p, PartitionClassId::B) && !p.empty()) {
          const Partition c = b_to_c(p);
          if (!is_in_class(c, PartitionClassId::C) || c.weight() != p.weight() + 1)
            return failure(p.weight(), "b_to_c image not in C: " + render(p));
          if (c_to_b(c) != p)
            return failure(p.weight(), "B round trip broken at " + render(p));
        }
        return std::nullopt;
      });
  if (round_trips) return round_trips;

  // c_to_b maps C(n+1) onto B(n)
  const std::uint32_t cutoff = std::max(max_weight + 1, kDefaultEnumerationCutoff);
  for (std::uint32_t n = 1; n <= max_weight; ++n) {
    std::vector<Partition> images;
    for (const Partition& p : enumerate_class(n + 1, PartitionClassId::C, cutoff))
      images.push_back(c_to_b(p));
    std::sort(images.begin(), images.end(), std::greater<>());
    const std::vector<Partition> targets =
        enumerate_class(n, PartitionClassId::B, cutoff);
    if (images != targets)
      return failure(n, "c_to_b(C(n+1)) differs from B(n)",
                     static_cast<unsigned long>(images.size()),
                     static_cast<unsigned long>(targets.size()));
  }
  return std::nullopt;
}

std::optional<Mismatch> d_a_suite(std::uint32_t max_weight) {
  auto round_trips =
      scan(max_weight, [](const Partition& p) -> std::optional<Mismatch> {
        if (!is_in_class(p, PartitionClassId::D) || p.weight() < 2)
          return std::nullopt;
        const Reduction r = d_reduce(p);
        if (!is_in_class(r.reduced, PartitionClassId::A) ||
            r.reduced.weight() + 1 != p.weight())
          return failure(p.weight(), "d_reduce image not in A: " + render(p));
        if (d_lift(r.reduced, r.tag.bit()) != p)
          return failure(p.weight(), "D round trip broken at " + render(p));
        return std::nullopt;
      });
  if (round_trips) return round_trips;

  // every distinct-part mu of weight n-1 has one preimage per bit in D(n)
  const std::uint32_t cutoff = std::max(max_weight, kDefaultEnumerationCutoff);
  for (std::uint32_t n = 2; n <= max_weight; ++n) {
    std::map<Partition, std::array<int, 2>> fibers;
    for (const Partition& p : enumerate_class(n, PartitionClassId::D, cutoff)) {
      const Reduction r = d_reduce(p);
      ++fibers[r.reduced][static_cast<std::size_t>(r.tag.bit())];
    }
    const std::vector<Partition> distinct =
        enumerate_class(n - 1, PartitionClassId::A, cutoff);
    if (fibers.size() != distinct.size())
      return failure(n, "fiber count differs from A(n-1)",
                     static_cast<unsigned long>(fibers.size()),
                     static_cast<unsigned long>(distinct.size()));
    for (const Partition& mu : distinct) {
      const auto it = fibers.find(mu);
      if (it == fibers.end() || it->second != std::array<int, 2>{1, 1})
        return failure(n, "fiber of " + render(mu) + " is not one per bit");
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_bijection_suite(BijectionSuite suite,
                                          std::uint32_t max_weight) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.name = "bijection_" + std::string(to_string(suite));
  report.order = max_weight;
  switch (suite) {
    case BijectionSuite::glaisher: report.mismatch = glaisher_suite(max_weight); break;
    case BijectionSuite::c_b: report.mismatch = c_b_suite(max_weight); break;
    case BijectionSuite::d_a: report.mismatch = d_a_suite(max_weight); break;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace eulerlab
