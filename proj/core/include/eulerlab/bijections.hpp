#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "eulerlab/partition.hpp"
#include "eulerlab/verification.hpp"

namespace eulerlab {

// M = 2^k * a with a odd, together with a multiplicity f of M and the binary
// digits of f (least significant first).
struct EvenPartFactorization {
  std::uint64_t base = 1;   // a, odd
  std::uint32_t power = 0;  // k
  std::uint64_t multiplicity = 1;
  std::vector<std::uint8_t> bits;

  std::uint64_t value() const { return base << power; }
};

// Throws std::invalid_argument for part == 0 or multiplicity == 0.
EvenPartFactorization factor_part(std::uint64_t part,
                                  std::uint64_t multiplicity = 1);

// Glaisher's map: every part 2^k a (a odd) becomes 2^k copies of a. Accepts
// any partition; odd parts pass through unchanged.
Partition glaisher_to_odd(const Partition& p);

// Inverse direction: an odd part a of multiplicity f becomes one part 2^j a
// for every set bit j of f. Throws ClassViolation on an even part.
Partition glaisher_to_distinct(const Partition& p);

enum class ReductionCase { single_part, smallest_above_one, smallest_equals_one };

struct ReductionTag {
  ReductionCase kase = ReductionCase::single_part;

  // 0 for single_part and smallest_above_one, 1 for smallest_equals_one.
  int bit() const { return kase == ReductionCase::smallest_equals_one ? 1 : 0; }
  // 1-based case number matching single_part / smallest_above_one /
  // smallest_equals_one.
  int case_number() const { return static_cast<int>(kase) + 1; }
};

struct Reduction {
  Partition reduced;
  ReductionTag tag;
};

// Subtracts 1 from one copy of the smallest part of a class-D partition of
// weight >= 2, dropping a resulting zero. The image has distinct parts.
// Throws ClassViolation otherwise.
Reduction d_reduce(const Partition& p);

// The two preimages of a non-empty distinct-part partition under d_reduce:
// bit 0 adds 1 to the smallest part, bit 1 appends a part 1.
// Throws ClassViolation for an empty or non-distinct input and
// std::invalid_argument for a bit other than 0 or 1.
Partition d_lift(const Partition& mu, int bit);

// Class C (largest part 2N) to class B of one less weight: one copy of 2N
// becomes 2N-1, then Glaisher's map splits the remaining even parts.
// Throws ClassViolation outside class C.
Partition c_to_b(const Partition& p);

// Inverse of c_to_b. With 2N-1 the largest part, one copy of it is restored
// to 2N; every other odd a of multiplicity t is regrouped as u copies of
// a*2^k (k maximal with a*2^k <= 2N) plus one a*2^j per set bit j of r, where
// t = u*2^k + r. Throws ClassViolation for an empty or non-odd input.
Partition b_to_c(const Partition& p);

// Exhaustive round-trip suites over every partition of weight <= max_weight.
enum class BijectionSuite { glaisher, c_b, d_a };

inline constexpr BijectionSuite kAllBijectionSuites[] = {
    BijectionSuite::glaisher, BijectionSuite::c_b, BijectionSuite::d_a};

inline constexpr std::uint32_t kDefaultBijectionWeight = 40;

std::string_view to_string(BijectionSuite suite);
std::optional<BijectionSuite> parse_bijection_suite(std::string_view text);

//   glaisher  both compositions are the identity on A and on B; images land
//             in the target class
//   c_b       b_to_c(c_to_b(p)) = p on C, c_to_b(b_to_c(p)) = p on non-empty
//             B, and c_to_b maps C(n+1) onto B(n) as sets
//   d_a       d_lift(d_reduce(p), bit) = p on D and every distinct-part mu of
//             weight n-1 has exactly two preimages in D(n), one per bit
// A failure reports the weight as the mismatch exponent and the offending
// partition in the detail; lhs/rhs carry the sizes compared, when any.
VerificationReport verify_bijection_suite(
    BijectionSuite suite, std::uint32_t max_weight = kDefaultBijectionWeight);

}  // namespace eulerlab
