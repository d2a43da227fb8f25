#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "eulerlab/bigint.hpp"

namespace eulerlab {

struct Mismatch {
  std::size_t exponent = 0;
  BigInt lhs;
  BigInt rhs;
  std::string detail;  // which comparison failed
};

// Outcome of one identity check. passed() iff no mismatch at or below order.
struct VerificationReport {
  std::string name;
  std::size_t order = 0;
  std::optional<Mismatch> mismatch;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return !mismatch.has_value(); }
};

// Plain one-line summary, e.g. "half_D order=200 pass". Timing is appended
// only on request so that default output stays reproducible.
std::string summarize(const VerificationReport& report, bool with_timing = false);

// 1/(t;q)_inf = sum_m t^m/(q;q)_m at t = q^c and at t = -q^c, compared
// coefficientwise up to order. Mismatches are reported, never thrown.
// Throws std::invalid_argument for c == 0.
VerificationReport euler_expansion_check(std::size_t c, std::size_t order);

enum class IdentityName { euler_AB, shift_BC, chain_C, half_D, thm_all };

inline constexpr IdentityName kAllIdentities[] = {
    IdentityName::euler_AB, IdentityName::shift_BC, IdentityName::chain_C,
    IdentityName::half_D, IdentityName::thm_all};

inline constexpr std::size_t kDefaultVerificationOrder = 200;

std::string_view to_string(IdentityName name);
std::optional<IdentityName> parse_identity_name(std::string_view text);

//   euler_AB  gf A == gf B
//   shift_BC  [q^{n+1}] C == [q^n] B for 1 <= n < order
//   chain_C   every C form equals gf C; every doubled chain stage is 2 gf C
//   half_D    2 gf C == gf D + 1 - q at every exponent <= order
//   thm_all   A(n) = B(n) = C(n+1) = D(n+1)/2 for 2 <= n <= order-1
VerificationReport verify_identity(IdentityName name, std::size_t order);

}  // namespace eulerlab
