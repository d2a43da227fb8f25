#include "eulerlab/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "eulerlab/generating_functions.hpp"
#include "eulerlab/series.hpp"

namespace eulerlab {

std::string summarize(const VerificationReport& report, bool with_timing) {
  std::ostringstream out;
  out << report.name << " order=" << report.order;
  if (report.passed()) {
    out << " pass";
  } else {
    const Mismatch& m = *report.mismatch;
    out << " FAIL at n=" << m.exponent << " (" << m.detail << ": "
        << m.lhs.get_str() << " != " << m.rhs.get_str() << ")";
  }
  if (with_timing) {
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(report.elapsed);
    out << " [" << us.count() << " us]";
  }
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Mismatch> first_difference(const TruncatedSeries& lhs,
                                         const TruncatedSeries& rhs,
                                         std::string_view detail) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  for (std::size_t j = 0; j <= order; ++j)
    if (lhs[j] != rhs[j]) return Mismatch{j, lhs[j], rhs[j], std::string(detail)};
  return std::nullopt;
}

// sum_m sign^m q^{c m} / (q;q)_m
TruncatedSeries euler_sum_side(std::size_t c, int sign, std::size_t order) {
  TruncatedSeries acc(order);
  TruncatedSeries inv = TruncatedSeries::one(order);  // 1/(q;q)_m
  for (std::size_t m = 0; c * m <= order; ++m) {
    if (m > 0) inv.divide_binomial(1, m);
    TruncatedSeries term = inv.shifted(c * m);
    if (sign < 0 && m % 2 == 1) term *= -1;
    acc += term;
  }
  return acc;
}

VerificationReport timed(std::string name, std::size_t order,
                         const std::function<std::optional<Mismatch>()>& body) {
  const auto start = Clock::now();
  VerificationReport report{std::move(name), order, body(), {}};
  report.elapsed = Clock::now() - start;
  return report;
}

std::optional<Mismatch> check_euler_ab(std::size_t order) {
  return first_difference(gf_class(PartitionClassId::A, order),
                          gf_class(PartitionClassId::B, order), "A vs B");
}

std::optional<Mismatch> check_shift_bc(std::size_t order) {
  const TruncatedSeries b = gf_class(PartitionClassId::B, order);
  const TruncatedSeries c = gf_class(PartitionClassId::C, order);
  for (std::size_t n = 1; n < order; ++n)
    if (c[n + 1] != b[n]) return Mismatch{n, c[n + 1], b[n], "C(n+1) vs B(n)"};
  return std::nullopt;
}

std::optional<Mismatch> check_chain_c(std::size_t order) {
  const TruncatedSeries c = gf_class(PartitionClassId::C, order);
  for (CForm form : kAllCForms) {
    auto m = first_difference(gf_c_variant(form, order), c,
                              "form " + std::string(to_string(form)));
    if (m) return m;
  }
  const TruncatedSeries doubled = BigInt(2) * c;
  for (ChainStage stage : kAllChainStages) {
    auto m = first_difference(gf_c_chain_stage(stage, order), doubled,
                              "stage " + std::string(to_string(stage)));
    if (m) return m;
  }
  return std::nullopt;
}

std::optional<Mismatch> check_half_d(std::size_t order) {
  const TruncatedSeries lhs = BigInt(2) * gf_class(PartitionClassId::C, order);
  TruncatedSeries rhs = gf_class(PartitionClassId::D, order);
  rhs[0] += 1;
  if (order >= 1) rhs[1] -= 1;
  return first_difference(lhs, rhs, "2C vs D+1-q");
}

std::optional<Mismatch> check_thm_all(std::size_t order) {
  const TruncatedSeries a = gf_class(PartitionClassId::A, order);
  const TruncatedSeries b = gf_class(PartitionClassId::B, order);
  const TruncatedSeries c = gf_class(PartitionClassId::C, order);
  const TruncatedSeries d = gf_class(PartitionClassId::D, order);
  for (std::size_t n = 2; n + 1 <= order; ++n) {
    if (a[n] != b[n]) return Mismatch{n, a[n], b[n], "A(n) vs B(n)"};
    if (b[n] != c[n + 1]) return Mismatch{n, b[n], c[n + 1], "B(n) vs C(n+1)"};
    if (2 * c[n + 1] != d[n + 1])
      return Mismatch{n, 2 * c[n + 1], d[n + 1], "2C(n+1) vs D(n+1)"};
  }
  return std::nullopt;
}

}  // namespace

VerificationReport euler_expansion_check(std::size_t c, std::size_t order) {
  if (c == 0) throw std::invalid_argument("euler expansion needs c >= 1");
  return timed("euler_t=q^" + std::to_string(c), order, [&]() -> std::optional<Mismatch> {
    for (int sign : {1, -1}) {
      const TruncatedSeries product_side = series_reciprocal(
          pochhammer(PochSpec::infinite(sign, c, 1), order));
      auto m = first_difference(product_side, euler_sum_side(c, sign, order),
                                sign > 0 ? "t=+q^c" : "t=-q^c");
      if (m) return m;
    }
    return std::nullopt;
  });
}

std::string_view to_string(IdentityName name) {
  switch (name) {
    case IdentityName::euler_AB: return "euler_AB";
    case IdentityName::shift_BC: return "shift_BC";
    case IdentityName::chain_C: return "chain_C";
    case IdentityName::half_D: return "half_D";
    case IdentityName::thm_all: return "thm_all";
  }
  return "?";
}

std::optional<IdentityName> parse_identity_name(std::string_view text) {
  for (IdentityName n : kAllIdentities)
    if (to_string(n) == text) return n;
  return std::nullopt;
}

VerificationReport verify_identity(IdentityName name, std::size_t order) {
  std::function<std::optional<Mismatch>()> body;
  switch (name) {
    case IdentityName::euler_AB: body = [&] { return check_euler_ab(order); }; break;
    case IdentityName::shift_BC: body = [&] { return check_shift_bc(order); }; break;
    case IdentityName::chain_C: body = [&] { return check_chain_c(order); }; break;
    case IdentityName::half_D: body = [&] { return check_half_d(order); }; break;
    case IdentityName::thm_all: body = [&] { return check_thm_all(order); }; break;
  }
  return timed(std::string(to_string(name)), order, body);
}

}  // namespace eulerlab
