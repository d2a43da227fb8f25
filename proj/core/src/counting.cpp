#include "eulerlab/counting.hpp"

#include <algorithm>

#include "eulerlab/generating_functions.hpp"

namespace eulerlab {

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::enumeration: return "enumeration";
    case CountMethod::dynamic_program: return "dynamic-program";
    case CountMethod::series_coefficient: return "series-coefficient";
  }
  return "?";
}

std::optional<CountMethod> parse_count_method(std::string_view text) {
  for (CountMethod m : kAllCountMethods)
    if (to_string(m) == text) return m;
  return std::nullopt;
}

namespace {

std::vector<BigInt> dp_distinct(std::uint32_t max_n) {
  std::vector<BigInt> ways(max_n + 1);
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= max_n; ++part)
    for (std::uint32_t w = max_n; w >= part; --w) ways[w] += ways[w - part];
  return ways;
}

std::vector<BigInt> dp_odd(std::uint32_t max_n) {
  std::vector<BigInt> ways(max_n + 1);
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= max_n; part += 2)
    for (std::uint32_t w = part; w <= max_n; ++w) ways[w] += ways[w - part];
  return ways;
}

std::vector<BigInt> dp_c(std::uint32_t max_n) {
  std::vector<BigInt> total(max_n + 1);
  total[0] = 1;  // C(0) = 1 by convention
  std::vector<BigInt> distinct(max_n + 1);
  distinct[0] = 1;
  for (std::uint32_t half = 1; 2 * half <= max_n; ++half) {
    // distinct parts <= half
    for (std::uint32_t w = max_n; w >= half; --w) distinct[w] += distinct[w - half];
    // unrestricted parts in (half, 2*half]
    std::vector<BigInt> free(max_n + 1);
    free[0] = 1;
    for (std::uint32_t part = half + 1; part <= 2 * half; ++part)
      for (std::uint32_t w = part; w <= max_n; ++w) free[w] += free[w - part];
    // one mandatory part 2*half
    const std::uint32_t budget = max_n - 2 * half;
    for (std::uint32_t i = 0; i <= budget; ++i) {
      if (sgn(distinct[i]) == 0) continue;
      for (std::uint32_t j = 0; i + j <= budget; ++j)
        mpz_addmul(total[2 * half + i + j].get_mpz_t(),
                   distinct[i].get_mpz_t(), free[j].get_mpz_t());
    }
  }
  return total;
}

std::vector<BigInt> dp_d(std::uint32_t max_n) {
  const std::vector<BigInt> a = dp_distinct(max_n);
  std::vector<BigInt> d(max_n + 1);
  d[0] = 1;
  if (max_n >= 1) d[1] = 1;
  for (std::uint32_t n = 2; n <= max_n; ++n) d[n] = 2 * a[n - 1];
  return d;
}

// Brute-force count with the C(0) = 1 convention applied; the empty partition
// itself is not a member of C.
BigInt enumerated_count(std::uint32_t n, PartitionClassId c,
                        std::uint32_t cutoff) {
  if (c == PartitionClassId::C && n == 0) return 1;
  return BigInt(static_cast<unsigned long>(count_by_enumeration(n, c, cutoff)));
}

}  // namespace

std::vector<BigInt> dp_counts(PartitionClassId c, std::uint32_t max_n) {
  switch (c) {
    case PartitionClassId::A: return dp_distinct(max_n);
    case PartitionClassId::B: return dp_odd(max_n);
    case PartitionClassId::C: return dp_c(max_n);
    case PartitionClassId::D: return dp_d(max_n);
  }
  return {};
}

CountTable count_table(PartitionClassId c, std::uint32_t max_n,
                       CountMethod method, std::uint32_t cutoff) {
  CountTable table{c, method, {}};
  switch (method) {
    case CountMethod::enumeration:
      table.values.reserve(max_n + 1);
      for (std::uint32_t n = 0; n <= max_n; ++n)
        table.values.push_back(enumerated_count(n, c, cutoff));
      break;
    case CountMethod::dynamic_program:
      table.values = dp_counts(c, max_n);
      break;
    case CountMethod::series_coefficient: {
      const TruncatedSeries s = gf_class(c, max_n);
      table.values.assign(s.coeffs().begin(), s.coeffs().end());
      break;
    }
  }
  return table;
}

BigInt Counter::count(std::uint32_t n, PartitionClassId c, CountMethod method) {
  if (method == CountMethod::enumeration)
    return enumerated_count(n, c, cutoff_);
  auto& values = cache_[{c, method}];
  if (n >= values.size()) {
    // grow geometrically so ascending queries stay cheap
    const std::uint32_t target =
        std::max<std::uint32_t>(n, static_cast<std::uint32_t>(2 * values.size()));
    values = count_table(c, target, method, cutoff_).values;
  }
  return values[n];
}

BigInt count_class(std::uint32_t n, PartitionClassId c, CountMethod method,
                   std::uint32_t cutoff) {
  return Counter(cutoff).count(n, c, method);
}

}  // namespace eulerlab
