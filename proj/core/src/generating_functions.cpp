#include "eulerlab/generating_functions.hpp"

#include <vector>

namespace eulerlab {

namespace {

// acc += q^e * s, where s only needs to be known to order acc.order() - e.
void add_shifted(TruncatedSeries& acc, const TruncatedSeries& s, std::size_t e) {
  for (std::size_t j = 0; j + e <= acc.order() && j <= s.order(); ++j)
    acc[j + e] += s[j];
}

// acc += q^e * a * b, multiplying only what survives below the order.
void add_shifted_product(TruncatedSeries& acc, const TruncatedSeries& a,
                         const TruncatedSeries& b, std::size_t e) {
  if (e > acc.order()) return;
  const std::size_t room = acc.order() - e;
  add_shifted(acc, series_mul(a.truncated(room), b.truncated(room)), e);
}

// 1/(q;q)_k for k = 0..max_k.
std::vector<TruncatedSeries> inverse_q_factorials(std::size_t max_k,
                                                  std::size_t order) {
  std::vector<TruncatedSeries> out;
  out.reserve(max_k + 1);
  out.push_back(TruncatedSeries::one(order));
  for (std::size_t k = 1; k <= max_k; ++k) {
    TruncatedSeries next = out.back();
    next.divide_binomial(1, k);
    out.push_back(std::move(next));
  }
  return out;
}

// 1/(q^2;q^2)_m for m = 0..max_m.
std::vector<TruncatedSeries> inverse_even_q_factorials(std::size_t max_m,
                                                       std::size_t order) {
  std::vector<TruncatedSeries> out;
  out.reserve(max_m + 1);
  out.push_back(TruncatedSeries::one(order));
  for (std::size_t m = 1; m <= max_m; ++m) {
    TruncatedSeries next = out.back();
    next.divide_binomial(1, 2 * m);
    out.push_back(std::move(next));
  }
  return out;
}

TruncatedSeries even_product_infinite(std::size_t order) {
  return pochhammer(PochSpec::infinite(1, 2, 2), order);
}

TruncatedSeries gf_d(std::size_t order) {
  // (-q^{m+1};q)_inf obtained from (-q^m;q)_inf by removing the factor 1+q^m
  TruncatedSeries tail = pochhammer(PochSpec::infinite(-1, 1, 1), order);
  TruncatedSeries acc(order);
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    if (m > 0) tail.divide_binomial(-1, m);
    add_shifted(acc, tail, 2 * m);
  }
  return acc;
}

TruncatedSeries c_sum_over_largest(std::size_t order, bool include_constant) {
  TruncatedSeries acc = include_constant ? TruncatedSeries::one(order)
                                         : TruncatedSeries(order);
  TruncatedSeries distinct_small = TruncatedSeries::one(order);  // (-q;q)_n
  for (std::size_t n = 1; 2 * n <= order; ++n) {
    distinct_small.multiply_binomial(-1, n);
    TruncatedSeries term = distinct_small.shifted(2 * n);
    for (std::size_t e = n + 1; e <= 2 * n; ++e) term.divide_binomial(1, e);
    acc += term;
  }
  return acc;
}

TruncatedSeries c_even_poch_ratio(std::size_t order, bool include_constant) {
  TruncatedSeries acc = include_constant ? TruncatedSeries::one(order)
                                         : TruncatedSeries(order);
  TruncatedSeries even_poch = TruncatedSeries::one(order);  // (q^2;q^2)_n
  for (std::size_t n = 1; 2 * n <= order; ++n) {
    even_poch.multiply_binomial(1, 2 * n);
    TruncatedSeries term = even_poch.shifted(2 * n);
    for (std::size_t e = 1; e <= 2 * n; ++e) term.divide_binomial(1, e);
    acc += term;
  }
  return acc;
}

TruncatedSeries c_odd_poch_ratio(std::size_t order, bool include_constant) {
  TruncatedSeries acc = include_constant ? TruncatedSeries::one(order)
                                         : TruncatedSeries(order);
  TruncatedSeries inv_odd = TruncatedSeries::one(order);  // 1/(q;q^2)_n
  for (std::size_t n = 1; 2 * n <= order; ++n) {
    inv_odd.divide_binomial(1, 2 * n - 1);
    add_shifted(acc, inv_odd, 2 * n);
  }
  return acc;
}

TruncatedSeries stage_factored(std::size_t order) {
  TruncatedSeries sum(order);
  for (std::size_t n = 0; 2 * n <= order; ++n) {
    TruncatedSeries term = TruncatedSeries::monomial(order, 2 * n);
    for (std::size_t e = 1; e <= 2 * n; ++e) term.divide_binomial(1, e);
    for (std::size_t e = 2 * n + 2; e <= order; e += 2)
      term.divide_binomial(1, e);
    sum += term;
  }
  return BigInt(2) * series_mul(even_product_infinite(order), sum);
}

TruncatedSeries stage_double_sum(std::size_t order) {
  const auto inv_q = inverse_q_factorials(order, order);
  const auto inv_q2 = inverse_even_q_factorials(order / 2, order);
  TruncatedSeries sum(order);
  for (std::size_t n = 0; 2 * n <= order; ++n) {
    for (std::size_t m = 0;; ++m) {
      const std::size_t e = 2 * n + 2 * n * m + 2 * m;
      if (e > order) break;
      add_shifted_product(sum, inv_q[2 * n], inv_q2[m], e);
    }
  }
  return BigInt(2) * series_mul(even_product_infinite(order), sum);
}

TruncatedSeries stage_split_sum(std::size_t order) {
  const auto inv_q = inverse_q_factorials(order, order);
  const auto inv_q2 = inverse_even_q_factorials(order / 2, order);
  TruncatedSeries sum(order);
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    // n-sum for this m, each summand weighted by 1 + (-1)^n
    TruncatedSeries inner(order - 2 * m);
    for (std::size_t n = 0; n * (m + 1) <= inner.order(); ++n) {
      const int weight = 1 + (n % 2 == 0 ? 1 : -1);
      if (weight == 0) continue;
      TruncatedSeries term = inv_q[n].truncated(inner.order()).shifted(n * (m + 1));
      term *= weight;
      inner += term;
    }
    add_shifted_product(sum, inner, inv_q2[m], 2 * m);
  }
  return series_mul(even_product_infinite(order), sum);
}

TruncatedSeries stage_bracket_reciprocals(std::size_t order) {
  const auto inv_q2 = inverse_even_q_factorials(order / 2, order);
  TruncatedSeries sum(order);
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    const std::size_t room = order - 2 * m;
    TruncatedSeries bracket =
        reciprocal_pochhammer(PochSpec::infinite(1, m + 1, 1), room) +
        reciprocal_pochhammer(PochSpec::infinite(-1, m + 1, 1), room);
    add_shifted_product(sum, bracket, inv_q2[m], 2 * m);
  }
  return series_mul(even_product_infinite(order), sum);
}

TruncatedSeries stage_final(std::size_t order) {
  TruncatedSeries sum = TruncatedSeries::one(order);
  if (order >= 1) sum[1] -= 1;
  for (std::size_t m = 0; 2 * m <= order; ++m)
    add_shifted(sum, pochhammer(PochSpec::infinite(-1, m + 1, 1), order - 2 * m),
                2 * m);
  return sum;
}

}  // namespace

TruncatedSeries gf_class(PartitionClassId c, std::size_t order) {
  switch (c) {
    case PartitionClassId::A:
      return pochhammer(PochSpec::infinite(-1, 1, 1), order);
    case PartitionClassId::B:
      return series_reciprocal(pochhammer(PochSpec::infinite(1, 1, 2), order));
    case PartitionClassId::C:
      return c_sum_over_largest(order, true);
    case PartitionClassId::D:
      return gf_d(order);
  }
  return TruncatedSeries(order);
}

TruncatedSeries gf_b_largest_part_sum(std::size_t order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  TruncatedSeries inv_odd = TruncatedSeries::one(order);  // 1/(q;q^2)_n
  for (std::size_t n = 1; 2 * n - 1 <= order; ++n) {
    inv_odd.divide_binomial(1, 2 * n - 1);
    add_shifted(acc, inv_odd, 2 * n - 1);
  }
  return acc;
}

std::string_view to_string(CForm form) {
  switch (form) {
    case CForm::sum_over_largest: return "sum_over_largest";
    case CForm::even_poch_ratio: return "even_poch_ratio";
    case CForm::odd_poch_ratio: return "odd_poch_ratio";
  }
  return "?";
}

std::optional<CForm> parse_c_form(std::string_view text) {
  for (CForm f : kAllCForms)
    if (to_string(f) == text) return f;
  return std::nullopt;
}

TruncatedSeries gf_c_variant(CForm form, std::size_t order,
                             bool include_constant) {
  switch (form) {
    case CForm::sum_over_largest:
      return c_sum_over_largest(order, include_constant);
    case CForm::even_poch_ratio:
      return c_even_poch_ratio(order, include_constant);
    case CForm::odd_poch_ratio:
      return c_odd_poch_ratio(order, include_constant);
  }
  return TruncatedSeries(order);
}

std::string_view to_string(ChainStage stage) {
  switch (stage) {
    case ChainStage::factored: return "factored";
    case ChainStage::double_sum: return "double_sum";
    case ChainStage::split_sum: return "split_sum";
    case ChainStage::bracket_reciprocals: return "bracket_reciprocals";
    case ChainStage::final: return "final";
  }
  return "?";
}

std::optional<ChainStage> parse_chain_stage(std::string_view text) {
  for (ChainStage s : kAllChainStages)
    if (to_string(s) == text) return s;
  return std::nullopt;
}

TruncatedSeries gf_c_chain_stage(ChainStage stage, std::size_t order) {
  switch (stage) {
    case ChainStage::factored: return stage_factored(order);
    case ChainStage::double_sum: return stage_double_sum(order);
    case ChainStage::split_sum: return stage_split_sum(order);
    case ChainStage::bracket_reciprocals: return stage_bracket_reciprocals(order);
    case ChainStage::final: return stage_final(order);
  }
  return TruncatedSeries(order);
}

}  // namespace eulerlab
