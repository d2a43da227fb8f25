#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "eulerlab/partition.hpp"
#include "eulerlab/series.hpp"

namespace eulerlab {

// Generating function of a partition class, with C(0) = 1 and
// D(0) = D(1) = 1 so that 2*C(q) = D(q) + 1 - q holds at every order.
//   A: (-q;q)_inf
//   B: 1/(q;q^2)_inf
//   C: 1 + sum_{n>=1} (-q;q)_n q^{2n} / (q^{n+1};q)_n
//   D: sum_{m>=0} q^{2m} (-q^{m+1};q)_inf
TruncatedSeries gf_class(PartitionClassId c, std::size_t order);

// B built as 1 + sum_{n>=1} q^{2n-1}/(q;q^2)_n, i.e. one summand per
// largest part 2n-1, independent of the product form used by gf_class.
TruncatedSeries gf_b_largest_part_sum(std::size_t order);

// The three equal forms of the C generating function.
enum class CForm {
  sum_over_largest,  // (-q;q)_n q^{2n} / (q^{n+1};q)_n
  even_poch_ratio,   // (q^2;q^2)_n q^{2n} / (q;q)_{2n}
  odd_poch_ratio,    // q^{2n} / (q;q^2)_n
};

inline constexpr CForm kAllCForms[] = {CForm::sum_over_largest,
                                       CForm::even_poch_ratio,
                                       CForm::odd_poch_ratio};

std::string_view to_string(CForm form);
std::optional<CForm> parse_c_form(std::string_view text);

// Sum over n >= 0 of the named summand (the n = 0 term is 1). With
// include_constant = false the sum starts at n = 1 and the constant term is
// zero.
TruncatedSeries gf_c_variant(CForm form, std::size_t order,
                             bool include_constant = true);

// Successive stages of the derivation relating C and D. Every stage is
// returned doubled so the halves in the derivation stay integral; each one
// equals 2 * gf_class(C).
enum class ChainStage {
  // 2 (q^2;q^2)_inf sum_n q^{2n} / ((q;q)_{2n} (q^{2n+2};q^2)_inf)
  factored,
  // 2 (q^2;q^2)_inf sum_{m,n} q^{2n+2nm+2m} / ((q;q)_{2n} (q^2;q^2)_m)
  double_sum,
  // (q^2;q^2)_inf sum_{m,n} (1+(-1)^n) q^{n+nm+2m} / ((q;q)_n (q^2;q^2)_m)
  split_sum,
  // (q^2;q^2)_inf sum_m q^{2m}/(q^2;q^2)_m
  //     * (1/(q^{m+1};q)_inf + 1/(-q^{m+1};q)_inf)
  bracket_reciprocals,
  // sum_m q^{2m} (-q^{m+1};q)_inf + 1 - q
  final,
};

inline constexpr ChainStage kAllChainStages[] = {
    ChainStage::factored, ChainStage::double_sum, ChainStage::split_sum,
    ChainStage::bracket_reciprocals, ChainStage::final};

std::string_view to_string(ChainStage stage);
std::optional<ChainStage> parse_chain_stage(std::string_view text);

TruncatedSeries gf_c_chain_stage(ChainStage stage, std::size_t order);

}  // namespace eulerlab
