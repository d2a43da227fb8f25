#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerlab/bigint.hpp"

namespace eulerlab {

// Formal power series in q known exactly modulo q^(order+1).
class TruncatedSeries {
 public:
  // The zero series.
  explicit TruncatedSeries(std::size_t order);
  // Missing high coefficients are zero; extra ones are dropped.
  TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs);

  static TruncatedSeries one(std::size_t order);
  // coeff * q^exponent, or zero when exponent > order.
  static TruncatedSeries monomial(std::size_t order, std::size_t exponent,
                                  const BigInt& coeff = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t exponent) const {
    return coeffs_[exponent];
  }
  BigInt& operator[](std::size_t exponent) { return coeffs_[exponent]; }

  // Smallest exponent with a nonzero coefficient.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  TruncatedSeries truncated(std::size_t new_order) const;
  // Multiplication by q^e.
  TruncatedSeries shifted(std::size_t e) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const BigInt& scalar);

  // In place multiplication by (1 - sign*q^e) and division by the same
  // binomial; sign is +1 or -1. Linear time.
  void multiply_binomial(int sign, std::size_t e);
  void divide_binomial(int sign, std::size_t e);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;
};

// Binary operations on series of different orders truncate to the smaller.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Schoolbook Cauchy product, skipping zero coefficients.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Coefficient recursion; constant term must be +1 or -1, otherwise throws
// InvertibilityError.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_mul(a, b);
}
inline TruncatedSeries operator*(const BigInt& s, TruncatedSeries a) {
  a *= s;
  return a;
}

// Product (1 - sign*q^offset)(1 - sign*q^(offset+step))... with `terms`
// factors, or every factor below the truncation order when terms is empty.
// sign = +1 gives (q^offset; q^step)_m, sign = -1 gives (-q^offset; q^step)_m.
struct PochSpec {
  int sign = 1;
  std::uint64_t offset = 1;
  std::uint64_t step = 1;
  std::optional<std::uint64_t> terms;  // nullopt: infinite product

  // Throws std::invalid_argument for sign not in {+1,-1}, offset or step 0.
  static PochSpec finite(int sign, std::uint64_t offset, std::uint64_t step,
                         std::uint64_t terms);
  static PochSpec infinite(int sign, std::uint64_t offset, std::uint64_t step);

  void validate() const;
};

TruncatedSeries pochhammer(const PochSpec& spec, std::size_t order);

// 1 / pochhammer(spec), built by successive binomial divisions rather than
// by series_reciprocal.
TruncatedSeries reciprocal_pochhammer(const PochSpec& spec, std::size_t order);

// "n<TAB>coefficient" per line for n = 0..order.
void write_series(std::ostream& out, const TruncatedSeries& s);
std::string format_series(const TruncatedSeries& s);
// Inverse of write_series; throws ParseError on gaps or malformed lines.
TruncatedSeries parse_series(std::string_view text);

}  // namespace eulerlab
