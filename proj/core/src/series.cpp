#include "eulerlab/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eulerlab/errors.hpp"

namespace eulerlab {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  return monomial(order, 0);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order,
                                          std::size_t exponent,
                                          const BigInt& coeff) {
  TruncatedSeries s(order);
  if (exponent <= order) s.coeffs_[exponent] = coeff;
  return s;
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) return j;
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(
      new_order, std::vector<BigInt>(coeffs_.begin(),
                                     coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t e) const {
  TruncatedSeries out(order());
  for (std::size_t j = 0; j + e <= order(); ++j) out.coeffs_[j + e] = coeffs_[j];
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void TruncatedSeries::multiply_binomial(int sign, std::size_t e) {
  if (e > order()) return;
  // descending so that coeffs_[j - e] is still the input value
  for (std::size_t j = order(); j >= e; --j) {
    if (sign > 0)
      coeffs_[j] -= coeffs_[j - e];
    else
      coeffs_[j] += coeffs_[j - e];
    if (j == 0) break;
  }
}

void TruncatedSeries::divide_binomial(int sign, std::size_t e) {
  if (e > order()) return;
  if (e == 0) throw InvertibilityError("division by 1 - sign*q^0");
  // b_j = a_j + sign * b_{j-e}, ascending
  for (std::size_t j = e; j <= order(); ++j) {
    if (sign > 0)
      coeffs_[j] += coeffs_[j - e];
    else
      coeffs_[j] -= coeffs_[j - e];
  }
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a.truncated(std::min(a.order(), b.order()));
  out += b;
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries out = a.truncated(order);
  out -= b;
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigInt> out(order + 1);
  const auto va = a.valuation();
  const auto vb = b.valuation();
  if (!va || !vb) return TruncatedSeries(order, std::move(out));
  for (std::size_t i = *va; i + *vb <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = *vb; i + j <= order; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  const BigInt& a0 = a[0];
  if (a0 != 1 && a0 != -1)
    throw InvertibilityError("constant term " + a0.get_str() +
                             " is not a unit");
  const std::size_t order = a.order();
  std::vector<BigInt> b(order + 1);
  b[0] = a0;  // 1/a0 = a0 for a unit
  BigInt acc;
  for (std::size_t j = 1; j <= order; ++j) {
    acc = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      if (sgn(a[i]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[j - i].get_mpz_t());
    }
    b[j] = -a0 * acc;
  }
  return TruncatedSeries(order, std::move(b));
}

PochSpec PochSpec::finite(int sign, std::uint64_t offset, std::uint64_t step,
                          std::uint64_t terms) {
  PochSpec spec{sign, offset, step, terms};
  spec.validate();
  return spec;
}

PochSpec PochSpec::infinite(int sign, std::uint64_t offset,
                            std::uint64_t step) {
  PochSpec spec{sign, offset, step, std::nullopt};
  spec.validate();
  return spec;
}

void PochSpec::validate() const {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("pochhammer sign must be +1 or -1");
  if (offset < 1) throw std::invalid_argument("pochhammer offset must be >= 1");
  if (step < 1) throw std::invalid_argument("pochhammer step must be >= 1");
}

namespace {

// Calls f(e) for every factor exponent that can still touch the series.
template <typename F>
void for_each_factor(const PochSpec& spec, std::size_t order, F&& f) {
  spec.validate();
  for (std::uint64_t i = 0; !spec.terms || i < *spec.terms; ++i) {
    const std::uint64_t e = spec.offset + spec.step * i;
    if (e > order) break;
    f(static_cast<std::size_t>(e));
  }
}

}  // namespace

TruncatedSeries pochhammer(const PochSpec& spec, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for_each_factor(spec, order, [&](std::size_t e) { s.multiply_binomial(spec.sign, e); });
  return s;
}

TruncatedSeries reciprocal_pochhammer(const PochSpec& spec, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for_each_factor(spec, order, [&](std::size_t e) { s.divide_binomial(spec.sign, e); });
  return s;
}

void write_series(std::ostream& out, const TruncatedSeries& s) {
  for (std::size_t j = 0; j <= s.order(); ++j)
    out << j << '\t' << s[j].get_str() << '\n';
}

std::string format_series(const TruncatedSeries& s) {
  std::ostringstream out;
  write_series(out, s);
  return out.str();
}

TruncatedSeries parse_series(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("series line without tab: " + std::string(line));
    if (line.substr(0, tab) != std::to_string(coeffs.size()))
      throw ParseError("series exponent out of sequence: " + std::string(line));
    BigInt value;
    if (value.set_str(std::string(line.substr(tab + 1)), 10) != 0)
      throw ParseError("bad coefficient: " + std::string(line));
    coeffs.push_back(std::move(value));
  }
  if (coeffs.empty()) throw ParseError("empty series");
  const std::size_t order = coeffs.size() - 1;
  return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace eulerlab
